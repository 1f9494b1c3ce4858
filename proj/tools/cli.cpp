#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "xlap/config.hpp"
#include "xlap/errors.hpp"

namespace xlap::cli {

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

double parse_real(std::string s) {
    double sign = 1.0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        std::string mult = s.substr(0, s.size() - 2);
        if (!mult.empty() && mult.back() == '*') mult.pop_back();
        return sign * kPi * (mult.empty() ? 1.0 : parse_real(mult));
    }
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("not a number: '" + s + "'");
    return sign * v;
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }
cplx cfrom(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json num(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json params_json(const verify::FnParams& p) {
    return {{"beta", cjson(p.beta)}, {"w", p.w}, {"k", p.k}, {"m", p.m}, {"p", cjson(p.p)}, {"u", cjson(p.u)}};
}

json grid_json(const verify::Grid& g) {
    return {{"start", g.start}, {"stop", g.stop}, {"count", g.count}, {"log", g.log}};
}

std::string scan_anchor(const std::string& kind, const std::string& fn) {
    static const std::map<std::pair<std::string, std::string>, std::string> table = {
        {{"positivity", "P4w"}, "Lemma 6.2 (2)"},  {{"positivity", "T0ir"}, "Lemma 6.1 (2)"},
        {{"positivity", "Hshift"}, "Lemma 5.4 (2)"}, {{"positivity", "H"}, "Lemma 5.4 (2)"},
        {{"positivity", "lk"}, "Lemma 1.2 (3)"},   {{"monotone", "P0"}, "Theorem 3.3"},
        {{"monotone", "P4w"}, "Lemma 6.2 (1)"},    {{"monotone", "Hshift"}, "Lemma 5.4 (1)"},
        {{"monotone", "H"}, "Lemma 5.4 (1)"},      {{"growth", "P0"}, "Theorem 3.2 (ii)"},
        {{"growth", "P4w"}, "Theorem 6.1 (4)"},    {{"decay", ""}, "Theorem 3.1"},
    };
    if (fn == "r2probe" || fn == "negprobe") return "self-test";
    auto it = table.find({kind, kind == "decay" ? "" : fn});
    return it == table.end() ? "unanchored" : it->second;
}

json scan_json(const verify::ScanResult& r, const std::string& fn, const verify::FnParams& p) {
    json j = {{"kind", r.kind},
              {"target", r.target},
              {"anchor", scan_anchor(r.kind, fn)},
              {"params", params_json(p)},
              {"grid", grid_json(r.grid)},
              {"min", num(r.min)},
              {"max", num(r.max)},
              {"sign_changes", r.sign_changes},
              {"monotone", r.monotone},
              {"exponent", r.exponent ? num(*r.exponent) : json(nullptr)}};
    return j;
}

json check_json(const verify::IdentityCheck& c) {
    json worst = nullptr;
    double wr = -1.0;
    for (const auto& s : c.samples) {
        double r = std::isnan(s.residual) ? INFINITY : s.residual;
        if (r > wr) {
            wr = r;
            worst = {{"label", s.label}, {"point", cjson(s.point)}, {"beta", cjson(s.beta)}, {"w", s.w}};
        }
    }
    return {{"id", c.entry.id},
            {"anchor", c.entry.anchor},
            {"description", c.entry.description},
            {"domain", c.entry.domain},
            {"n_samples", c.samples.size()},
            {"max_residual", num(c.max_residual)},
            {"tolerance", c.tolerance},
            {"pass", c.pass},
            {"error", c.error},
            {"worst", worst}};
}

json report_base(const RunConfig& c) {
    return {{"version", verify::version}, {"config", to_json(c)}, {"checks", json::array()}, {"scans", json::array()}};
}

void set_context(const RunConfig& c) {
    context().precision = c.precision == "extended" ? Precision::extended : Precision::standard;
    context().sieve_bound = c.sieve_bound;
}

std::vector<double> eval_inputs(const RunConfig& c, std::vector<cplx>& pts) {
    if (!c.points.empty()) {
        pts = c.points;
        return {};
    }
    if (!c.grid) throw DomainError("eval needs --grid or --points");
    auto xs = c.grid->grid.points();
    for (double x : xs) pts.emplace_back(x, 0.0);
    return xs;
}

int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<cplx> pts;
    eval_inputs(c, pts);
    const auto& ev = verify::registry().at(c.fn);
    std::vector<cplx> vals;
    for (cplx z : pts) {
        try {
            vals.push_back(ev(z, c.params));
        } catch (const std::exception& e) {
            err << "evaluation failed at " << fmt(z.real()) << (z.imag() < 0 ? "" : "+") << fmt(z.imag())
                << "i: " << e.what() << "\n";
            return eval_error;
        }
    }
    if (c.format == "csv") {
        out << "input_re,input_im,value_re,value_im,err_estimate\n";
        for (size_t i = 0; i < pts.size(); ++i)
            out << fmt(pts[i].real()) << ',' << fmt(pts[i].imag()) << ',' << fmt(vals[i].real()) << ','
                << fmt(vals[i].imag()) << ",\n";
        return ok;
    }
    json rows = json::array();
    for (size_t i = 0; i < pts.size(); ++i)
        rows.push_back({{"input_re", pts[i].real()},
                        {"input_im", pts[i].imag()},
                        {"value_re", num(vals[i].real())},
                        {"value_im", num(vals[i].imag())},
                        {"err_estimate", nullptr}});
    json r = {{"version", verify::version}, {"config", to_json(c)}, {"rows", rows}};
    out << r.dump(2) << "\n";
    return ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out, double& wall_ms) {
    auto ids = verify::parse_suite(c.suite);
    verify::IdentityParams P;
    P.seed = c.seed;
    P.tol = c.tol;
    P.n_samples = c.samples;
    if (c.beta_set) P.beta = c.params.beta;
    if (c.w_set) P.w = c.params.w;
    if (c.p_set) P.p = c.params.p;
    P.points = c.points;
    auto t0 = std::chrono::steady_clock::now();
    auto results = verify::run_suite(ids, P, c.jobs);
    wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json r = report_base(c);
    bool all = true;
    for (const auto& res : results) {
        r["checks"].push_back(check_json(res));
        all = all && res.pass;
    }
    r["wall_ms"] = c.timing ? wall_ms : 0.0;
    out << r.dump(2) << "\n";
    return all ? ok : failed;
}

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
    verify::ScanResult res;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (c.kind == "decay") {
            res = verify::decay_scan(c.x, c.params.beta.real(), c.grid ? c.grid->grid.count : 400);
        } else {
            if (c.fn.empty()) throw DomainError("scan needs --fn");
            if (!c.grid) throw DomainError("scan needs --grid");
            auto f = verify::real_target(c.fn, c.params);
            const auto& g = c.grid->grid;
            if (c.kind == "positivity") res = verify::scan_positivity(c.fn, f, g);
            else if (c.kind == "monotone") res = verify::scan_monotone(c.fn, f, g);
            else if (c.kind == "growth") res = verify::fit_growth(c.fn, f, g);
            else throw DomainError("unknown scan kind: " + c.kind);
        }
    } catch (const DomainError& e) {
        err << "scan: " << e.what() << "\n";
        return config_error;
    } catch (const std::exception& e) {
        err << "scan: evaluation failed: " << e.what() << "\n";
        return eval_error;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json r = report_base(c);
    r["scans"].push_back(scan_json(res, c.fn, c.params));
    r["wall_ms"] = c.timing ? ms : 0.0;
    out << r.dump(2) << "\n";
    return ok;
}

int cmd_metric(const RunConfig& c, std::ostream& out, std::ostream& err) {
    verify::MetricResult m;
    auto t0 = std::chrono::steady_clock::now();
    try {
        m = verify::metric_check(c.x, c.params.beta.real(), c.samples.value_or(10000), c.seed);
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return config_error;
    } catch (const std::exception& e) {
        err << "metric: evaluation failed: " << e.what() << "\n";
        return eval_error;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json r = report_base(c);
    r["scans"].push_back({{"kind", "metric"},
                          {"anchor", "Corollary 6.2"},
                          {"x", m.x},
                          {"beta", m.beta},
                          {"n_samples", m.n_samples},
                          {"seed", m.seed},
                          {"m0", m.m0},
                          {"symmetry_max", num(m.symmetry_max)},
                          {"worst_slack", num(m.worst_slack)},
                          {"violations", m.violations},
                          {"positive", m.positive},
                          {"pass", m.pass}});
    r["wall_ms"] = c.timing ? ms : 0.0;
    out << r.dump(2) << "\n";
    return m.pass ? ok : failed;
}

}  // namespace

bool GridSpec::operator==(const GridSpec& o) const {
    return text == o.text && grid.start == o.grid.start && grid.stop == o.grid.stop && grid.count == o.grid.count &&
           grid.log == o.grid.log;
}

bool RunConfig::operator==(const RunConfig& o) const {
    auto pe = [](const verify::FnParams& a, const verify::FnParams& b) {
        return a.beta == b.beta && a.w == b.w && a.k == b.k && a.m == b.m && a.p == b.p && a.u == b.u;
    };
    return command == o.command && fn == o.fn && pe(params, o.params) && grid == o.grid && points == o.points &&
           suite == o.suite && tol == o.tol && samples == o.samples && kind == o.kind && x == o.x &&
           precision == o.precision && sieve_bound == o.sieve_bound && seed == o.seed && out == o.out &&
           format == o.format && jobs == o.jobs && timing == o.timing && beta_set == o.beta_set &&
           w_set == o.w_set && p_set == o.p_set;
}

GridSpec parse_grid(const std::string& text) {
    std::string s = text;
    bool log = false;
    if (s.rfind("log:", 0) == 0) {
        log = true;
        s.erase(0, 4);
    }
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw DomainError("grid must be start:stop:count, got '" + text + "'");
    GridSpec g;
    g.text = text;
    g.grid.start = parse_real(parts[0]);
    g.grid.stop = parse_real(parts[1]);
    double n = parse_real(parts[2]);
    if (n != std::floor(n) || n < 2 || n > 1e8) throw DomainError("grid count must be an integer >= 2");
    g.grid.count = int(n);
    g.grid.log = log;
    g.grid.points();  // validates order and log positivity
    return g;
}

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty complex value");
    if (s.back() != 'i') return parse_real(s);
    try {
        return parse_real(s);  // "pi", "2pi"
    } catch (const DomainError&) {
    }
    s.pop_back();
    size_t k = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            k = i;
            break;
        }
    }
    auto imag = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (k == std::string::npos) return {0.0, imag(s)};
    return {parse_real(s.substr(0, k)), imag(s.substr(k))};
}

json to_json(const RunConfig& c) {
    json pts = json::array();
    for (cplx z : c.points) pts.push_back(cjson(z));
    json grid = nullptr;
    if (c.grid) {
        grid = grid_json(c.grid->grid);
        grid["text"] = c.grid->text;
    }
    return {{"command", c.command},
            {"fn", c.fn},
            {"params", params_json(c.params)},
            {"beta_set", c.beta_set},
            {"w_set", c.w_set},
            {"p_set", c.p_set},
            {"grid", grid},
            {"points", pts},
            {"suite", c.suite},
            {"tol", c.tol ? json(*c.tol) : json(nullptr)},
            {"samples", c.samples ? json(*c.samples) : json(nullptr)},
            {"kind", c.kind},
            {"x", c.x},
            {"precision", c.precision},
            {"sieve_bound", c.sieve_bound},
            {"seed", c.seed},
            {"out", c.out},
            {"format", c.format},
            {"jobs", c.jobs},
            {"timing", c.timing}};
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.command = j.at("command");
    c.fn = j.at("fn");
    const auto& p = j.at("params");
    c.params.beta = cfrom(p.at("beta"));
    c.params.w = p.at("w");
    c.params.k = p.at("k");
    c.params.m = p.at("m");
    c.params.p = cfrom(p.at("p"));
    c.params.u = cfrom(p.at("u"));
    c.beta_set = j.at("beta_set");
    c.w_set = j.at("w_set");
    c.p_set = j.at("p_set");
    if (!j.at("grid").is_null()) c.grid = parse_grid(j.at("grid").at("text"));
    for (const auto& z : j.at("points")) c.points.push_back(cfrom(z));
    c.suite = j.at("suite");
    if (!j.at("tol").is_null()) c.tol = j.at("tol").get<double>();
    if (!j.at("samples").is_null()) c.samples = j.at("samples").get<int>();
    c.kind = j.at("kind");
    c.x = j.at("x");
    c.precision = j.at("precision");
    c.sieve_bound = j.at("sieve_bound");
    c.seed = j.at("seed");
    c.out = j.at("out");
    c.format = j.at("format");
    c.jobs = j.at("jobs");
    c.timing = j.at("timing");
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    set_context(c);
    std::ofstream file;
    std::ostream* os = &out;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            err << "cannot open " << c.out << "\n";
            return config_error;
        }
        os = &file;
    }
    try {
        if (c.command == "eval") return cmd_eval(c, *os, err);
        if (c.command == "verify") {
            double ms = 0.0;
            return cmd_verify(c, *os, ms);
        }
        if (c.command == "scan") return cmd_scan(c, *os, err);
        if (c.command == "metric") return cmd_metric(c, *os, err);
    } catch (const UnknownIdentityError& e) {
        err << e.what() << "\n";
        return config_error;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return config_error;
    }
    err << "unknown command: " << c.command << "\n";
    return config_error;
}

int main_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"xlap: special functions and transform identities, evaluated and checked"};
    app.require_subcommand(1, 1);

    RunConfig c;
    std::string beta, p, u, grid, tol;
    std::vector<std::string> points;
    std::optional<std::string> precision;
    std::optional<std::int64_t> sieve;

    std::vector<std::string> names;
    for (const auto& kv : verify::registry()) names.push_back(kv.first);

    auto common = [&](CLI::App* s) {
        s->add_option("--seed", c.seed, "sample seed");
        s->add_option("--precision", precision, "standard or extended")->check(CLI::IsMember({"standard", "extended"}));
        s->add_option("--sieve-bound", sieve, "Möbius sieve bound")->check(CLI::PositiveNumber);
        s->add_option("--out", c.out, "output file (stdout when omitted)");
        s->add_flag("--timing", c.timing, "record wall time in the report");
    };
    auto fnparams = [&](CLI::App* s) {
        s->add_option("--beta", beta, "β, real or complex (a+bi)");
        s->add_option("--w", c.params.w, "shift index w")->check(CLI::NonNegativeNumber);
        s->add_option("--k", c.params.k, "index k");
        s->add_option("--m", c.params.m, "order m")->check(CLI::PositiveNumber);
        s->add_option("--p", p, "p, real or complex");
        s->add_option("--u", u, "u, real or complex");
    };

    auto* ev = app.add_subcommand("eval", "evaluate a function on a grid or at points");
    common(ev);
    fnparams(ev);
    ev->add_option("--fn", c.fn, "function id")->required()->check(CLI::IsMember(names));
    ev->add_option("--grid", grid, "start:stop:count, log: prefix for log spacing");
    ev->add_option("--points", points, "comma separated points")->delimiter(',');
    ev->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* vf = app.add_subcommand("verify", "run identity checks");
    common(vf);
    fnparams(vf);
    vf->add_option("--suite", c.suite, "all or a comma separated list of ids");
    vf->add_option("--tol", tol, "tolerance override, or 'default'");
    vf->add_option("--samples", c.samples, "samples per identity")->check(CLI::PositiveNumber);
    vf->add_option("--points", points, "explicit sample points")->delimiter(',');
    vf->add_option("--jobs", c.jobs, "parallel identities")->check(CLI::PositiveNumber);

    auto* sc = app.add_subcommand("scan", "positivity, monotonicity, growth and decay scans");
    common(sc);
    fnparams(sc);
    sc->add_option("--kind", c.kind, "positivity, monotone, growth or decay")
        ->required()
        ->check(CLI::IsMember({"positivity", "monotone", "growth", "decay"}));
    sc->add_option("--fn", c.fn, "function id")->check(CLI::IsMember(names));
    sc->add_option("--grid", grid, "start:stop:count, log: prefix for log spacing");
    sc->add_option("--x", c.x, "real part for the decay scan");

    auto* mt = app.add_subcommand("metric", "sample the metric axioms of m(t)");
    common(mt);
    mt->add_option("--x", c.x, "real part x")->required();
    mt->add_option("--beta", beta, "β >= 0");
    mt->add_option("--samples", c.samples, "triangle trials")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return config_error;
    }

    try {
        c.command = app.get_subcommands().front()->get_name();
        if (c.command == "metric") c.params.beta = 0.25;
        if (!beta.empty()) {
            c.params.beta = parse_complex(beta);
            c.beta_set = true;
        }
        auto* wopt = app.get_subcommands().front()->get_option_no_throw("--w");
        c.w_set = wopt && wopt->count() > 0;
        if (!p.empty()) {
            c.params.p = parse_complex(p);
            c.p_set = true;
        }
        if (!u.empty()) c.params.u = parse_complex(u);
        if (!grid.empty()) c.grid = parse_grid(grid);
        for (const auto& s : points) c.points.push_back(parse_complex(s));
        if (!tol.empty() && tol != "default") {
            double t = parse_real(tol);
            if (!(t > 0.0)) throw DomainError("--tol must be positive");
            c.tol = t;
        }
        if (c.command == "verify") verify::parse_suite(c.suite);
        context() = Context{};
        apply_env_overrides();
        c.precision = precision.value_or(context().precision == Precision::extended ? "extended" : "standard");
        c.sieve_bound = sieve.value_or(context().sieve_bound);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return config_error;
    }
    return run(c, out, err);
}

}  // namespace xlap::cli
