// Command-line front end: experiment configs in, CSV/JSON reports out.
// Identical config + seed produces byte-identical reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lznik/lznik.hpp"

using nlohmann::json;
using namespace lznik;

namespace {

std::string fmt17(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json json_num(double x) {
    if (std::isinf(x)) return json(x > 0 ? "inf" : "-inf");
    return json(x);
}

void check_keys(const json& j, const std::string& ctx, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw std::invalid_argument(ctx + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument(ctx + ": unknown key '" + it.key() + "'");
}

double read_ext(const json& v, const std::string& what) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity") return kInf;
        throw std::invalid_argument(what + ": expected a number or \"inf\"");
    }
    if (!v.is_number()) throw std::invalid_argument(what + ": expected a number or \"inf\"");
    return v.get<double>();
}

LogPair read_pair(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument(what + ": expected [alpha_0, alpha_inf]");
    return {v[0].get<double>(), v[1].get<double>()};
}

SpaceParams read_space(const json& j, const std::string& ctx) {
    check_keys(j, ctx, {"p", "b", "alpha"});
    if (!j.contains("p") || !j.contains("b"))
        throw std::invalid_argument(ctx + ": needs p and b");
    LogPair a{};
    if (j.contains("alpha")) a = read_pair(j.at("alpha"), ctx + ".alpha");
    return SpaceParams(read_ext(j.at("p"), ctx + ".p"), read_ext(j.at("b"), ctx + ".b"), a);
}

Spectrum read_spectrum(const json& j) {
    check_keys(j, "spectrum", {"dim", "boxes"});
    const int dim = j.value("dim", 1);
    if (!j.contains("boxes") || !j.at("boxes").is_array() || j.at("boxes").empty())
        throw std::invalid_argument("spectrum.boxes: expected a nonempty array");
    std::vector<Box> boxes;
    for (const auto& bj : j.at("boxes")) {
        if (dim == 1) {
            if (!bj.is_array() || bj.size() != 2)
                throw std::invalid_argument("spectrum.boxes: 1-d boxes are [lo, hi]");
            boxes.push_back(box1(bj[0].get<double>(), bj[1].get<double>()));
        } else {
            if (!bj.is_array() || bj.size() != 2 || !bj[0].is_array())
                throw std::invalid_argument("spectrum.boxes: 2-d boxes are [[lo0,hi0],[lo1,hi1]]");
            boxes.push_back(box2(bj[0][0].get<double>(), bj[0][1].get<double>(),
                                 bj[1][0].get<double>(), bj[1][1].get<double>()));
        }
    }
    return Spectrum(dim, std::move(boxes));
}

struct Effective {
    json config;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path; // empty = stdout
    bool quiet = false;
};

FamilySpec read_family(const json& j, std::uint64_t seed) {
    check_keys(j, "family",
               {"kind", "m", "q_max", "tail_tol", "period", "grid_points", "omega"});
    FamilySpec fam;
    fam.seed = seed;
    const std::string kind = j.value("kind", std::string("sinc-power"));
    if (kind == "sinc-power") fam.kind = FamilyKind::sinc_power;
    else if (kind == "random") fam.kind = FamilyKind::random_spectrum;
    else throw std::invalid_argument("family.kind: expected 'sinc-power' or 'random'");
    fam.m = j.value("m", 2);
    fam.q_max = j.value("q_max", 4);
    fam.tail_tol = j.value("tail_tol", 1e-5);
    fam.period = j.value("period", 16.0);
    fam.grid_points = j.value("grid_points", std::size_t{4096});
    return fam;
}

StepFunction read_step_function(const json& j) {
    if (!j.contains("pieces") || !j.at("pieces").is_array())
        throw std::invalid_argument("function.pieces: expected an array of [value, measure]");
    std::vector<Piece> ps;
    for (const auto& pj : j.at("pieces")) {
        if (!pj.is_array() || pj.size() != 2)
            throw std::invalid_argument("function.pieces: entries are [value, measure]");
        ps.push_back({pj[0].get<double>(), pj[1].get<double>()});
    }
    double total = -1.0;
    if (j.contains("total_measure")) total = read_ext(j.at("total_measure"), "total_measure");
    return StepFunction(std::move(ps), total);
}

// builds the described function and returns its rearrangement
StepFunction read_function(const json& cfg, std::uint64_t seed, double& domain_measure) {
    if (!cfg.contains("function")) throw std::invalid_argument("config: missing 'function'");
    const json& j = cfg.at("function");
    check_keys(j, "function",
               {"kind", "pieces", "total_measure", "omega", "m", "q_max", "tail_tol", "period",
                "grid_points", "domain_measure"});
    domain_measure = kInf;
    if (j.contains("domain_measure"))
        domain_measure = read_ext(j.at("domain_measure"), "function.domain_measure");
    const std::string kind = j.value("kind", std::string("step"));
    if (kind == "step") return rearrange(read_step_function(j));
    if (kind == "sinc-power") {
        const double omega = j.value("omega", 1.0);
        const int m = j.value("m", 2);
        return rearrange(
            make_sinc_power(omega, m,
                            sinc_grid(omega, m, j.value("q_max", 4), j.value("tail_tol", 1e-5)))
                .samples);
    }
    if (kind == "random") {
        if (!cfg.contains("spectrum"))
            throw std::invalid_argument("function.kind random needs a 'spectrum'");
        return rearrange(make_random_bandlimited(read_spectrum(cfg.at("spectrum")), seed,
                                                 j.value("period", 16.0),
                                                 j.value("grid_points", std::size_t{4096}))
                             .samples);
    }
    throw std::invalid_argument("function.kind: expected 'step', 'sinc-power' or 'random'");
}

std::vector<double> read_omegas(const json& cfg) {
    if (!cfg.contains("sweep")) throw std::invalid_argument("config: missing 'sweep'");
    check_keys(cfg.at("sweep"), "sweep", {"omega"});
    const json& oj = cfg.at("sweep").at("omega");
    if (!oj.is_array() || oj.empty())
        throw std::invalid_argument("sweep.omega: expected a nonempty array");
    std::vector<double> out;
    for (const auto& v : oj) out.push_back(v.get<double>());
    return out;
}

Corollary read_corollary(const std::string& s) {
    for (Corollary c : {Corollary::C21, Corollary::C22, Corollary::C23, Corollary::C24,
                        Corollary::C25, Corollary::C26, Corollary::C27, Corollary::C28,
                        Corollary::C29})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("besov.corollary: expected C21..C29");
}

json bound_json(const BoundResult& b) {
    json out;
    out["theorem_id"] = to_string(b.theorem);
    out["base_measure"] = json_num(b.base_measure);
    out["power_exp"] = json_num(b.power_exponent);
    out["log_exp_0"] = json_num(b.log_exponents.alpha0);
    out["log_exp_inf"] = json_num(b.log_exponents.alpha_inf);
    out["loglog_exp_0"] = json_num(b.loglog_exponents.alpha0);
    out["loglog_exp_inf"] = json_num(b.loglog_exponents.alpha_inf);
    out["value"] = json_num(b.value);
    out["requires_bounded"] = b.requires_bounded;
    return out;
}

std::string bound_csv_fields(const BoundResult& b) {
    std::ostringstream os;
    os << to_string(b.theorem) << ',' << fmt17(b.power_exponent) << ','
       << fmt17(b.log_exponents.alpha0) << ',' << fmt17(b.log_exponents.alpha_inf) << ','
       << fmt17(b.loglog_exponents.alpha0) << ',' << fmt17(b.loglog_exponents.alpha_inf);
    return os.str();
}

const char* method_name(NormMethod m) {
    switch (m) {
        case NormMethod::closed_form: return "closed-form";
        case NormMethod::exact_step: return "exact-step";
        case NormMethod::quadrature: return "quadrature";
    }
    return "?";
}

// ---- command implementations ------------------------------------------

struct Output {
    std::string csv;
    json results;
};

Output cmd_norm(const Effective& eff) {
    const json& cfg = eff.config;
    double dm;
    const StepFunction f = read_function(cfg, eff.seed, dm);
    if (!cfg.contains("target_space"))
        throw std::invalid_argument("norm: missing 'target_space'");
    const SpaceParams s = read_space(cfg.at("target_space"), "target_space");
    const NormResult r = lz_norm(f, s, dm);
    Output out;
    out.csv = "value,method,est_rel_error\n" + fmt17(r.value) + "," + method_name(r.method) +
              "," + fmt17(r.estimated_rel_error) + "\n";
    out.results["value"] = json_num(r.value);
    out.results["method"] = method_name(r.method);
    out.results["est_rel_error"] = json_num(r.estimated_rel_error);
    return out;
}

Output cmd_rearrange(const Effective& eff) {
    double dm;
    const StepFunction f = read_function(eff.config, eff.seed, dm);
    Output out;
    std::ostringstream os;
    os << "value,measure\n";
    json rows = json::array();
    for (const auto& pc : f.pieces) {
        os << fmt17(pc.value) << ',' << fmt17(pc.measure) << '\n';
        rows.push_back({json_num(pc.value), json_num(pc.measure)});
    }
    out.csv = os.str();
    out.results["pieces"] = rows;
    out.results["total_measure"] = json_num(f.total_measure);
    return out;
}

Output cmd_classify(const Effective& eff) {
    if (!eff.config.contains("source_space"))
        throw std::invalid_argument("classify: missing 'source_space'");
    const SpaceParams s = read_space(eff.config.at("source_space"), "source_space");
    const TripleClass cls = classify(s.p, s.b, s.a);
    Output out;
    std::ostringstream os;
    os << "q,c,beta_0,beta_inf,class,rho\n"
       << fmt17(s.p) << ',' << fmt17(s.b) << ',' << fmt17(s.a.alpha0) << ','
       << fmt17(s.a.alpha_inf) << ',' << to_string(cls.tag) << ','
       << (cls.tag == ClassTag::F0 ? std::string() : std::to_string(cls.rho)) << '\n';
    out.csv = os.str();
    out.results["class"] = to_string(cls.tag);
    if (cls.tag != ClassTag::F0) out.results["rho"] = cls.rho;
    return out;
}

Output cmd_bound(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space") ||
        !cfg.contains("spectrum"))
        throw std::invalid_argument("bound: needs source_space, target_space, spectrum");
    const BoundResult b =
        nikolskii_bound(read_space(cfg.at("source_space"), "source_space"),
                        read_space(cfg.at("target_space"), "target_space"),
                        read_spectrum(cfg.at("spectrum")));
    Output out;
    out.csv = "theorem_id,base_measure,power_exp,log_exp_0,log_exp_inf,loglog_exp_0,"
              "loglog_exp_inf,value,requires_bounded\n";
    std::ostringstream os;
    os << to_string(b.theorem) << ',' << fmt17(b.base_measure) << ','
       << fmt17(b.power_exponent) << ',' << fmt17(b.log_exponents.alpha0) << ','
       << fmt17(b.log_exponents.alpha_inf) << ',' << fmt17(b.loglog_exponents.alpha0) << ','
       << fmt17(b.loglog_exponents.alpha_inf) << ',' << fmt17(b.value) << ','
       << (b.requires_bounded ? 1 : 0) << '\n';
    out.csv += os.str();
    out.results = bound_json(b);
    return out;
}

Output cmd_verify(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space") ||
        !cfg.contains("family"))
        throw std::invalid_argument("verify: needs source_space, target_space, family");
    const FamilySpec fam = read_family(cfg.at("family"), eff.seed);
    const double omega = cfg.at("family").value("omega", 1.0);
    const VerifyResult v =
        verify_inequality(make_family_member(fam, omega),
                          read_space(cfg.at("source_space"), "source_space"),
                          read_space(cfg.at("target_space"), "target_space"));
    Output out;
    out.csv = "lhs,rhs,ratio,theorem_id,power_exp,log_exp_0,log_exp_inf,loglog_exp_0,"
              "loglog_exp_inf\n" +
              fmt17(v.lhs) + "," + fmt17(v.rhs) + "," + fmt17(v.ratio) + "," +
              bound_csv_fields(v.bound) + "\n";
    out.results["lhs"] = json_num(v.lhs);
    out.results["rhs"] = json_num(v.rhs);
    out.results["ratio"] = json_num(v.ratio);
    out.results["bound"] = bound_json(v.bound);
    return out;
}

Output cmd_sweep(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space") ||
        !cfg.contains("family"))
        throw std::invalid_argument("sweep: needs source_space, target_space, family");
    const auto rows = sweep(read_family(cfg.at("family"), eff.seed), read_omegas(cfg),
                            read_space(cfg.at("source_space"), "source_space"),
                            read_space(cfg.at("target_space"), "target_space"));
    Output out;
    std::ostringstream os;
    os << "omega,mu_omega,lhs,rhs,ratio,theorem_id,power_exp,log_exp_0,log_exp_inf,"
          "loglog_exp_0,loglog_exp_inf,slope\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        os << fmt17(r.omega) << ',' << fmt17(r.mu_omega) << ',' << fmt17(r.lhs) << ','
           << fmt17(r.rhs) << ',' << fmt17(r.ratio) << ',' << bound_csv_fields(r.bound) << ','
           << fmt17(r.slope) << '\n';
        json jr;
        jr["omega"] = json_num(r.omega);
        jr["mu_omega"] = json_num(r.mu_omega);
        jr["lhs"] = json_num(r.lhs);
        jr["rhs"] = json_num(r.rhs);
        jr["ratio"] = json_num(r.ratio);
        jr["bound"] = bound_json(r.bound);
        jr["slope"] = json_num(r.slope);
        jrows.push_back(jr);
    }
    out.csv = os.str();
    out.results["rows"] = jrows;
    out.results["slope"] = json_num(rows.empty() ? 0.0 : rows.front().slope);
    return out;
}

Output cmd_probe(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space") ||
        !cfg.contains("spectrum"))
        throw std::invalid_argument("probe: needs source_space, target_space, spectrum");
    ProbeOptions popt;
    int budget = 100;
    if (cfg.contains("probe")) {
        check_keys(cfg.at("probe"), "probe", {"budget", "period", "grid_points", "step_scale"});
        budget = cfg.at("probe").value("budget", 100);
        popt.period = cfg.at("probe").value("period", 16.0);
        popt.grid_points = cfg.at("probe").value("grid_points", std::size_t{2048});
        popt.step_scale = cfg.at("probe").value("step_scale", 0.75);
    }
    const ProbeResult pr =
        probe_sharpness(read_space(cfg.at("source_space"), "source_space"),
                        read_space(cfg.at("target_space"), "target_space"),
                        read_spectrum(cfg.at("spectrum")), budget, eff.seed, popt);
    Output out;
    std::ostringstream os;
    os << "index,coef_re,coef_im,best_ratio\n";
    json coeffs = json::array();
    for (std::size_t i = 0; i < pr.best_coefficients.size(); ++i) {
        os << i << ',' << fmt17(pr.best_coefficients[i].real()) << ','
           << fmt17(pr.best_coefficients[i].imag()) << ',' << fmt17(pr.best_ratio) << '\n';
        coeffs.push_back({json_num(pr.best_coefficients[i].real()),
                          json_num(pr.best_coefficients[i].imag())});
    }
    out.csv = os.str();
    out.results["best_ratio"] = json_num(pr.best_ratio);
    out.results["best_coefficients"] = coeffs;
    out.results["evaluations"] = pr.evaluations;
    return out;
}

struct BesovConfig {
    Corollary corollary;
    BesovParams smoothness;
    int n = 1;
    int count = 20;
};

BesovConfig read_besov(const json& cfg) {
    if (!cfg.contains("besov")) throw std::invalid_argument("config: missing 'besov'");
    const json& j = cfg.at("besov");
    check_keys(j, "besov", {"corollary", "sigma", "gamma", "Gamma", "u", "n", "count"});
    BesovConfig out;
    out.corollary = read_corollary(j.value("corollary", std::string("C21")));
    out.smoothness.sigma = j.value("sigma", 0.0);
    out.smoothness.gamma = j.value("gamma", 0.0);
    if (j.contains("Gamma")) out.smoothness.Gamma = read_pair(j.at("Gamma"), "besov.Gamma");
    out.smoothness.u = j.contains("u") ? read_ext(j.at("u"), "besov.u") : 2.0;
    out.n = j.value("n", 1);
    out.count = j.value("count", 20);
    return out;
}

Output cmd_besov_shift(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space"))
        throw std::invalid_argument("besov-shift: needs source_space and target_space");
    const BesovConfig bc = read_besov(cfg);
    const BesovParams shifted =
        embedding_shift(bc.corollary, read_space(cfg.at("source_space"), "source_space"),
                        read_space(cfg.at("target_space"), "target_space"), bc.n,
                        bc.smoothness);
    const bool hom = corollary_homogeneous(bc.corollary);
    Output out;
    std::ostringstream os;
    os << "corollary,homogeneous,sigma,gamma,gamma_0,gamma_inf,u\n"
       << to_string(bc.corollary) << ',' << (hom ? 1 : 0) << ',' << fmt17(shifted.sigma) << ','
       << fmt17(shifted.gamma) << ',' << fmt17(shifted.Gamma.alpha0) << ','
       << fmt17(shifted.Gamma.alpha_inf) << ',' << fmt17(shifted.u) << '\n';
    out.csv = os.str();
    out.results["corollary"] = to_string(bc.corollary);
    out.results["homogeneous"] = hom;
    out.results["sigma"] = json_num(shifted.sigma);
    out.results["gamma"] = json_num(shifted.gamma);
    out.results["Gamma"] = {json_num(shifted.Gamma.alpha0), json_num(shifted.Gamma.alpha_inf)};
    out.results["u"] = json_num(shifted.u);
    return out;
}

Output cmd_besov_verify(const Effective& eff) {
    const json& cfg = eff.config;
    if (!cfg.contains("source_space") || !cfg.contains("target_space"))
        throw std::invalid_argument("besov-verify: needs source_space and target_space");
    const BesovConfig bc = read_besov(cfg);
    EmbeddingSpec spec;
    spec.corollary = bc.corollary;
    spec.source = read_space(cfg.at("source_space"), "source_space");
    spec.target = read_space(cfg.at("target_space"), "target_space");
    spec.n = bc.n;
    spec.target_smoothness = bc.smoothness;
    double period = 8.0;
    std::size_t grid_points = 8192;
    if (cfg.contains("family")) {
        const FamilySpec fam = read_family(cfg.at("family"), eff.seed);
        period = fam.period;
        grid_points = fam.grid_points;
    }
    const auto rows =
        verify_embedding(spec, read_omegas(cfg), bc.count, eff.seed, period, grid_points);
    Output out;
    std::ostringstream os;
    os << "index,omega,target_norm,source_norm,ratio\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        os << r.index << ',' << fmt17(r.omega) << ',' << fmt17(r.target_norm) << ','
           << fmt17(r.source_norm) << ',' << fmt17(r.ratio) << '\n';
        json jr;
        jr["index"] = r.index;
        jr["omega"] = json_num(r.omega);
        jr["target_norm"] = json_num(r.target_norm);
        jr["source_norm"] = json_num(r.source_norm);
        jr["ratio"] = json_num(r.ratio);
        jrows.push_back(jr);
    }
    out.csv = os.str();
    out.results["rows"] = jrows;
    return out;
}

const std::set<std::string> kTopLevelKeys = {
    "command", "seed",  "source_space", "target_space", "spectrum", "family",
    "sweep",   "probe", "besov",        "function",     "output"};

int run_command(const std::string& cmd, Effective& eff) {
    check_keys(eff.config, "config", kTopLevelKeys);
    if (eff.config.contains("command")) {
        const std::string cfg_cmd = eff.config.at("command").get<std::string>();
        if (cfg_cmd != cmd)
            throw std::invalid_argument("config.command '" + cfg_cmd +
                                        "' does not match the invoked subcommand '" + cmd + "'");
    }
    if (eff.config.contains("output")) {
        check_keys(eff.config.at("output"), "output", {"path", "format"});
        if (eff.out_path.empty())
            eff.out_path = eff.config.at("output").value("path", std::string());
        if (eff.format.empty())
            eff.format = eff.config.at("output").value("format", std::string("csv"));
    }
    if (eff.format.empty()) eff.format = "csv";
    if (eff.format != "csv" && eff.format != "json")
        throw std::invalid_argument("format must be 'csv' or 'json'");

    Output out;
    if (cmd == "norm") out = cmd_norm(eff);
    else if (cmd == "rearrange") out = cmd_rearrange(eff);
    else if (cmd == "classify") out = cmd_classify(eff);
    else if (cmd == "bound") out = cmd_bound(eff);
    else if (cmd == "verify") out = cmd_verify(eff);
    else if (cmd == "sweep") out = cmd_sweep(eff);
    else if (cmd == "probe") out = cmd_probe(eff);
    else if (cmd == "besov-shift") out = cmd_besov_shift(eff);
    else if (cmd == "besov-verify") out = cmd_besov_verify(eff);
    else throw std::invalid_argument("unknown command: " + cmd);

    std::string payload;
    if (eff.format == "csv") {
        payload = out.csv;
    } else {
        json report;
        json cfg = eff.config;
        cfg["command"] = cmd;
        cfg["seed"] = eff.seed;
        report["config"] = cfg;
        report["results"] = out.results;
        payload = report.dump(2);
        payload += '\n';
    }

    if (eff.out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
    } else {
        std::ofstream f(eff.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + eff.out_path);
        f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!f) throw std::runtime_error("write failed: " + eff.out_path);
    }
    if (!eff.quiet)
        std::cerr << cmd << ": ok"
                  << (eff.out_path.empty() ? "" : " -> " + eff.out_path) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz-Zygmund norms, band-limited bound factors, and Besov embeddings"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    long long seed_flag = -1;
    bool quiet = false;

    const std::vector<std::string> commands = {"norm",  "rearrange", "classify",
                                               "bound", "verify",    "sweep",
                                               "probe", "besov-shift", "besov-verify"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON experiment config")->required();
        sub->add_option("--output", out_path, "report path (default: stdout)");
        sub->add_option("--format", format, "csv|json (default: csv)");
        sub->add_option("--seed", seed_flag, "override the config seed");
        sub->add_flag("--quiet", quiet, "suppress the status line");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config: " + config_path);
        Effective eff;
        eff.config = json::parse(in);
        eff.out_path = out_path;
        eff.format = format;
        eff.quiet = quiet;
        eff.seed = 0;
        if (eff.config.contains("seed")) eff.seed = eff.config.at("seed").get<std::uint64_t>();
        if (seed_flag >= 0) eff.seed = static_cast<std::uint64_t>(seed_flag);
        return run_command(app.get_subcommands().front()->get_name(), eff);
    } catch (const DispatchError& e) {
        std::cerr << "error: " << e.condition() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
