#include <array>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "swanson/verify.hpp"
#include "swanson/version.hpp"

namespace {

using nlohmann::json;
using swanson::ModelParams;
using C = std::complex<double>;

struct RunConfig {
    ModelParams<double> model{0.5, 0.1, 0.3, 0.35};
    std::string preset;
    int n_max = 30;
    int L = 60;
    double R = 6.0;
    C z{0.0, 0.0};
    std::string precision = "standard";
    std::string format = "csv";
    std::string out;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, std::array<double, 4>> presets{
    {"fig1-a", {0.5, 0.1, 0.3, 0.31}},
    {"fig1-b", {0.5, 0.1, 0.3, 0.35}},
    {"fig1-c", {0.5, 0.1, 0.3, 0.5}},
    {"fig1-d", {0.5, 0.1, 0.3, 1.0}},
};

std::string fmt(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string fmt_tol(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.3e", v);
    return b;
}

bool degenerate(const RunConfig& cfg) { return cfg.model.alpha == cfg.model.beta; }

json config_json(const RunConfig& cfg) {
    return json{{"version", swanson::version},
                {"omega", cfg.model.omega},
                {"lambda", cfg.model.lambda},
                {"alpha", cfg.model.alpha},
                {"beta", cfg.model.beta},
                {"preset", cfg.preset},
                {"n_max", cfg.n_max},
                {"L", cfg.L},
                {"R", cfg.R},
                {"z", {cfg.z.real(), cfg.z.imag()}},
                {"precision", cfg.precision},
                {"format", cfg.format},
                {"out", cfg.out}};
}

std::string csv_header(const RunConfig& cfg, const std::string& cmd) {
    std::ostringstream os;
    os << "# swanson " << cmd << "\n";
    os << "# version=" << swanson::version << "\n";
    os << "# preset=" << (cfg.preset.empty() ? "none" : cfg.preset) << "\n";
    os << "# omega=" << fmt(cfg.model.omega) << " lambda=" << fmt(cfg.model.lambda)
       << " alpha=" << fmt(cfg.model.alpha) << " beta=" << fmt(cfg.model.beta) << "\n";
    os << "# n_max=" << cfg.n_max << " L=" << cfg.L << " R=" << fmt(cfg.R) << " z="
       << fmt(cfg.z.real()) << "," << fmt(cfg.z.imag()) << " precision=" << cfg.precision
       << "\n";
    if (degenerate(cfg)) os << "# warning: degenerate: self-adjoint (alpha == beta)\n";
    return os.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw IoError("cannot open output file: " + cfg.out);
    f << text;
    if (!f.good()) throw IoError("write failed: " + cfg.out);
}

int cmd_params(const RunConfig& cfg) {
    const auto d = swanson::derive(cfg.model);
    const auto nv = swanson::normalization_values(d);
    const double resid = swanson::identity_residuals(cfg.model, d);
    const std::vector<std::pair<std::string, double>> rows{
        {"omega", cfg.model.omega},
        {"lambda", cfg.model.lambda},
        {"alpha", cfg.model.alpha},
        {"beta", cfg.model.beta},
        {"theta0", d.theta0},
        {"Omega", d.Omega},
        {"gamma", d.gamma},
        {"ThetaPlus", d.ThetaPlus},
        {"ThetaMinus", d.ThetaMinus},
        {"gammaA", d.gammaA},
        {"gammaB", d.gammaB},
        {"k", d.k},
        {"Nphi", d.Nphi},
        {"Npsi", d.Npsi},
        {"E0", d.gamma},
        {"vacuum_overlap_I0", nv.I0},
        {"N_enforced", nv.enforced},
        {"N_variant_product", nv.variant_product},
        {"N_variant_choice", nv.variant_choice},
        {"identity_residual", resid},
    };
    if (cfg.format == "json") {
        json res;
        for (const auto& [k, v] : rows) res[k] = v;
        res["degenerate"] = degenerate(cfg);
        res["normalization_note"] =
            "Nphi=Npsi enforced by the exact vacuum overlap (N^2 I0 = 1); "
            "the variant constants are recorded for reference only";
        emit(cfg, json{{"config", config_json(cfg)}, {"results", res}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << csv_header(cfg, "params");
    os << "# normalization: Nphi=Npsi enforced by the exact vacuum overlap (N^2 I0 = 1); "
          "variant constants recorded for reference only\n";
    os << "quantity,value\n";
    for (const auto& [k, v] : rows) os << k << "," << fmt(v) << "\n";
    os << "degenerate," << (degenerate(cfg) ? "true" : "false") << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    using LD = long double;
    const ModelParams<LD> m{LD(cfg.model.omega), LD(cfg.model.lambda), LD(cfg.model.alpha),
                            LD(cfg.model.beta)};
    const auto d = swanson::derive(m);
    const auto e = swanson::spectrum(d, cfg.n_max);
    const auto phi = swanson::build_family(d, swanson::Flavor::phi,
                                           swanson::Method::recursion, cfg.n_max);
    const auto psi = swanson::build_family(d, swanson::Flavor::psi,
                                           swanson::Method::recursion, cfg.n_max);
    const auto tp = swanson::norm_table(phi);
    const auto tq = swanson::norm_table(psi);
    if (cfg.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= cfg.n_max; ++n)
            rows.push_back({{"n", n},
                            {"energy", double(e[n])},
                            {"norm_product", double(tp.norm[n] * tq.norm[n])}});
        json res{{"Omega", double(d.Omega)}, {"gamma", double(d.gamma)}, {"rows", rows},
                 {"degenerate", degenerate(cfg)}};
        emit(cfg, json{{"config", config_json(cfg)}, {"results", res}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << csv_header(cfg, "spectrum");
    os << "# energy gap Omega=" << fmt(double(d.Omega)) << "\n";
    os << "n,energy,norm_product\n";
    for (int n = 0; n <= cfg.n_max; ++n)
        os << n << "," << fmt(double(e[n])) << "," << fmt(double(tp.norm[n] * tq.norm[n]))
           << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    swanson::verify::VerifyOptions opt;
    opt.L = cfg.L;
    opt.disk_radius = cfg.R;
    opt.extended = cfg.precision == "extended";
    const auto reports = swanson::verify::run_suites(cfg.model, suite, opt);
    int total = 0, passed = 0;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            ++total;
            if (c.pass) ++passed;
        }
    if (cfg.format == "json") {
        json suites = json::array();
        for (const auto& rep : reports) {
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back({{"name", c.name},
                                  {"measured", c.measured},
                                  {"tol", c.tol},
                                  {"pass", c.pass},
                                  {"note", c.note}});
            suites.push_back({{"suite", rep.suite}, {"checks", checks},
                              {"all_pass", rep.all_pass()}});
        }
        json res{{"suites", suites},
                 {"seeds", {{"commutator", 101}, {"shift", 202}, {"hamiltonian", 303}}},
                 {"degenerate", degenerate(cfg)},
                 {"passed", passed},
                 {"total", total},
                 {"all_pass", passed == total}};
        emit(cfg, json{{"config", config_json(cfg)}, {"results", res}}.dump(2) + "\n");
        return passed == total ? 0 : 1;
    }
    std::ostringstream os;
    os << csv_header(cfg, "verify suite=" + suite);
    os << "# seeds: commutator=101 shift=202 hamiltonian=303\n";
    for (const auto& rep : reports) {
        int sp = 0;
        for (const auto& c : rep.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << rep.suite << "/" << c.name
               << " measured=" << fmt_tol(c.measured) << " tol=" << fmt_tol(c.tol) << " ("
               << c.note << ")\n";
            if (c.pass) ++sp;
        }
        os << "# " << rep.suite << ": " << sp << "/" << rep.checks.size() << " passed\n";
    }
    os << (passed == total ? "ALL PASS" : "FAILURES PRESENT") << " (" << passed << "/" << total
       << ")\n";
    emit(cfg, os.str());
    return passed == total ? 0 : 1;
}

int cmd_bicoherent(const RunConfig& cfg) {
    const auto d = swanson::derive(cfg.model);
    const auto phi = swanson::closed_form_state(d, swanson::Flavor::phi, cfg.z);
    const auto psi = swanson::closed_form_state(d, swanson::Flavor::psi, cfg.z);
    // residuals of all four constructions against the eigen-equations
    const double r_closed_phi = swanson::eigen_residual(d, phi);
    const double r_closed_psi = swanson::eigen_residual(d, psi);
    const double r_series =
        swanson::eigen_residual(d, swanson::series_state(d, swanson::Flavor::phi, cfg.z, cfg.L));
    const double r_ode =
        swanson::eigen_residual(d, swanson::ode_state(d, swanson::Flavor::phi, cfg.z));
    const double r_disp = swanson::eigen_residual(
        d, swanson::displacement_state(d, swanson::Flavor::phi, cfg.z, cfg.L));
    const double n2p = swanson::norm_sq(phi.repr), n2q = swanson::norm_sq(psi.repr);

    std::vector<std::array<double, 7>> rows;
    for (int i = 0; i <= 240; ++i) {
        const double x = -6.0 + 0.05 * i;
        const C vp = swanson::eval(phi.repr, x), vq = swanson::eval(psi.repr, x);
        rows.push_back({x, vp.real(), vp.imag(), std::norm(vp), vq.real(), vq.imag(),
                        std::norm(vq)});
    }
    if (cfg.format == "json") {
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back({{"x", r[0]},
                          {"phi", {{"re", r[1]}, {"im", r[2]}, {"abs2", r[3]}}},
                          {"psi", {{"re", r[4]}, {"im", r[5]}, {"abs2", r[6]}}}});
        json res{{"rows", jr},
                 {"norm_sq_phi", n2p},
                 {"norm_sq_psi", n2q},
                 {"eigen_residuals",
                  {{"closed_form_phi", r_closed_phi},
                   {"closed_form_psi", r_closed_psi},
                   {"series_phi", r_series},
                   {"ode_phi", r_ode},
                   {"displacement_phi", r_disp}}}};
        emit(cfg, json{{"config", config_json(cfg)}, {"results", res}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << csv_header(cfg, "bicoherent");
    os << "# norm_sq_phi=" << fmt(n2p) << " norm_sq_psi=" << fmt(n2q) << "\n";
    os << "# eigen_residuals: closed_phi=" << fmt_tol(r_closed_phi)
       << " closed_psi=" << fmt_tol(r_closed_psi) << " series_phi=" << fmt_tol(r_series)
       << " ode_phi=" << fmt_tol(r_ode) << " displacement_phi=" << fmt_tol(r_disp) << "\n";
    os << "x,re_phi,im_phi,abs2_phi,re_psi,im_psi,abs2_psi\n";
    for (const auto& r : rows) {
        os << fmt(r[0]);
        for (int j = 1; j < 7; ++j) os << "," << fmt(r[j]);
        os << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_figure1(const RunConfig& cfg) {
    const std::string dir = cfg.out.empty() ? "." : cfg.out;
    std::ostringstream summary;
    for (const auto& [name, pv] : presets) {
        RunConfig pc = cfg;
        pc.preset = name;
        pc.model = ModelParams<double>{pv[0], pv[1], pv[2], pv[3]};
        const auto d = swanson::derive(pc.model);
        const auto phi = swanson::closed_form_state(d, swanson::Flavor::phi, cfg.z);
        const auto psi = swanson::closed_form_state(d, swanson::Flavor::psi, cfg.z);
        const double n2p = swanson::norm_sq(phi.repr), n2q = swanson::norm_sq(psi.repr);
        const std::string path =
            dir + "/" + name + (cfg.format == "json" ? ".json" : ".csv");
        std::ofstream f(path);
        if (!f) throw IoError("cannot open output file: " + path);
        if (cfg.format == "json") {
            json jr = json::array();
            for (int i = 0; i <= 240; ++i) {
                const double x = -6.0 + 0.05 * i;
                jr.push_back({x, std::norm(swanson::eval(phi.repr, x)),
                              std::norm(swanson::eval(psi.repr, x))});
            }
            json res{{"preset", name},
                     {"columns", {"x", "abs2_phi", "abs2_psi"}},
                     {"rows", jr},
                     {"norm_sq_phi", n2p},
                     {"norm_sq_psi", n2q}};
            f << json{{"config", config_json(pc)}, {"results", res}}.dump(2) << "\n";
        } else {
            f << csv_header(pc, "figure1");
            f << "# norm_sq_phi=" << fmt(n2p) << " norm_sq_psi=" << fmt(n2q) << "\n";
            f << "x,abs2_phi,abs2_psi\n";
            for (int i = 0; i <= 240; ++i) {
                const double x = -6.0 + 0.05 * i;
                f << fmt(x) << "," << fmt(std::norm(swanson::eval(phi.repr, x))) << ","
                  << fmt(std::norm(swanson::eval(psi.repr, x))) << "\n";
            }
        }
        if (!f.good()) throw IoError("write failed: " + path);
        summary << "wrote " << path << "\n";
    }
    std::cout << summary.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swanson model toolkit: parameters, eigenfamilies, bi-coherent states"};
    app.fallthrough();
    RunConfig cfg;
    std::string z_text = "0,0";
    std::string suite = "all";

    app.add_option("--omega", cfg.model.omega, "frequency parameter");
    app.add_option("--lambda", cfg.model.lambda, "coupling parameter");
    app.add_option("--alpha", cfg.model.alpha, "shift of the lowering operator");
    app.add_option("--beta", cfg.model.beta, "shift of the raising operator");
    app.add_option("--preset", cfg.preset, "named parameter set")
        ->check(CLI::IsMember({"fig1-a", "fig1-b", "fig1-c", "fig1-d"}));
    app.add_option("--n-max", cfg.n_max, "largest state index")->check(CLI::Range(0, 200));
    app.add_option("--L", cfg.L, "series/displacement truncation")
        ->check(CLI::Range(1, 100000));
    app.add_option("--R", cfg.R, "resolution-of-identity disk radius")
        ->check(CLI::PositiveNumber);
    app.add_option("--z", z_text, "coherent-state label RE,IM");
    app.add_option("--precision", cfg.precision, "numeric tier")
        ->check(CLI::IsMember({"standard", "extended"}));
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output path (directory for figure1)");
    app.set_config("--config", "", "flat key=value config file");
    app.set_version_flag("--version", swanson::version);

    auto* p_params = app.add_subcommand("params", "derived constants report");
    auto* p_spectrum = app.add_subcommand("spectrum", "eigenvalue and norm-product table");
    auto* p_verify = app.add_subcommand("verify", "run invariant check suites");
    p_verify->add_option("suite", suite, "algebra|eigensystem|coherent|identity|all")
        ->check(CLI::IsMember({"algebra", "eigensystem", "coherent", "identity", "all"}));
    auto* p_bicoherent = app.add_subcommand("bicoherent", "evaluate bi-coherent states");
    app.add_subcommand("figure1", "density data files for the four presets");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!cfg.preset.empty()) {
        const auto& pv = presets.at(cfg.preset);
        if (app.count("--omega") == 0) cfg.model.omega = pv[0];
        if (app.count("--lambda") == 0) cfg.model.lambda = pv[1];
        if (app.count("--alpha") == 0) cfg.model.alpha = pv[2];
        if (app.count("--beta") == 0) cfg.model.beta = pv[3];
    }
    double zr = 0, zi = 0;
    const int zn = std::sscanf(z_text.c_str(), "%lf,%lf", &zr, &zi);
    if (zn < 1) {
        std::cerr << "error: --z expects RE or RE,IM\n";
        return 2;
    }
    cfg.z = C(zr, zn == 2 ? zi : 0.0);

    try {
        if (*p_params) return cmd_params(cfg);
        if (*p_spectrum) return cmd_spectrum(cfg);
        if (*p_verify) return cmd_verify(cfg, suite);
        if (*p_bicoherent) return cmd_bicoherent(cfg);
        return cmd_figure1(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
