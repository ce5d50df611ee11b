// acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "swanson/verify.hpp"
#include "swanson/version.hpp"

namespace {

using swanson::Flavor;
using swanson::Method;
using swanson::ModelParams;
using swanson::float50;
using swanson::verify::CheckResult;
using swanson::verify::sci;

const ModelParams<double> preset_models[4] = {
    {0.5, 0.1, 0.3, 0.31}, {0.5, 0.1, 0.3, 0.35}, {0.5, 0.1, 0.3, 0.5}, {0.5, 0.1, 0.3, 1.0}};

int failures = 0;

void report(int idx, const std::string& name, bool pass, double measured, double tol,
            const std::string& note) {
    std::printf("%s %02d %s measured=%.3e tol=%.3e (%s)\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), measured, tol, note.c_str());
    if (!pass) ++failures;
}

// z = 0 closed-form states are pure Gaussians, so the log density is an exact
// parabola and three points pin the vertex
double peak_x(const swanson::PolyGauss<double>& st) {
    auto logden = [&](double x) { return std::log(std::norm(swanson::eval(st, x))); };
    const double h = 0.01;
    double bx = -3, bv = logden(bx);
    for (double x = -3 + h; x <= 3; x += h) {
        const double v = logden(x);
        if (v > bv) {
            bv = v;
            bx = x;
        }
    }
    const double l = logden(bx - h), c = logden(bx), r = logden(bx + h);
    return bx + 0.5 * h * (l - r) / (l - 2 * c + r);
}

void criterion_commutator() {
    double worst = 0;
    bool pass = true;
    for (const auto& m : preset_models) {
        const auto d = swanson::derive(m);
        const CheckResult c = swanson::verify::commutator_check(m, d, 101, 20, 10, 1e-13);
        if (c.measured > worst) worst = c.measured;
        pass = pass && c.pass;
    }
    report(1, "commutator_identity", pass, worst, 1e-13,
           "[A,B]f = f, 20 inputs deg<=10, seed 101, all four presets, double");
}

void criterion_hamiltonian() {
    const ModelParams<double> m = preset_models[1];
    const auto d = swanson::derive(m);
    const CheckResult forms = swanson::verify::hamiltonian_forms_check(m, d, 303, 10, 1e-12);
    const auto ml = swanson::verify::widen_model<long double>(m);
    const auto dl = swanson::derive(ml);
    const CheckResult eig = swanson::verify::hamiltonian_eigen_check(ml, dl, 20, 1e-11);
    report(2, "hamiltonian_equivalence", forms.pass && eig.pass, forms.measured, 1e-12,
           "two forms on 10 inputs, seed 303, double; H phi_n = (Omega n + gamma) phi_n "
           "n<=20 measured=" +
               sci(eig.measured) + " tol=1.000e-11, long double");
}

void criterion_cross_construction() {
    const auto d = swanson::derive(swanson::verify::widen_model<long double>(preset_models[1]));
    const CheckResult c = swanson::verify::cross_construction_check(d, 25, 1e-10);
    report(3, "eigenfamily_cross_construction", c.pass, c.measured, c.tol,
           "recursion vs closed form, n<=25, shared pi_n so both flavors, long double");
}

void criterion_gram() {
    const auto d = swanson::derive(swanson::verify::widen_model<float50>(preset_models[1]));
    const auto phi = swanson::build_family(d, Flavor::phi, Method::recursion, 30);
    const auto psi = swanson::build_family(d, Flavor::psi, Method::recursion, 30);
    const CheckResult c = swanson::verify::gram_identity_check(phi, psi, 30, 1e-10);
    report(4, "biorthonormality_gram", c.pass, c.measured, c.tol,
           "31x31 exact-moment Gram vs identity, float50");
}

void criterion_norm_growth() {
    const auto d = swanson::derive(swanson::verify::widen_model<float50>(preset_models[3]));
    const auto phi = swanson::build_family(d, Flavor::phi, Method::recursion, 50);
    const auto psi = swanson::build_family(d, Flavor::psi, Method::recursion, 50);
    const CheckResult inc = swanson::verify::norm_growth_check(phi, psi, 5, 50, false);
    const CheckResult law = swanson::verify::growth_law_check(preset_models[3], 0.15);
    report(5, "norm_growth_not_a_basis", inc.pass && law.pass, law.measured, law.tol,
           std::string("fig1-d, ||phi_n|| ||psi_n|| strictly increasing n in [5,50]: ") +
               (inc.pass ? "yes" : "NO") + "; slope fit n in {36,49,64,81,100}, " + law.note);
}

void criterion_quasi_basis() {
    using std::abs;
    const auto d = swanson::derive(swanson::verify::widen_model<float50>(preset_models[1]));
    const auto phi = swanson::build_family(d, Flavor::phi, Method::recursion, 60);
    const auto psi = swanson::build_family(d, Flavor::psi, Method::recursion, 60);
    const swanson::PolyGauss<float50> f(swanson::poly_one<float50>(), float50(0.12),
                                        swanson::complex50(float50(-0.2)), swanson::complex50(0));
    const swanson::PolyGauss<float50> g(swanson::poly_one<float50>(), float50(4.0),
                                        swanson::complex50(float50(0.3)), swanson::complex50(0));
    const swanson::complex50 exact = swanson::inner_product(f, g);
    const float50 ref = abs(exact);
    double prev = -1, final_err = 0, gap = 0;
    bool monotone = true;
    for (int N : {10, 20, 40, 60}) {
        const auto s = swanson::quasi_basis_partial_sum(f, g, phi, psi, N);
        const double err = double(float50(abs(s.via_phi_psi - exact) / ref));
        if (prev >= 0 && err > prev) monotone = false;
        prev = err;
        final_err = err;
        if (N == 60) gap = double(float50(abs(s.via_phi_psi - s.via_psi_phi) / ref));
    }
    const bool pass = final_err <= 1e-6 && monotone && gap <= 1e-9;
    report(6, "quasi_basis_identity", pass, final_err, 1e-6,
           std::string("partial sums N in {10,20,40,60} ") +
               (monotone ? "monotone" : "NOT monotone") + ", orderings gap " + sci(gap) +
               " tol=1.000e-09, float50");
}

void criterion_four_way() {
    using LD = long double;
    const auto d = swanson::derive(swanson::verify::widen_model<LD>(preset_models[1]));
    const CheckResult c = swanson::verify::four_way_check(
        d, swanson::verify::standard_z_set<LD>(), 60, 1e-6);
    report(7, "bicoherent_four_way", c.pass, c.measured, c.tol, c.note);
}

void criterion_eigen_residual() {
    const auto d = swanson::derive(preset_models[1]);
    const CheckResult c = swanson::verify::eigen_residual_check(
        d, swanson::verify::standard_z_set<double>(), swanson::Construction::closed_form, 60,
        1e-10);
    report(8, "coherent_eigen_residual", c.pass, c.measured, c.tol,
           "(A - z) phi(z) and (Bdag - z) psi(z), 6 z values, " + c.note);
}

void criterion_resolution() {
    const auto d = swanson::derive(preset_models[1]);
    swanson::verify::VerifyOptions opt;
    std::vector<CheckResult> out;
    swanson::verify::resolution_checks(d, opt, out);
    const CheckResult& g = out[0];
    const CheckResult& p = out[1];
    const CheckResult& o = out[2];
    report(9, "resolution_of_identity", g.pass && p.pass && o.pass, g.measured, g.tol,
           "R=6, 96x96 polar grid, Gaussian pair; orderings gap " + sci(o.measured) +
               " tol=2.000e-03, parity cross term " + sci(p.measured) + ", double");
}

void criterion_figure1() {
    // separations of the density maxima, frozen from the closed-form vacua
    // calculated with mpmath at 25 significant digits
    const double frozen[4] = {0.009258200997725514615665668, 0.04629100498862757307832834,
                              0.1851640199545102923133134, 0.6480740698407860230965967};
    double seps[4], worst = 0;
    bool increasing = true;
    for (int i = 0; i < 4; ++i) {
        const auto d = swanson::derive(preset_models[i]);
        const auto phi = swanson::closed_form_state(d, Flavor::phi, {0, 0});
        const auto psi = swanson::closed_form_state(d, Flavor::psi, {0, 0});
        seps[i] = std::abs(peak_x(phi.repr) - peak_x(psi.repr));
        const double rel = std::abs(seps[i] / frozen[i] - 1.0);
        if (rel > worst) worst = rel;
        if (i > 0 && seps[i] <= seps[i - 1]) increasing = false;
    }
    report(10, "figure1_maxima_separation", increasing && worst <= 1e-10, worst, 1e-10,
           std::string("separations ") + sci(seps[0]) + " " + sci(seps[1]) + " " + sci(seps[2]) +
               " " + sci(seps[3]) + ", strictly increasing in beta-alpha: " +
               (increasing ? "yes" : "NO") + ", double");
}

void criterion_degenerate() {
    using std::abs;
    const ModelParams<double> m{0.5, 0.1, 0.3, 0.3};
    const auto d50 = swanson::derive(swanson::verify::widen_model<float50>(m));
    const auto phi = swanson::build_family(d50, Flavor::phi, Method::recursion, 30);
    const auto psi = swanson::build_family(d50, Flavor::psi, Method::recursion, 30);
    const CheckResult gram = swanson::verify::gram_identity_check(phi, psi, 30, 1e-10);
    const auto d = swanson::derive(m);
    const auto e = swanson::spectrum(d, 30);
    double gap_dev = 0;
    for (int n = 0; n < 30; ++n) gap_dev = std::max(gap_dev, abs(e[n + 1] - e[n] - d.Omega));
    const auto t = swanson::norm_table(phi);
    double norm_dev = 0;
    for (int n = 0; n <= 30; ++n)
        norm_dev = std::max(norm_dev, double(float50(abs(t.norm[n] * t.norm[n] - float50(1)))));
    const double worst = std::max({gram.measured, gap_dev, norm_dev});
    report(11, "degenerate_limit", gram.pass && gap_dev <= 1e-14 && norm_dev <= 1e-10, worst,
           1e-10,
           "alpha=beta=0.3: coinciding families orthonormal n<=30 (float50), spectrum gap "
           "= Omega within 1e-14, norm products = 1");
}

}  // namespace

int main() {
    std::printf("# swanson acceptance gate\n");
    std::printf("# version=%s\n", swanson::version);
    std::printf("# seeds: commutator=101 hamiltonian=303\n");
    std::printf("# presets: omega=0.5 lambda=0.1 alpha=0.3, beta in {0.31, 0.35, 0.5, 1.0}\n");
    criterion_commutator();
    criterion_hamiltonian();
    criterion_cross_construction();
    criterion_gram();
    criterion_norm_growth();
    criterion_quasi_basis();
    criterion_four_way();
    criterion_eigen_residual();
    criterion_resolution();
    criterion_figure1();
    criterion_degenerate();
    std::printf("acceptance: %d/11 passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
