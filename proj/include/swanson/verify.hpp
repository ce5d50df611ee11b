#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "swanson/bicoherent.hpp"

namespace swanson::verify {

struct CheckResult {
    std::string name;
    double measured;
    double tol;
    bool pass;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int L = 60;              // series / displacement truncation
    double disk_radius = 6;  // resolution-of-identity disk
    int grid_theta = 96;
    int grid_r = 96;
    bool extended = false;   // escalate scalar types where the math allows
};

inline CheckResult check_le(std::string name, double measured, double tol, std::string note) {
    return {std::move(name), measured, tol, measured <= tol, std::move(note)};
}

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

template <class R>
void upd(R& worst, const R& v) {
    if (v > worst) worst = v;
}

template <class R>
ModelParams<R> widen_model(const ModelParams<double>& m) {
    return {R(m.omega), R(m.lambda), R(m.alpha), R(m.beta)};
}

template <class R>
PolyGauss<R> widen(const PolyGauss<double>& f) {
    cvec<R> p(f.poly.size());
    for (Eigen::Index i = 0; i < f.poly.size(); ++i)
        p[i] = complex_t<R>(R(f.poly[i].real()), R(f.poly[i].imag()));
    return PolyGauss<R>(std::move(p), R(f.quad), complex_t<R>(R(f.lin.real()), R(f.lin.imag())),
                        complex_t<R>(R(f.cnst.real()), R(f.cnst.imag())));
}

// portable deterministic draws: raw mt19937 words mapped to [-1, 1]
inline double unit_draw(std::mt19937& rng) {
    return 2.0 * (double(rng()) / 4294967295.0) - 1.0;
}

inline PolyGauss<double> random_polygauss(std::mt19937& rng, int max_degree) {
    const int deg = int(rng() % std::uint32_t(max_degree + 1));
    cvec<double> p(deg + 1);
    for (int i = 0; i <= deg; ++i) p[i] = {unit_draw(rng), unit_draw(rng)};
    p[deg] += std::complex<double>(2, 0);  // keep the leading coefficient away from zero
    const double q = 1.0 + 0.6 * unit_draw(rng);
    const std::complex<double> lin(0.5 * unit_draw(rng), 0.5 * unit_draw(rng));
    const std::complex<double> cnst(0.3 * unit_draw(rng), 0.3 * unit_draw(rng));
    return PolyGauss<double>(std::move(p), q, lin, cnst);
}

// [a,b] f = f and [A,B] f = f on random inputs; worst coefficient residual
template <class R>
CheckResult commutator_check(const ModelParams<R>& m, const DerivedParams<R>& d,
                             std::uint32_t seed, int count, int max_degree, double tol) {
    std::mt19937 rng(seed);
    R worst = 0;
    for (int i = 0; i < count; ++i) {
        PolyGauss<R> f = widen<R>(random_polygauss(rng, max_degree));
        upd(worst, poly_max_abs<R>(commutator_residual(op_a(m), op_b(m), f).poly));
        upd(worst, poly_max_abs<R>(commutator_residual(op_A(d), op_B(d), f).poly));
    }
    return check_le("commutator_pairs", static_cast<double>(worst), tol,
                    std::string("seed ") + std::to_string(seed) + ", " + std::to_string(count) +
                        " inputs deg<=" + std::to_string(max_degree) + ", " + scalar_name<R>());
}

// structure conditions: alpha_a beta_b' + alpha_b beta_a' = 1 and theta(x) = x + k
template <class R>
CheckResult pb_structure_check(const DerivedParams<R>& d, double tol) {
    using std::abs;
    cvec<R> beta_A(2), beta_B(2);
    beta_A << complex_t<R>(d.gammaA), complex_t<R>(d.ThetaPlus);
    beta_B << complex_t<R>(d.gammaB), complex_t<R>(d.ThetaPlus);
    R worst = 0;
    {
        cvec<R> lhs = poly_add<R>(cvec<R>(poly_diff<R>(beta_B) * complex_t<R>(d.ThetaMinus)),
                                  cvec<R>(poly_diff<R>(beta_A) * complex_t<R>(d.ThetaMinus)));
        lhs[0] -= complex_t<R>(1);
        upd(worst, poly_max_abs<R>(lhs));
    }
    cvec<R> theta = theta_poly<R>(d.ThetaMinus, d.ThetaMinus, beta_A, beta_B);
    upd(worst, R(abs(theta[0] - complex_t<R>(d.k))));
    upd(worst, R(abs(theta[1] - complex_t<R>(1))));
    return check_le("pb_structure", static_cast<double>(worst), tol, scalar_name<R>());
}

// (B - A+) f = (gammaB - gammaA) f, exact coefficient identity
template <class R>
CheckResult shift_identity_check(const DerivedParams<R>& d, std::uint32_t seed, int count,
                                 double tol) {
    std::mt19937 rng(seed);
    R worst = 0;
    const complex_t<R> gap(d.gammaB - d.gammaA);
    for (int i = 0; i < count; ++i) {
        PolyGauss<R> f = widen<R>(random_polygauss(rng, 8));
        PolyGauss<R> lhs = add(apply(op_B(d), f), scale(apply(op_A_dag(d), f), complex_t<R>(-1)));
        cvec<R> diff = poly_add<R>(lhs.poly, cvec<R>(f.poly * (-gap)));
        upd(worst, poly_max_abs<R>(diff));
    }
    return check_le("shift_identity", static_cast<double>(worst), tol,
                    std::string("seed ") + std::to_string(seed) + ", " + scalar_name<R>());
}

// omega b a + lambda (a a + b b) agrees with Omega B A + gamma on random inputs
template <class R>
CheckResult hamiltonian_forms_check(const ModelParams<R>& m, const DerivedParams<R>& d,
                                    std::uint32_t seed, int count, double tol) {
    std::mt19937 rng(seed);
    QuadraticHamiltonian<R> hp{HamiltonianForm::pseudo_bosonic, m, d};
    QuadraticHamiltonian<R> hd{HamiltonianForm::diagonal, m, d};
    R worst = 0;
    for (int i = 0; i < count; ++i) {
        PolyGauss<R> f = widen<R>(random_polygauss(rng, 10));
        PolyGauss<R> lhs = hamiltonian_apply(hp, f);
        PolyGauss<R> rhs = hamiltonian_apply(hd, f);
        const R scale_ref = poly_max_abs<R>(lhs.poly);
        upd(worst, R(poly_max_abs<R>(poly_add<R>(lhs.poly, cvec<R>(-rhs.poly))) / scale_ref));
    }
    return check_le("hamiltonian_forms", static_cast<double>(worst), tol,
                    std::string("seed ") + std::to_string(seed) + ", " + std::to_string(count) +
                        " inputs, " + scalar_name<R>());
}

// H phi_n = (Omega n + gamma) phi_n under the quadratic form itself
template <class R>
CheckResult hamiltonian_eigen_check(const ModelParams<R>& m, const DerivedParams<R>& d,
                                    int n_upto, double tol) {
    QuadraticHamiltonian<R> hp{HamiltonianForm::pseudo_bosonic, m, d};
    EigenFamily<R> fam = build_family(d, Flavor::phi, Method::recursion, n_upto);
    R worst = 0;
    for (int n = 0; n <= n_upto; ++n) {
        const PolyGauss<R>& s = fam.states[n];
        PolyGauss<R> lhs = hamiltonian_apply(hp, s);
        const complex_t<R> en(d.Omega * n + d.gamma);
        cvec<R> diff = poly_add<R>(lhs.poly, cvec<R>(s.poly * (-en)));
        upd(worst, R(poly_max_abs<R>(diff) / poly_max_abs<R>(s.poly)));
    }
    return check_le("hamiltonian_eigen", static_cast<double>(worst), tol,
                    std::string("n<=") + std::to_string(n_upto) + ", " + scalar_name<R>());
}

// raising and lowering across one family; coefficient-relative worst residual
template <class R>
CheckResult ladder_check(const DerivedParams<R>& d, Flavor flavor, int n_upto, double tol) {
    const LadderOp<R> raise = flavor == Flavor::phi ? op_B(d) : op_A_dag(d);
    const LadderOp<R> lower = flavor == Flavor::phi ? op_A(d) : op_B_dag(d);
    EigenFamily<R> fam = build_family(d, flavor, Method::recursion, n_upto + 1);
    using std::sqrt;
    R worst = 0;
    for (int n = 0; n <= n_upto; ++n) {
        const PolyGauss<R>& s = fam.states[n];
        const R ref = poly_max_abs<R>(fam.states[n + 1].poly) * sqrt(R(n + 1));
        cvec<R> up = poly_add<R>(apply(raise, s).poly,
                                 cvec<R>(fam.states[n + 1].poly * complex_t<R>(-sqrt(R(n + 1)))));
        upd(worst, R(poly_max_abs<R>(up) / ref));
        cvec<R> down = apply(lower, s).poly;
        if (n > 0) down = poly_add<R>(down, cvec<R>(fam.states[n - 1].poly * complex_t<R>(-sqrt(R(n)))));
        upd(worst, R(poly_max_abs<R>(down) / poly_max_abs<R>(s.poly)));
    }
    return check_le(flavor == Flavor::phi ? "ladder_phi" : "ladder_psi",
                    static_cast<double>(worst), tol,
                    std::string("n<=") + std::to_string(n_upto) + ", " + scalar_name<R>());
}

// number-like action: B A phi_n = n phi_n and A+ B+ psi_n = n psi_n
template <class R>
CheckResult number_check(const DerivedParams<R>& d, Flavor flavor, int n_upto, double tol) {
    const LadderOp<R> first = flavor == Flavor::phi ? op_A(d) : op_B_dag(d);
    const LadderOp<R> second = flavor == Flavor::phi ? op_B(d) : op_A_dag(d);
    EigenFamily<R> fam = build_family(d, flavor, Method::recursion, n_upto);
    R worst = 0;
    for (int n = 0; n <= n_upto; ++n) {
        const PolyGauss<R>& s = fam.states[n];
        PolyGauss<R> lhs = apply(second, apply(first, s));
        cvec<R> diff = poly_add<R>(lhs.poly, cvec<R>(s.poly * complex_t<R>(-R(n))));
        upd(worst, R(poly_max_abs<R>(diff) / poly_max_abs<R>(s.poly)));
    }
    return check_le(flavor == Flavor::phi ? "number_phi" : "number_psi",
                    static_cast<double>(worst), tol,
                    std::string("n<=") + std::to_string(n_upto) + ", " + scalar_name<R>());
}

// recursion polynomials against the Hermite closed form, coefficient-relative
template <class R>
CheckResult cross_construction_check(const DerivedParams<R>& d, int n_upto, double tol) {
    auto rec = recursion_polys(d, n_upto);
    auto clo = closed_polys(d, n_upto);
    R worst = 0;
    for (int n = 0; n <= n_upto; ++n) {
        cvec<R> diff = poly_add<R>(rec[n], cvec<R>(-clo[n]));
        upd(worst, R(poly_max_abs<R>(diff) / poly_max_abs<R>(clo[n])));
    }
    return check_le("cross_construction", static_cast<double>(worst), tol,
                    std::string("n<=") + std::to_string(n_upto) + ", both flavors share the "
                    "polynomial family, " + scalar_name<R>());
}

// Gram matrix of the two families against the identity
template <class R>
CheckResult gram_identity_check(const EigenFamily<R>& phi, const EigenFamily<R>& psi, int n_upto,
                                double tol) {
    using std::abs;
    R worst = 0;
    for (int i = 0; i <= n_upto; ++i)
        for (int j = 0; j <= n_upto; ++j) {
            const complex_t<R> g = inner_product(phi.states[i], psi.states[j]);
            const complex_t<R> dev = i == j ? g - complex_t<R>(1) : g;
            upd(worst, R(abs(dev)));
        }
    return check_le("gram_identity", static_cast<double>(worst), tol,
                    std::to_string(n_upto + 1) + "x" + std::to_string(n_upto + 1) +
                        " exact moments, " + scalar_name<R>());
}

// ||phi_n|| ||psi_n|| strictly increasing on [5, 50]; constant in the
// degenerate limit, where boundedness is the contract instead
template <class R>
CheckResult norm_growth_check(const EigenFamily<R>& phi, const EigenFamily<R>& psi, int n_lo,
                              int n_hi, bool degenerate) {
    using std::abs;
    std::vector<R> prod;
    for (int n = 0; n <= n_hi; ++n) prod.push_back(norm(phi.states[n]) * norm(psi.states[n]));
    if (degenerate) {
        R worst = 0;
        for (int n = 0; n <= n_hi; ++n) upd(worst, R(abs(prod[n] / prod[0] - 1)));
        return check_le("norm_growth", static_cast<double>(worst), 1e-8,
                        "degenerate limit: product constant (bounded)");
    }
    R min_step = std::numeric_limits<R>::infinity();
    for (int n = n_lo; n < n_hi; ++n) min_step = std::min<R>(min_step, prod[n + 1] - prod[n]);
    const double m = static_cast<double>(min_step);
    return {"norm_growth", m, 0.0, m > 0.0,
            std::string("min forward step on [") + std::to_string(n_lo) + "," +
                std::to_string(n_hi) + "], pass requires > 0"};
}

// ||phi_n||^2 / ||phi_0||^2 against the Laguerre growth law
template <class R>
CheckResult norm_ratio_check(const EigenFamily<R>& phi, int n_upto, double tol) {
    using std::abs;
    NormTable<R> t = norm_table(phi);
    R worst = 0;
    for (int n = 0; n <= n_upto; ++n)
        upd(worst, R(abs(t.ratio[n] - t.candidate[n]) / t.candidate[n]));
    return check_le("norm_ratio_law", static_cast<double>(worst), tol,
                    std::string("n<=") + std::to_string(n_upto) + ", " + scalar_name<R>());
}

// swapping alpha and beta exchanges the two families
template <class R>
CheckResult symmetry_swap_check(const ModelParams<R>& m, double tol) {
    using std::abs;
    const auto d = derive(m);
    const auto ds = derive(ModelParams<R>{m.omega, m.lambda, m.beta, m.alpha});
    R worst = 0;
    upd(worst, R(abs(ds.gammaA - d.gammaB)));
    upd(worst, R(abs(ds.gammaB - d.gammaA)));
    upd(worst, R(abs(ds.k - d.k)));
    const PolyGauss<R> v1 = vacuum(ds, Flavor::phi), v2 = vacuum(d, Flavor::psi);
    upd(worst, R(abs(v1.lin - v2.lin)));
    upd(worst, R(abs(v1.cnst - v2.cnst)));
    upd(worst, R(abs(v1.quad - v2.quad)));
    return check_le("symmetry_swap", static_cast<double>(worst), tol, scalar_name<R>());
}

// partial sums of <f,g> through the two families, both orderings
template <class R>
CheckResult quasi_basis_check(const EigenFamily<R>& phi, const EigenFamily<R>& psi, double tol,
                              double ordering_tol, std::string* ordering_note = nullptr) {
    using std::abs;
    const PolyGauss<R> f(poly_one<R>(), R(0.12), complex_t<R>(R(-0.2)), complex_t<R>(0));
    const PolyGauss<R> g(poly_one<R>(), R(4.0), complex_t<R>(R(0.3)), complex_t<R>(0));
    const complex_t<R> exact = inner_product(f, g);
    const R scale_ref = abs(exact);
    std::vector<int> stops{10, 20, 40, 60};
    std::vector<R> errs;
    R ordering_gap = 0;
    for (int N : stops) {
        QuasiBasisSums<R> s = quasi_basis_partial_sum(f, g, phi, psi, N);
        errs.push_back(R(abs(s.via_phi_psi - exact) / scale_ref));
        if (N == 60) ordering_gap = abs(s.via_phi_psi - s.via_psi_phi) / scale_ref;
    }
    bool monotone = true;
    const R floor = scale_ref * R(1e-30);
    for (size_t i = 1; i < errs.size(); ++i)
        if (errs[i] > errs[i - 1] + floor) monotone = false;
    const double final_err = static_cast<double>(errs.back());
    const double gap = static_cast<double>(ordering_gap);
    // the orderings cannot agree beyond the accuracy either sum has reached,
    // so away from the default regime the gap bound floors at the final error
    const double gap_tol = std::max(ordering_tol, final_err);
    std::string note = std::string("N in {10,20,40,60} err trend ") +
                       (monotone ? "monotone" : "NOT monotone") + ", orderings gap " + sci(gap) +
                       " (tol " + sci(gap_tol) + "), " + scalar_name<R>();
    if (ordering_note) *ordering_note = note;
    const bool pass = final_err <= tol && monotone && gap <= gap_tol;
    return {"quasi_basis", final_err, tol, pass, std::move(note)};
}

// slope of log ||phi_n|| in sqrt(n) against |gammaA - gammaB|; only enforced in
// the asymptotic regime |gammaA - gammaB| sqrt(n_max) >= 2, reported otherwise.
// The exact-moment norms near n = 100 cancel through more digits than float50
// carries (the psi family loses its sign past n ~ 90 at the widest preset), so
// this one check runs at float100 and rejects non-finite slopes outright.
inline CheckResult growth_law_check(const ModelParams<double>& m, double rel_tol) {
    using R = float100;
    using std::abs;
    const DerivedParams<R> d = derive(widen_model<R>(m));
    const R target = abs(d.gammaA - d.gammaB);
    if (static_cast<double>(target) == 0.0)
        return {"growth_law", 0.0, rel_tol, true, "degenerate limit: no growth to fit"};
    const std::vector<int> ns{36, 49, 64, 81, 100};
    EigenFamily<R> phi = build_family(d, Flavor::phi, Method::recursion, 100);
    EigenFamily<R> psi = build_family(d, Flavor::psi, Method::recursion, 100);
    const R s_phi = growth_fit(phi, ns), s_psi = growth_fit(psi, ns);
    const double dev_phi = static_cast<double>(R(abs(s_phi - target) / target));
    const double dev_psi = static_cast<double>(R(abs(s_psi - target) / target));
    const bool finite = !std::isnan(dev_phi) && !std::isnan(dev_psi);
    const double worst = finite ? std::max(dev_phi, dev_psi)
                                : std::numeric_limits<double>::quiet_NaN();
    const bool asymptotic = static_cast<double>(target) * 10.0 >= 2.0;
    std::string note = std::string("slopes ") + sci(static_cast<double>(s_phi)) + "/" +
                       sci(static_cast<double>(s_psi)) + " vs " +
                       sci(static_cast<double>(target)) + ", " + scalar_name<R>();
    if (!asymptotic && finite)
        return {"growth_law", worst, rel_tol, true,
                note + "; pre-asymptotic regime, informational"};
    return {"growth_law", worst, rel_tol, finite && worst <= rel_tol, note};
}

template <class R>
std::vector<complex_t<R>> value_grid(const PolyGauss<R>& f, const R& lo, const R& hi, int n) {
    std::vector<complex_t<R>> v(n);
    for (int i = 0; i < n; ++i) v[i] = eval(f, lo + (hi - lo) * R(i) / R(n - 1));
    return v;
}

// pointwise moduli of the four constructions, closed form as reference, one
// fitted positive constant per comparison; deviations are normalized by the
// sup of the reference over the grid, the same normalization grid residuals
// use everywhere else. The worst pointwise-relative value is reported in the
// note: at the truncation pinned here it is dominated by the displacement
// tail at the grid edge, where the states are ~5e-6 of their peak.
template <class R>
CheckResult four_way_check(const DerivedParams<R>& d, const std::vector<complex_t<R>>& zs, int L,
                           double tol) {
    using std::abs;
    R worst = 0, worst_pt = 0;
    const R lo = -4, hi = 4;
    const int pts = 41;
    for (Flavor flavor : {Flavor::phi, Flavor::psi}) {
        for (const auto& z : zs) {
            const auto ref = value_grid<R>(closed_form_state(d, flavor, z).repr, lo, hi, pts);
            R sup = 0;
            for (const auto& v : ref) upd(sup, R(abs(v)));
            const PolyGauss<R> others[3] = {series_state(d, flavor, z, L).repr,
                                            ode_state(d, flavor, z).repr,
                                            displacement_state(d, flavor, z, L).repr};
            for (const auto& st : others) {
                const auto got = value_grid<R>(st, lo, hi, pts);
                R num = 0, den = 0;
                for (int i = 0; i < pts; ++i) {
                    num += abs(ref[i]) * abs(got[i]);
                    den += abs(got[i]) * abs(got[i]);
                }
                const R s = num / den;
                for (int i = 0; i < pts; ++i) {
                    const R diff = abs(s * abs(got[i]) - abs(ref[i]));
                    upd(worst, R(diff / sup));
                    upd(worst_pt, R(diff / abs(ref[i])));
                }
            }
        }
    }
    return check_le("four_way_moduli", static_cast<double>(worst), tol,
                    std::string("L=") + std::to_string(L) + ", 41 pts on [-4,4], " +
                        std::to_string(zs.size()) + " z values, both flavors, worst pointwise " +
                        sci(static_cast<double>(worst_pt)) + ", " + scalar_name<R>());
}

template <class R>
CheckResult eigen_residual_check(const DerivedParams<R>& d, const std::vector<complex_t<R>>& zs,
                                 Construction method, int L, double tol) {
    R worst = 0;
    for (Flavor flavor : {Flavor::phi, Flavor::psi}) {
        for (const auto& z : zs) {
            BiCoherentState<R> st = method == Construction::closed_form
                                        ? closed_form_state(d, flavor, z)
                                        : series_state(d, flavor, z, L);
            upd(worst, eigen_residual(d, st));
        }
    }
    const char* name = method == Construction::closed_form ? "eigen_residual_closed"
                                                           : "eigen_residual_series";
    return check_le(name, static_cast<double>(worst), tol,
                    std::string("41 pts on [-5,5], both flavors, ") + scalar_name<R>());
}

// <phi~(z), psi~(z)> = 1 for the ode-normalized pair
template <class R>
CheckResult ode_pairing_check(const DerivedParams<R>& d, const std::vector<complex_t<R>>& zs,
                              double tol) {
    using std::abs;
    R worst = 0;
    for (const auto& z : zs) {
        const auto p = ode_state(d, Flavor::phi, z);
        const auto q = ode_state(d, Flavor::psi, z);
        upd(worst, R(abs(inner_product(p.repr, q.repr) - complex_t<R>(1))));
    }
    return check_le("ode_pairing", static_cast<double>(worst), tol, scalar_name<R>());
}

// displacement sum against the series, complex least-squares constant reported
template <class R>
CheckResult displacement_match_check(const DerivedParams<R>& d, const complex_t<R>& z, int L,
                                     double tol) {
    using std::abs;
    const auto ref = value_grid<R>(series_state(d, Flavor::phi, z, L).repr, R(-4), R(4), 41);
    const auto got = value_grid<R>(displacement_state(d, Flavor::phi, z, L).repr, R(-4), R(4), 41);
    complex_t<R> num = 0;
    R den = 0;
    for (size_t i = 0; i < ref.size(); ++i) {
        num += conj(got[i]) * ref[i];
        den += abs(got[i]) * abs(got[i]);
    }
    const complex_t<R> s = num / den;
    R worst = 0;
    for (size_t i = 0; i < ref.size(); ++i)
        upd(worst, R(abs(s * got[i] - ref[i]) / abs(ref[i])));
    return check_le("displacement_match", static_cast<double>(worst), tol,
                    std::string("fitted constant deviates from 1 by ") +
                        sci(static_cast<double>(abs(s - complex_t<R>(1)))) + ", " +
                        scalar_name<R>());
}

template <class R>
CheckResult normalization_series_check(double tol) {
    using std::abs, std::exp;
    R worst = 0;
    for (int i = 0; i <= 12; ++i) {
        const R zmod = R(i) / 4;
        const R got = normalization_series<R>(zmod, 60);
        const R want = exp(-zmod * zmod / 2);
        upd(worst, R(abs(got - want) / want));
    }
    return check_le("normalization_series", static_cast<double>(worst), tol,
                    std::string("|z| <= 3, K=60, ") + scalar_name<R>());
}

template <class R>
CheckResult convergence_radius_check() {
    using std::abs;
    const auto model = model_convergence_spec<R>();
    const bool inf_ok = model.rho == std::numeric_limits<R>::infinity();
    const auto clamped = convergence_radius<R>(R(1), R(1), R(1), R(1), R(2), R(3), R(1));
    const auto mixed = convergence_radius<R>(R(1), R(1), R(1), R(1), R(0.25), R(0.5), R(2));
    R worst = abs(clamped.rho - R(1));
    upd(worst, R(abs(mixed.rho - R(0.5))));
    const double m = static_cast<double>(worst);
    return {"convergence_radius", m, 1e-15, inf_ok && m <= 1e-15,
            std::string("model instance rho ") + (inf_ok ? "infinite" : "NOT infinite")};
}

inline CheckResult moment_measure_checkresult(int k_max, double tol) {
    return check_le("moment_measure", moment_measure_check<double>(k_max), tol,
                    std::string("k<=") + std::to_string(k_max) + ", double");
}

// unit-norm centered Gaussian used by the resolution checks
template <class R>
PolyGauss<R> unit_gaussian() {
    using std::log;
    return PolyGauss<R>(poly_one<R>(), R(0.5), complex_t<R>(0), complex_t<R>(log(pi_v<R>()) / 4));
}

// unit-norm odd partner x e^{-x^2/2}, orthogonal to the even one by parity
template <class R>
PolyGauss<R> unit_odd_gaussian() {
    using std::log, std::sqrt;
    cvec<R> p(2);
    p << complex_t<R>(0), complex_t<R>(1);
    const R nsq = sqrt(pi_v<R>()) / 2;
    return PolyGauss<R>(std::move(p), R(0.5), complex_t<R>(0), complex_t<R>(log(nsq) / 2));
}

template <class R>
void resolution_checks(const DerivedParams<R>& d, const VerifyOptions& opt,
                       std::vector<CheckResult>& out) {
    using std::abs;
    const PolyGauss<R> f = unit_gaussian<R>();
    const R radius = R(opt.disk_radius);
    const complex_t<R> got =
        resolution_of_identity(d, f, f, radius, opt.grid_theta, opt.grid_r, false);
    const complex_t<R> want = inner_product(f, f);
    const double rel = static_cast<double>(R(abs(got - want) / abs(want)));
    char rbuf[32];
    std::snprintf(rbuf, sizeof rbuf, "%g", opt.disk_radius);
    out.push_back(check_le("resolution_gaussian", rel, 1e-3,
                           std::string("R=") + rbuf + ", " + std::to_string(opt.grid_theta) + "x" +
                               std::to_string(opt.grid_r) + " polar grid, " + scalar_name<R>()));
    const PolyGauss<R> g = unit_odd_gaussian<R>();
    const complex_t<R> cross =
        resolution_of_identity(d, f, g, radius, opt.grid_theta, opt.grid_r, false);
    out.push_back(check_le("resolution_parity", static_cast<double>(R(abs(cross))), 1e-3,
                           std::string("even against odd, ") + scalar_name<R>()));
    const complex_t<R> swapped =
        resolution_of_identity(d, f, f, radius, opt.grid_theta, opt.grid_r, true);
    out.push_back(check_le("resolution_orderings",
                           static_cast<double>(R(abs(got - swapped) / abs(want))), 2e-3,
                           std::string("both integrand orderings, ") + scalar_name<R>()));
}

template <class R>
std::vector<complex_t<R>> standard_z_set() {
    return {complex_t<R>(0), complex_t<R>(1), complex_t<R>(0, 1), complex_t<R>(1, 1),
            complex_t<R>(2, -1), complex_t<R>(-1.5)};
}

inline SuiteReport algebra_suite(const ModelParams<double>& m0, const VerifyOptions& opt) {
    SuiteReport rep{"algebra", {}};
    auto& c = rep.checks;
    if (opt.extended) {
        const auto m = widen_model<float50>(m0);
        const auto d = derive(m);
        c.push_back(commutator_check(m, d, 101u, 20, 10, 1e-13));
        c.push_back(pb_structure_check(d, 1e-14));
        c.push_back(shift_identity_check(d, 202u, 5, 1e-15));
        c.push_back(hamiltonian_forms_check(m, d, 303u, 10, 1e-12));
        c.push_back(ladder_check(d, Flavor::phi, 25, 1e-11));
        c.push_back(ladder_check(d, Flavor::psi, 25, 1e-11));
        c.push_back(number_check(d, Flavor::phi, 25, 1e-11));
        c.push_back(number_check(d, Flavor::psi, 25, 1e-11));
        c.push_back(hamiltonian_eigen_check(m, d, 20, 1e-11));
    } else {
        const auto m = widen_model<double>(m0);
        const auto d = derive(m);
        const auto ml = widen_model<long double>(m0);
        const auto dl = derive(ml);
        c.push_back(commutator_check(m, d, 101u, 20, 10, 1e-13));
        c.push_back(pb_structure_check(d, 1e-14));
        c.push_back(shift_identity_check(d, 202u, 5, 1e-15));
        c.push_back(hamiltonian_forms_check(m, d, 303u, 10, 1e-12));
        c.push_back(ladder_check(dl, Flavor::phi, 25, 1e-11));
        c.push_back(ladder_check(dl, Flavor::psi, 25, 1e-11));
        c.push_back(number_check(dl, Flavor::phi, 25, 1e-11));
        c.push_back(number_check(dl, Flavor::psi, 25, 1e-11));
        c.push_back(hamiltonian_eigen_check(ml, dl, 20, 1e-11));
    }
    return rep;
}

inline SuiteReport eigensystem_suite(const ModelParams<double>& m0, const VerifyOptions& opt) {
    SuiteReport rep{"eigensystem", {}};
    auto& c = rep.checks;
    const bool degenerate = m0.alpha == m0.beta;
    {
        const auto mf = widen_model<float50>(m0);
        const auto df = derive(mf);
        EigenFamily<float50> phi = build_family(df, Flavor::phi, Method::recursion, 60);
        EigenFamily<float50> psi = build_family(df, Flavor::psi, Method::recursion, 60);
        c.push_back(gram_identity_check(phi, psi, 30, 1e-10));
        c.push_back(norm_growth_check(phi, psi, 5, 50, degenerate));
        c.push_back(norm_ratio_check(phi, 40, 1e-8));
        c.push_back(quasi_basis_check(phi, psi, 1e-6, 1e-9));
        c.push_back(growth_law_check(m0, 0.15));
    }
    if (opt.extended) {
        const auto mf = widen_model<float50>(m0);
        const auto df = derive(mf);
        c.push_back(cross_construction_check(df, 25, 1e-10));
        c.push_back(symmetry_swap_check(mf, 1e-14));
    } else {
        c.push_back(cross_construction_check(derive(widen_model<long double>(m0)), 25, 1e-10));
        c.push_back(symmetry_swap_check(widen_model<double>(m0), 1e-14));
    }
    return rep;
}

inline SuiteReport coherent_suite(const ModelParams<double>& m0, const VerifyOptions& opt) {
    SuiteReport rep{"coherent", {}};
    auto& c = rep.checks;
    const auto d = derive(widen_model<double>(m0));
    c.push_back(eigen_residual_check(d, standard_z_set<double>(), Construction::closed_form, 0,
                                     1e-10));
    c.push_back(ode_pairing_check(
        d, {std::complex<double>(0), std::complex<double>(1), std::complex<double>(0, 1),
            std::complex<double>(1, 1)},
        1e-10));
    c.push_back(convergence_radius_check<double>());
    if (opt.extended) {
        const auto df = derive(widen_model<float50>(m0));
        c.push_back(four_way_check(df, standard_z_set<float50>(), opt.L, 1e-6));
        c.push_back(eigen_residual_check(
            df, {complex50(1), complex50(0, 1), complex50(1, 1), complex50(-1.5)},
            Construction::series, opt.L, 1e-7));
        c.push_back(displacement_match_check(df, complex50(1, 0.5), opt.L, 1e-7));
        c.push_back(normalization_series_check<float50>(1e-12));
    } else {
        const auto dl = derive(widen_model<long double>(m0));
        c.push_back(four_way_check(dl, standard_z_set<long double>(), opt.L, 1e-6));
        c.push_back(eigen_residual_check(
            dl,
            {std::complex<long double>(1), std::complex<long double>(0, 1),
             std::complex<long double>(1, 1), std::complex<long double>(-1.5)},
            Construction::series, opt.L, 1e-7));
        c.push_back(displacement_match_check(dl, std::complex<long double>(1, 0.5), opt.L, 1e-7));
        c.push_back(normalization_series_check<double>(1e-12));
    }
    return rep;
}

inline SuiteReport identity_suite(const ModelParams<double>& m0, const VerifyOptions& opt) {
    SuiteReport rep{"identity", {}};
    rep.checks.push_back(moment_measure_checkresult(6, 1e-10));
    if (opt.extended) {
        resolution_checks(derive(widen_model<long double>(m0)), opt, rep.checks);
    } else {
        resolution_checks(derive(widen_model<double>(m0)), opt, rep.checks);
    }
    return rep;
}

inline std::vector<SuiteReport> run_suites(const ModelParams<double>& m, const std::string& which,
                                           const VerifyOptions& opt) {
    std::vector<SuiteReport> out;
    if (which == "algebra" || which == "all") out.push_back(algebra_suite(m, opt));
    if (which == "eigensystem" || which == "all") out.push_back(eigensystem_suite(m, opt));
    if (which == "coherent" || which == "all") out.push_back(coherent_suite(m, opt));
    if (which == "identity" || which == "all") out.push_back(identity_suite(m, opt));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace swanson::verify
