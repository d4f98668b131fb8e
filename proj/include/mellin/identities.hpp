#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/cylinder.hpp"
#include "mellin/gamma.hpp"
#include "mellin/master.hpp"
#include "mellin/polynomials.hpp"
#include "mellin/series.hpp"
#include "mellin/transform.hpp"
#include "mellin/zeta.hpp"

namespace mellin {

struct UnknownIdentity : DomainError {
    explicit UnknownIdentity(const std::string& id)
        : DomainError("unknown identity: " + id) {}
};

// Splitmix-free PCG-style LCG; the whole verification pipeline derives its
// randomness from here so runs are reproducible across platforms.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in [0, 1), 53 bits
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive on both ends; goes through uniform() because the low bits
    // of the raw LCG state have short periods
    int uniform_int(int lo, int hi) {
        int span = hi - lo + 1;
        return lo + std::min(int(uniform() * span), span - 1);
    }

  private:
    std::uint64_t state_;
};

struct CheckResult {
    std::string id;
    std::string params;
    Complex lhs{0.0};
    Complex rhs{0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::string note;  // empty unless the evaluator threw
};

// One sampled instance: params are fixed at draw time, evaluation is
// deferred so the runner can turn exceptions into failing results.
struct DrawnCase {
    std::string params;
    std::function<std::pair<Complex, Complex>()> eval;
};

struct IdentitySpec {
    std::string id;
    std::string statement;
    // Entry points used by each side, for auditing that the two routes
    // share nothing beyond the shared numerics substrate.
    std::vector<std::string> lhs_calls;
    std::vector<std::string> rhs_calls;
    double tol_rel;
    double tol_abs;
    std::function<DrawnCase(Lcg&)> draw;
};

struct RunConfig {
    std::uint64_t seed = 12345;
    int samples = 10;  // per identity
    std::optional<double> tol_rel;
    std::optional<double> tol_abs;
};

struct Report {
    std::uint64_t seed = 0;
    int n_pass = 0;
    int n_fail = 0;
    double wall_time_s = 0.0;
    std::vector<CheckResult> results;
};

// Closed-form integrands for the forward transforms.  Each is the x-space
// counterpart of one of the registered interpolation rules.
namespace kernels {

// e^{-zx}/(1 - e^{-x}) - 1/x, the Hurwitz zeta kernel with its x = 0 pole
// removed so the transform exists on 0 < Re(s) < 1.  Near zero the two
// terms cancel to O(1); series division keeps full precision there.
inline double hurwitz_kernel(double x, double z) {
    if (std::abs(x) >= 0.5)
        return std::exp(-z * x) / (-std::expm1(-x)) - 1.0 / x;
    constexpr int K = 18;
    double A[K], B[K], C[K];
    A[0] = 1.0;
    B[0] = 1.0;
    for (int k = 1; k < K; ++k) {
        A[k] = A[k - 1] * (-z) / double(k);
        B[k] = -B[k - 1] / double(k + 1);  // (-1)^k/(k+1)!
    }
    for (int n = 0; n < K; ++n) {
        double acc = A[n];
        for (int j = 1; j <= n; ++j) acc -= B[j] * C[n - j];
        C[n] = acc;
    }
    // (C(x) - 1)/x with C[0] = 1
    double acc = 0.0;
    for (int n = K - 1; n >= 1; --n) acc = acc * x + C[n];
    return acc;
}

// e^{-zx}/(1 + e^{-x}); transform is Gamma(s) eta(s, z) for Re(s) > 0
inline double eta_kernel(double x, double z) {
    return std::exp(-z * x) / (1.0 + std::exp(-x));
}

// sech x written without overflow; transform is 2 Gamma(s) L(s)
inline double sech_kernel(double x) {
    double e = std::exp(-std::abs(x));
    return 2.0 * e / (1.0 + e * e);
}

// e^{-z}(e^{z e^{-x}} - 1), the Bell kernel minus its x -> inf limit;
// transform is Gamma(s) e^{-z} sum_{k>=1} z^k k^{-s}/k!
inline double bell_kernel(double x, double z) {
    return std::exp(-z) * std::expm1(z * std::exp(-x));
}

// e^{2xz - x^2}; transform is e^{z^2/2} 2^{-s/2} Gamma(s) D_{-s}(-sqrt(2) z)
inline double hermite_kernel(double x, double z) {
    return std::exp(x * (2.0 * z - x));
}

}  // namespace kernels

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fmt_params(const char* fmt, ...) {
    char buf[160];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

inline QuadratureConfig forward_quadrature() { return {1e-14, 1e-9, 12}; }

// sum_{k>=1} z^k k^{-s} / k!
inline Complex bell_dirichlet_sum(Complex s, double z) {
    auto term = [=](int n) {
        double k = double(n + 1);
        return std::exp(Complex{k * std::log(z) - std::lgamma(k + 1.0)} -
                        s * std::log(k));
    };
    return sum_series(term, {}).value;
}

inline std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> reg;

    reg.push_back(
        {"L-euler-number",
         "L(-2n) = E_{2n}/2",
         {"euler_L", "hurwitz_zeta"},
         {"euler_numbers"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             int n = 2 * rng.uniform_int(0, 8);
             return DrawnCase{fmt_params("n=%02d", n), [n]() {
                                  Complex lhs = euler_L(Complex{double(-n)});
                                  Complex rhs =
                                      0.5 * euler_numbers(n).values[size_t(n)];
                                  return std::pair{lhs, rhs};
                              }};
         }});

    reg.push_back(
        {"L-mellin",
         "int_0^inf x^{s-1} sech x dx = 2 Gamma(s) L(s)",
         {"sech_kernel", "mellin_forward"},
         {"euler_L", "gamma"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             double t = rng.uniform(-5.0, 5.0);
             return DrawnCase{
                 fmt_params("t=%+.17g", t), [t]() {
                     Complex s{0.5, t};
                     auto g = [](double x) { return kernels::sech_kernel(x); };
                     Complex lhs = mellin_forward(g, s, forward_quadrature()).value;
                     Complex rhs = 2.0 * gamma(s) * euler_L(s);
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"bell-dobinski",
         "sum_k k^n z^k/(k! e^z) equals the Stirling form of phi_n(z)",
         {"exp_poly_dobinski"},
         {"exp_poly", "stirling2_triangle"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             int n = rng.uniform_int(0, 12);
             double z = rng.uniform(0.25, 4.0);
             return DrawnCase{fmt_params("n=%02d z=%.17g", n, z), [n, z]() {
                                  Complex lhs{exp_poly_dobinski(double(n), z)};
                                  Complex rhs = exp_poly(n, Complex{z});
                                  return std::pair{lhs, rhs};
                              }};
         }});

    reg.push_back(
        {"bell-mellin",
         "int_0^inf x^{s-1} e^{-z}(e^{z e^{-x}} - 1) dx = Gamma(s) e^{-z} "
         "sum_{k>=1} z^k k^{-s}/k!",
         {"bell_kernel", "mellin_forward"},
         {"gamma", "sum_series"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             double t = rng.uniform(-5.0, 5.0);
             double z = rng.uniform(0.25, 4.0);
             return DrawnCase{
                 fmt_params("t=%+.17g z=%.17g", t, z), [t, z]() {
                     Complex s{0.5, t};
                     auto g = [z](double x) { return kernels::bell_kernel(x, z); };
                     Complex lhs = mellin_forward(g, s, forward_quadrature()).value;
                     Complex rhs =
                         gamma(s) * std::exp(-z) * bell_dirichlet_sum(s, z);
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"eta-euler-poly",
         "eta(-n, z) = E_n(z)/2",
         {"alt_hurwitz_eta", "hurwitz_zeta"},
         {"euler_poly"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             int n = rng.uniform_int(0, 20);
             double z = rng.uniform(0.1, 5.0);
             return DrawnCase{
                 fmt_params("n=%02d z=%.17g", n, z), [n, z]() {
                     Complex lhs = alt_hurwitz_eta(Complex{double(-n)}, Complex{z});
                     Complex rhs = 0.5 * euler_poly(n, Complex{z});
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"eta-mellin",
         "int_0^inf x^{s-1} e^{-zx}/(1 + e^{-x}) dx = Gamma(s) eta(s, z)",
         {"eta_kernel", "mellin_forward"},
         {"alt_hurwitz_eta", "gamma"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             double t = rng.uniform(-5.0, 5.0);
             double z = rng.uniform(0.25, 4.0);
             return DrawnCase{
                 fmt_params("t=%+.17g z=%.17g", t, z), [t, z]() {
                     Complex s{0.5, t};
                     auto g = [z](double x) { return kernels::eta_kernel(x, z); };
                     Complex lhs = mellin_forward(g, s, forward_quadrature()).value;
                     Complex rhs = gamma(s) * alt_hurwitz_eta(s, Complex{z});
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"hermite-cylinder",
         "H_n(z) = 2^{n/2} e^{z^2/2} D_n(sqrt(2) z)",
         {"hermite"},
         {"parabolic_cylinder_int"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             int n = rng.uniform_int(0, 15);
             double z = rng.uniform(-3.0, 3.0);
             return DrawnCase{
                 fmt_params("n=%02d z=%+.17g", n, z), [n, z]() {
                     Complex lhs = hermite(n, Complex{z});
                     Complex rhs{std::pow(2.0, 0.5 * n) * std::exp(0.5 * z * z) *
                                 parabolic_cylinder_int(n, std::sqrt(2.0) * z)};
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"hermite-mellin",
         "int_0^inf x^{s-1} e^{2xz - x^2} dx = e^{z^2/2} 2^{-s/2} Gamma(s) "
         "D_{-s}(-sqrt(2) z)",
         {"hermite_kernel", "mellin_forward"},
         {"parabolic_cylinder_neg", "gamma"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             double t = rng.uniform(-2.0, 2.0);
             double z = rng.uniform(-3.0, 3.0);
             return DrawnCase{
                 fmt_params("t=%+.17g z=%+.17g", t, z), [t, z]() {
                     Complex s{0.5, t};
                     auto g = [z](double x) {
                         return kernels::hermite_kernel(x, z);
                     };
                     Complex lhs = mellin_forward(g, s, forward_quadrature()).value;
                     Complex rhs = std::exp(0.5 * z * z) *
                                   std::exp(-0.5 * s * std::log(2.0)) * gamma(s) *
                                   parabolic_cylinder_neg(s, -std::sqrt(2.0) * z);
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"master",
         "int_0^inf x^{s-1} sum_n f(n)(-x)^n/n! dx = f(-s) Gamma(s)",
         {"master_theorem_pair", "residue_series"},
         {"gamma"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             static const struct {
                 const char* name;
                 Complex (*f)(Complex);
             } kernels[3] = {
                 {"1", [](Complex) { return Complex{1.0}; }},
                 {"1/(1+s)", [](Complex w) { return 1.0 / (1.0 + w); }},
                 {"gamma(1+s)", [](Complex w) { return gamma(1.0 + w); }},
             };
             int k = rng.uniform_int(0, 2);
             double s = rng.uniform(0.3, 0.7);
             return DrawnCase{
                 fmt_params("f=%s s=%.17g", kernels[k].name, s), [k, s]() {
                     MasterPair p = master_theorem_pair(
                         kernels[k].f, Complex{s}, {1e-14, 1e-8, 8});
                     return std::pair{p.transform.value, p.interpolated};
                 }};
         }});

    reg.push_back(
        {"zeta-bernoulli",
         "zeta(-n, z) = -B_{n+1}(z)/(n+1)",
         {"hurwitz_zeta"},
         {"hurwitz_zeta_neg_int", "bernoulli_poly"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             int n = rng.uniform_int(0, 20);
             double z = rng.uniform(0.1, 5.0);
             return DrawnCase{
                 fmt_params("n=%02d z=%.17g", n, z), [n, z]() {
                     Complex lhs = hurwitz_zeta(Complex{double(-n)}, Complex{z});
                     Complex rhs = hurwitz_zeta_neg_int(n, Complex{z});
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"zeta-mellin",
         "int_0^inf x^{s-1} (e^{-zx}/(1 - e^{-x}) - 1/x) dx = Gamma(s) "
         "zeta(s, z) on 0 < Re(s) < 1",
         {"hurwitz_kernel", "mellin_forward"},
         {"hurwitz_zeta", "gamma"},
         1e-6,
         1e-8,
         [](Lcg& rng) {
             double t = rng.uniform(-5.0, 5.0);
             double z = rng.uniform(0.25, 4.0);
             return DrawnCase{
                 fmt_params("t=%+.17g z=%.17g", t, z), [t, z]() {
                     Complex s{0.5, t};
                     auto g = [z](double x) {
                         return kernels::hurwitz_kernel(x, z);
                     };
                     Complex lhs = mellin_forward(g, s, forward_quadrature()).value;
                     Complex rhs = gamma(s) * hurwitz_zeta(s, Complex{z});
                     return std::pair{lhs, rhs};
                 }};
         }});

    reg.push_back(
        {"zeta-residue-series",
         "sum_n zeta(-n, z)(-x)^n/n! equals the kernel e^{-zx}/(1 - e^{-x}) "
         "- 1/x for 0 < x < 2 pi",
         {"residue_series", "hurwitz_zeta"},
         {"hurwitz_kernel"},
         1e-8,
         1e-10,
         [](Lcg& rng) {
             double x = rng.uniform(0.1, 3.0);
             double z = rng.uniform(0.1, 5.0);
             return DrawnCase{
                 fmt_params("x=%.17g z=%.17g", x, z), [x, z]() {
                     auto f = [z](Complex s) {
                         return hurwitz_zeta(s, Complex{z});
                     };
                     Complex lhs = residue_series(f, x).value;
                     Complex rhs{kernels::hurwitz_kernel(x, z)};
                     return std::pair{lhs, rhs};
                 }};
         }});

    return reg;
}

}  // namespace detail

inline const std::vector<IdentitySpec>& identity_registry() {
    static const std::vector<IdentitySpec> reg = detail::build_registry();
    return reg;
}

inline const IdentitySpec& find_identity(const std::string& id) {
    for (const auto& spec : identity_registry())
        if (spec.id == id) return spec;
    throw UnknownIdentity(id);
}

inline std::vector<CheckResult> run_identity(const IdentitySpec& spec,
                                             const RunConfig& rc) {
    Lcg rng(rc.seed ^ detail::fnv1a64(spec.id));
    double tol_rel = rc.tol_rel.value_or(spec.tol_rel);
    double tol_abs = rc.tol_abs.value_or(spec.tol_abs);
    std::vector<CheckResult> out;
    out.reserve(size_t(rc.samples));
    for (int k = 0; k < rc.samples; ++k) {
        DrawnCase drawn = spec.draw(rng);
        CheckResult r;
        r.id = spec.id;
        r.params = std::move(drawn.params);
        try {
            auto [lhs, rhs] = drawn.eval();
            r.lhs = lhs;
            r.rhs = rhs;
            r.abs_err = std::abs(lhs - rhs);
            r.rel_err = r.abs_err /
                        std::max({std::abs(lhs), std::abs(rhs), 1e-300});
            r.pass = r.abs_err <= tol_abs || r.rel_err <= tol_rel;
        } catch (const std::exception& e) {
            r.pass = false;
            r.note = e.what();
        }
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return a.params < b.params;
              });
    return out;
}

inline std::vector<CheckResult> run_identity(const std::string& id,
                                             const RunConfig& rc) {
    return run_identity(find_identity(id), rc);
}

inline Report run_all(const RunConfig& rc = {}) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = rc.seed;
    for (const auto& spec : identity_registry()) {
        std::vector<CheckResult> rs = run_identity(spec, rc);
        for (auto& r : rs) {
            (r.pass ? rep.n_pass : rep.n_fail)++;
            rep.results.push_back(std::move(r));
        }
    }
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

}  // namespace mellin
