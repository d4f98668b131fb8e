#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/gamma.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/series.hpp"
#include "mellin/transform.hpp"

namespace mellin {

namespace detail {

// Pointwise evaluator for g(x) = sum f(n)(-x)^n/n! across the whole
// half-line.  The direct sum is used wherever its own error estimate
// meets the budget; elsewhere g is continued by the equivalent
// vertical-line representation
//   g(x) = (1/2 pi) int x^{-(a+it)} Gamma(a+it) f(-a-it) dt,
// which is the same function by the residue theorem.  The line sits at
// a = (3+sigma)/4, strictly above the outer Mellin abscissa sigma, so
// quadrature noise weighted by x^{sigma-1} stays integrable; with the
// line at or below sigma the weighted noise diverges and the check
// drowns.  Beyond x_cap the envelope K x^{-a} makes the outer tail
// negligible and the evaluator returns 0.
class MasterEvaluator {
  public:
    MasterEvaluator(std::function<Complex(Complex)> f, double sigma,
                    const SeriesConfig& scfg)
        : f_(std::move(f)), sigma_(sigma), a_(0.25 * (3.0 + sigma)) {
        scfg_ = scfg;
        scfg_.max_terms = std::min(scfg_.max_terms, 2000);
        double sup = 0.0;
        for (int k = -40; k <= 40; ++k)
            sup = std::max(sup, std::abs(f_(Complex{-a_, -0.25 * k})));
        T_ = choose_truncation(a_, 10.0 * sup, 1e-13);
        double K = 0.0;
        for (double t = -T_; t <= T_; t += 0.25) K += std::abs(line_value(t));
        K *= 0.25 / (2.0 * pi);
        double gap = a_ - sigma_;
        ln_cap_ = std::min(
            600.0, std::log(std::max(K, 1e-3) / (1e-10 * gap)) / gap);
    }

    Complex operator()(double x) {
        if (std::log(x) > ln_cap_) return 0.0;
        try {
            double coeff = 1.0;  // (-x)^n / n!
            int at = 0;
            auto direct = sum_series(
                [&](int n) -> Complex {
                    while (at < n) coeff *= -x / ++at;
                    return coeff * f_(Complex{double(n)});
                },
                scfg_);
            if (direct.error_estimate <=
                1e-9 * std::max(1.0, std::abs(direct.value)))
                return direct.value;
        } catch (const NonFiniteTerm&) {
            // factorial-growth kernels overflow the direct route; fall through
        }
        return contour(x);
    }

  private:
    struct Panel {
        std::array<double, 15> t;
        std::array<double, 15> wk;
        std::array<double, 15> wg;
        std::array<Complex, 15> G;
    };

    Complex line_value(double t) const {
        return gamma(Complex{a_, t}) * f_(Complex{-a_, -t});
    }

    const Panel& panel(int level, int idx) {
        std::int64_t key = (std::int64_t(level) << 32) | std::uint32_t(idx);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        double width = 2.0 * T_ / double(1 << level);
        double lo = -T_ + width * idx;
        double c = lo + 0.5 * width;
        double h = 0.5 * width;
        Panel p;
        int m = 0;
        for (int j = 0; j < 7; ++j) {
            for (double sgn : {-1.0, 1.0}) {
                p.t[m] = c + sgn * h * gk_xk[j];
                p.wk[m] = gk_wk[j] * h;
                p.wg[m] = (j % 2 == 1) ? gk_wg[j / 2] * h : 0.0;
                ++m;
            }
        }
        p.t[m] = c;
        p.wk[m] = gk_wk[7] * h;
        p.wg[m] = gk_wg[3] * h;
        for (int i = 0; i < 15; ++i) p.G[i] = line_value(p.t[i]);
        return cache_.emplace(key, p).first->second;
    }

    Complex contour(double x) {
        double lnx = std::log(x);
        // absolute budget matched to the outer exp-sinh weights: far-out
        // x only needs g to within ~1e-10 x^{-sigma}, so panels there
        // stay coarse
        double tol0 = 1e-10 * std::pow(x, -sigma_) /
                      std::hypot(1.0, 2.0 * lnx / pi);
        struct Item {
            int level;
            int idx;
            double tol;
        };
        std::vector<Item> work{{0, 0, tol0}};
        Complex total = 0.0;
        while (!work.empty()) {
            auto [level, idx, tol] = work.back();
            work.pop_back();
            const Panel& p = panel(level, idx);
            Complex k15 = 0.0, g7 = 0.0;
            for (int i = 0; i < 15; ++i) {
                Complex hx = std::exp(Complex{-a_ * lnx, -p.t[i] * lnx}) * p.G[i];
                k15 += p.wk[i] * hx;
                g7 += p.wg[i] * hx;
            }
            if (std::abs(k15 - g7) <= tol || level >= 15) {
                total += k15;
            } else {
                work.push_back({level + 1, 2 * idx, 0.5 * tol});
                work.push_back({level + 1, 2 * idx + 1, 0.5 * tol});
            }
        }
        return total / (2.0 * pi);
    }

    std::function<Complex(Complex)> f_;
    double sigma_;
    double a_;
    double T_ = 1.0;
    double ln_cap_ = 0.0;
    SeriesConfig scfg_;
    std::unordered_map<std::int64_t, Panel> cache_;
};

}  // namespace detail

// Both sides of the interpolation rule: the transform
// int_0^inf x^{s-1} sum f(n)(-x)^n/n! dx and the value f(-s) Gamma(s)
// it should reproduce when f interpolates its own Taylor coefficients.
struct MasterPair {
    ValueWithError transform;
    Complex interpolated;
};

template <class F>
MasterPair master_theorem_pair(F&& f, Complex s, const QuadratureConfig& cfg = {},
                               const SeriesConfig& scfg = {}) {
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw DomainError("master_theorem_pair: requires 0 < Re(s) < 1");
    detail::MasterEvaluator g(
        [&f](Complex w) { return Complex(f(w)); }, s.real(), scfg);
    auto lhs = integrate_halfline(
        [&](double x) { return std::pow(Complex{x}, s - 1.0) * g(x); }, cfg);
    return {lhs, Complex(f(-s)) * gamma(s)};
}

template <class F>
double master_theorem_check(F&& f, Complex s, const QuadratureConfig& cfg = {},
                            const SeriesConfig& scfg = {}) {
    MasterPair p = master_theorem_pair(std::forward<F>(f), s, cfg, scfg);
    return std::abs(p.transform.value - p.interpolated);
}

}  // namespace mellin
