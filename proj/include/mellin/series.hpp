#pragma once

#include <cmath>

#include "mellin/core.hpp"

namespace mellin {

// Sums term(0) + term(1) + ... with Neumaier compensation.  Stops once
// `consecutive_small` successive terms are small relative to the partial
// sum.  The error estimate folds in the cancellation floor
// eps * sum |term|, so alternating sums that destroy precision report it
// instead of pretending convergence.  Hitting max_terms is flagged by an
// error_estimate at the scale of the last term.
template <class TermFn>
ValueWithError sum_series(TermFn&& term, const SeriesConfig& cfg = {}) {
    Complex acc = 0.0;
    Complex comp = 0.0;
    double abs_sum = 0.0;
    double last = 0.0;
    int small = 0;

    auto add = [&](Complex t) {
        Complex s = acc + t;
        if (std::abs(acc.real()) + std::abs(acc.imag()) >=
            std::abs(t.real()) + std::abs(t.imag()))
            comp += (acc - s) + t;
        else
            comp += (t - s) + acc;
        acc = s;
    };

    for (int n = 0; n < cfg.max_terms; ++n) {
        Complex t = term(n);
        if (!is_finite(t)) throw NonFiniteTerm("sum_series: non-finite term");
        add(t);
        abs_sum += std::abs(t);
        last = std::abs(t);
        double partial = std::abs(acc + comp);
        double thresh = partial == 0.0 ? cfg.rel_tol : cfg.rel_tol * partial;
        if (last <= thresh) {
            if (++small >= cfg.consecutive_small)
                return {acc + comp, last + 2.2e-16 * abs_sum, n + 1L};
        } else {
            small = 0;
        }
    }
    return {acc + comp, std::max(last, 2.2e-16 * abs_sum), long(cfg.max_terms)};
}

}  // namespace mellin
