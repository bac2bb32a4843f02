#pragma once

#include <cmath>
#include <limits>

#include "secrecy/channel.hpp"
#include "secrecy/errors.hpp"

// Closed-form rate and power kernels. Rates are in bits per channel use;
// the Lagrange multiplier lambda is in natural-log units throughout (the
// stationarity conditions are solved without a log-base factor, and lambda
// never leaves the solvers except as a diagnostic).

namespace secrecy {

inline constexpr double kLn2 = 0.6931471805599453;

// main-channel rate log2(1 + p*hm)
inline double rm(GainPair h, double p) { return std::log1p(p * h.hm) / kLn2; }

// secrecy rate [log2(1 + p*hm) - log2(1 + p*he)]^+
inline double rs_nats(GainPair h, double p) {
    double v = std::log1p(p * h.hm) - std::log1p(p * h.he);
    return v > 0.0 ? v : 0.0;
}
inline double rs(GainPair h, double p) { return rs_nats(h, p) / kLn2; }

// minimum power sustaining main rate `target` on gain hm
inline double p_inv(double hm, double target) {
    if (target <= 0.0) return 0.0;
    if (hm <= 0.0) throw DegenerateGain("channel inversion requires hm > 0");
    return std::expm1(target * kLn2) / hm;
}

// secure waterfilling: positive root of hm/(1+hm p) - he/(1+he p) = lambda,
// clamped at zero; zero whenever hm <= he or lambda >= hm - he.
inline double p_wf(GainPair h, double lambda) {
    if (h.hm <= h.he || h.he <= 0.0 && h.hm <= 0.0) {
        // he == 0, hm > 0 handled below; equal-or-worse main gain gives 0
        if (h.hm <= h.he) return 0.0;
    }
    if (h.he <= 0.0) {
        // eavesdropper gain zero: condition reduces to hm/(1+hm p) = lambda
        double v = 1.0 / lambda - 1.0 / h.hm;
        return v > 0.0 ? v : 0.0;
    }
    const double d = 1.0 / h.he - 1.0 / h.hm;
    const double v = 0.5 * (std::sqrt(d * d + 4.0 * d / lambda) - (1.0 / h.he + 1.0 / h.hm));
    return v > 0.0 ? v : 0.0;
}

// Main-CSI stationarity power: largest of 0 and the root P of
//   hm Pr(He <= hm)/(1 + hm P) - int_0^hm he/(1+he P) f(he) dhe - lambda = 0.
// The left side is strictly decreasing in P, so the root is unique; it is
// bracketed by doubling and resolved by bisection to 1e-12 absolute.
inline double p_w(double hm, double lambda, const FadingDistribution& dist) {
    if (hm <= 0.0) return 0.0;
    const double fe = dist.cdf_e(hm);
    if (fe <= 0.0) return 0.0;
    auto lhs = [&](double p) {
        double tail = dist.integrate_e_upto([&](double he) { return he / (1.0 + he * p); }, hm);
        return hm * fe / (1.0 + hm * p) - tail - lambda;
    };
    if (lhs(0.0) <= 0.0) return 0.0;
    double hi = 1.0;
    while (lhs(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e14) break;
    }
    double lo = hi > 1.0 ? hi * 0.5 : 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        (lhs(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace secrecy
