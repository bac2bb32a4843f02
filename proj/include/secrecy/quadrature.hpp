#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <vector>

namespace secrecy {

// Gauss-Legendre rule on [-1, 1]; nodes found by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;

    explicit GaussLegendre(int n) : x(n), w(n) {
        const double pi = 3.14159265358979323846;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre& gl_rule(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

// integral of f over [a, b]
template <class F>
double gl_integrate(F&& f, double a, double b, int order) {
    if (!(b > a)) return 0.0;
    const auto& r = gl_rule(order);
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(m + h * r.x[i]);
    return h * s;
}

// integral of f over [pts.front(), pts.back()] split at interior pts;
// pts must be sorted, duplicates allowed.
template <class F>
double gl_integrate_piecewise(F&& f, std::span<const double> pts, int order) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += gl_integrate(f, pts[i], pts[i + 1], order);
    return s;
}

// Clean a breakpoint list: clip to [lo, hi], sort, dedupe, ensure endpoints.
inline std::vector<double> make_pieces(std::vector<double> pts, double lo, double hi) {
    pts.push_back(lo);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double p : pts) {
        double c = std::clamp(p, lo, hi);
        if (out.empty() || c > out.back()) out.push_back(c);
    }
    if (out.size() < 2) out = {lo, hi};
    return out;
}

}  // namespace secrecy
