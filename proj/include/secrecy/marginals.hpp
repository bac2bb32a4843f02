#pragma once

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "secrecy/errors.hpp"

namespace secrecy {

// Power gains are nonnegative; all families live on [0, inf).

struct Exponential {
    double mean = 1.0;

    double pdf(double x) const { return x < 0 ? 0.0 : std::exp(-x / mean) / mean; }
    double cdf(double x) const { return x <= 0 ? 0.0 : -std::expm1(-x / mean); }
    double quantile(double p) const { return -mean * std::log1p(-p); }
    double support_min() const { return 0.0; }
    bool inv_moment_diverges() const { return true; }  // integral of f(x)/x at 0
};

// Chi-square with `degrees` dof, rescaled to the requested mean;
// equivalently Gamma(shape = degrees/2, scale = 2*mean/degrees).
struct ChiSquare {
    int degrees = 2;
    double mean = 1.0;

    double shape() const { return 0.5 * degrees; }
    double scale() const { return mean / shape(); }
    double pdf(double x) const {
        if (x < 0) return 0.0;
        const double a = shape(), s = scale();
        if (x == 0) return a < 1 ? std::numeric_limits<double>::infinity() : (a == 1 ? 1.0 / s : 0.0);
        return std::exp((a - 1.0) * std::log(x / s) - x / s - std::lgamma(a)) / s;
    }
    double cdf(double x) const { return x <= 0 ? 0.0 : boost::math::gamma_p(shape(), x / scale()); }
    double quantile(double p) const {
        if (p <= 0) return 0.0;
        return scale() * boost::math::gamma_p_inv(shape(), p);
    }
    double support_min() const { return 0.0; }
    bool inv_moment_diverges() const { return shape() <= 1.0; }
};

// Quantile function tabulated on an equispaced probability grid;
// piecewise-linear between knots.
struct TabulatedQuantile {
    std::vector<double> grid;  // values at probabilities i/(grid.size()-1), nondecreasing

    void validate() const {
        if (grid.size() < 2) throw InvalidConfig("tabulated quantile grid needs >= 2 points");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] >= 0) || !std::isfinite(grid[i]))
                throw InvalidConfig("tabulated quantile grid must be finite and nonnegative");
            if (i > 0 && grid[i] < grid[i - 1])
                throw InvalidConfig("tabulated quantile grid must be nondecreasing");
        }
    }
    double quantile(double p) const {
        const std::size_t n = grid.size() - 1;
        if (p <= 0) return grid.front();
        if (p >= 1) return grid.back();
        const double t = p * n;
        const auto i = static_cast<std::size_t>(t);
        const double frac = t - static_cast<double>(i);
        return grid[i] + frac * (grid[i + 1] - grid[i]);
    }
    double cdf(double x) const {
        if (x <= grid.front()) return x < grid.front() ? 0.0 : (grid.front() == grid.back() ? 1.0 : 0.0);
        if (x >= grid.back()) return 1.0;
        const std::size_t n = grid.size() - 1;
        auto it = std::upper_bound(grid.begin(), grid.end(), x);
        auto i = static_cast<std::size_t>(it - grid.begin()) - 1;
        while (grid[i + 1] == grid[i] && i + 1 < n) ++i;
        const double span = grid[i + 1] - grid[i];
        const double frac = span > 0 ? (x - grid[i]) / span : 1.0;
        return (static_cast<double>(i) + frac) / n;
    }
    double pdf(double x) const {
        if (x < grid.front() || x > grid.back()) return 0.0;
        const std::size_t n = grid.size() - 1;
        auto it = std::upper_bound(grid.begin(), grid.end(), x);
        std::size_t i = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
        if (i >= n) i = n - 1;
        const double span = grid[i + 1] - grid[i];
        return span > 0 ? 1.0 / (n * span) : 0.0;
    }
    double support_min() const { return grid.front(); }
    bool inv_moment_diverges() const { return grid.front() == 0.0; }
};

class Marginal {
  public:
    Marginal() : fam_(Exponential{1.0}) {}
    Marginal(Exponential e) : fam_(e) {}
    Marginal(ChiSquare c) : fam_(c) {}
    Marginal(TabulatedQuantile t) : fam_(std::move(t)) { std::get<TabulatedQuantile>(fam_).validate(); }

    double pdf(double x) const {
        return std::visit([&](const auto& f) { return f.pdf(x); }, fam_);
    }
    double cdf(double x) const {
        return std::visit([&](const auto& f) { return f.cdf(x); }, fam_);
    }
    double quantile(double p) const {
        return std::visit([&](const auto& f) { return f.quantile(p); }, fam_);
    }
    double support_min() const {
        return std::visit([&](const auto& f) { return f.support_min(); }, fam_);
    }
    bool inv_moment_diverges() const {
        return std::visit([&](const auto& f) { return f.inv_moment_diverges(); }, fam_);
    }
    // knots that should split any quadrature over this marginal
    std::vector<double> quad_knots() const {
        if (const auto* t = std::get_if<TabulatedQuantile>(&fam_)) return t->grid;
        return {};
    }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&fam_);
    }

  private:
    std::variant<Exponential, ChiSquare, TabulatedQuantile> fam_;
};

}  // namespace secrecy
