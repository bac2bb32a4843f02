#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "secrecy/errors.hpp"
#include "secrecy/marginals.hpp"
#include "secrecy/quadrature.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

struct GainPair {
    double hm = 0.0;  // main-channel power gain
    double he = 0.0;  // eavesdropper power gain
};

struct Atom {
    GainPair h;
    double p = 0.0;
};

enum class DistKind { DiscreteJoint, ContinuousIndependent };

struct QuantileResult {
    double value = 0.0;
    double attained = 0.0;  // Pr(Hm <= value), exact for discrete marginals
};

// Joint law of (Hm, He): either a finite atom list or independent continuous
// marginals integrated by Gauss-Legendre quadrature over the truncated support.
class FadingDistribution {
  public:
    static FadingDistribution discrete(std::vector<Atom> atoms) {
        FadingDistribution d;
        d.kind_ = DistKind::DiscreteJoint;
        double sum = 0.0;
        for (const auto& a : atoms) {
            if (!(a.h.hm >= 0) || !(a.h.he >= 0) || !std::isfinite(a.h.hm) || !std::isfinite(a.h.he))
                throw InvalidConfig("atom gains must be finite and nonnegative");
            if (!(a.p >= 0) || !std::isfinite(a.p)) throw InvalidConfig("atom probabilities must be nonnegative");
            sum += a.p;
        }
        if (atoms.empty() || std::abs(sum - 1.0) > 1e-9)
            throw InvalidConfig("atom probabilities must sum to 1 within 1e-9");
        for (auto& a : atoms) a.p /= sum;
        d.atoms_ = std::move(atoms);
        d.build_marginals();
        return d;
    }

    static FadingDistribution continuous(Marginal m, Marginal e, int quadrature_order = 128,
                                         double truncation_quantile = 1.0 - 1e-8) {
        if (quadrature_order < 2) throw InvalidConfig("quadrature_order must be >= 2");
        if (!(truncation_quantile > 0.0) || !(truncation_quantile < 1.0))
            throw InvalidConfig("truncation_quantile must lie in (0,1)");
        FadingDistribution d;
        d.kind_ = DistKind::ContinuousIndependent;
        d.mm_ = std::move(m);
        d.me_ = std::move(e);
        d.order_ = quadrature_order;
        d.trunc_q_ = truncation_quantile;
        d.tm_ = d.mm_.quantile(truncation_quantile);
        d.te_ = d.me_.quantile(truncation_quantile);
        return d;
    }

    DistKind kind() const { return kind_; }
    bool is_discrete() const { return kind_ == DistKind::DiscreteJoint; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Atom>& marginal_m_atoms() const { return marg_m_; }  // value in h.hm
    const std::vector<Atom>& marginal_e_atoms() const { return marg_e_; }  // value in h.he
    const Marginal& marginal_m() const { return mm_; }
    const Marginal& marginal_e() const { return me_; }
    int quadrature_order() const { return order_; }
    double truncation_quantile() const { return trunc_q_; }
    double hm_upper() const { return is_discrete() ? marg_m_.back().h.hm : tm_; }
    double he_upper() const { return is_discrete() ? marg_e_.back().h.he : te_; }

    double cdf_m(double x) const {
        if (!is_discrete()) return mm_.cdf(x);
        double c = 0.0;
        for (const auto& a : marg_m_)
            if (a.h.hm <= x) c += a.p;
        return c;
    }
    double cdf_e(double x) const {
        if (!is_discrete()) return me_.cdf(x);
        double c = 0.0;
        for (const auto& a : marg_e_)
            if (a.h.he <= x) c += a.p;
        return c;
    }

    // ---- expectation / probability services ----

    struct Breaks {
        std::vector<double> hm;  // global breakpoints along hm
        std::vector<double> he;  // global breakpoints along he
        std::function<std::vector<double>(double he)> hm_given_he;  // per-line breakpoints
    };

    template <class G>
    double expect(G&& g) const {
        return expect(std::forward<G>(g), Breaks{});
    }

    template <class G>
    double expect(G&& g, const Breaks& br) const {
        auto checked = [&](GainPair h) {
            double v = g(h);
            if (!std::isfinite(v)) throw NonIntegrable("integrand non-finite on the support");
            return v;
        };
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& a : atoms_) s += a.p * checked(a.h);
            return s;
        }
        auto he_pieces = make_pieces(merge(me_.quad_knots(), br.he), 0.0, te_);
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < he_pieces.size(); ++i) {
            total += gl_integrate(
                [&](double he) {
                    std::vector<double> inner = br.hm;
                    if (br.hm_given_he) {
                        auto extra = br.hm_given_he(he);
                        inner.insert(inner.end(), extra.begin(), extra.end());
                    }
                    auto hm_pieces = make_pieces(merge(mm_.quad_knots(), inner), 0.0, tm_);
                    double line = gl_integrate_piecewise(
                        [&](double hm) { return mm_.pdf(hm) * checked(GainPair{hm, he}); }, hm_pieces,
                        order_);
                    return me_.pdf(he) * line;
                },
                he_pieces[i], he_pieces[i + 1], order_);
        }
        return total;
    }

    // Pr(pred). For continuous distributions the hm-axis is resolved exactly:
    // predicate sign changes are located by scan + bisection per he line, and
    // each kept interval contributes its marginal CDF mass.
    template <class P>
    double prob(P&& pred) const {
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& a : atoms_) s += a.p * (pred(a.h) ? 1.0 : 0.0);
            return s;
        }
        auto he_pieces = make_pieces(me_.quad_knots(), 0.0, te_);
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < he_pieces.size(); ++i) {
            total += gl_integrate(
                [&](double he) {
                    auto in = [&](double hm) { return pred(GainPair{hm, he}); };
                    double mass = 0.0;
                    const int scan = std::max(4 * order_, 256);
                    double prev_x = 0.0;
                    bool prev = in(prev_x);
                    double seg_start = prev ? 0.0 : -1.0;
                    for (int s = 1; s <= scan; ++s) {
                        double x = tm_ * s / scan;
                        bool cur = in(x);
                        if (cur != prev) {
                            double lo = prev_x, hi = x;
                            for (int it = 0; it < 60; ++it) {
                                double mid = 0.5 * (lo + hi);
                                (in(mid) == prev ? lo : hi) = mid;
                            }
                            double cross = 0.5 * (lo + hi);
                            if (prev)
                                mass += mm_.cdf(cross) - mm_.cdf(seg_start);
                            else
                                seg_start = cross;
                            prev = cur;
                        }
                        prev_x = x;
                    }
                    if (prev) mass += mm_.cdf(tm_) - mm_.cdf(seg_start);
                    return me_.pdf(he) * mass;
                },
                he_pieces[i], he_pieces[i + 1], order_);
        }
        return std::clamp(total, 0.0, 1.0);
    }

    // Smallest c with Pr(Hm <= c) >= p (generalized inverse); for discrete
    // marginals the attained probability is reported exactly.
    QuantileResult quantile_m(double p) const {
        if (p <= 0.0) return {0.0, cdf_m(0.0)};
        if (!is_discrete()) return {mm_.quantile(std::min(p, 1.0)), std::min(p, 1.0)};
        double cum = 0.0;
        for (const auto& a : marg_m_) {
            cum += a.p;
            if (cum >= p - 1e-15) return {a.h.hm, cum};
        }
        return {marg_m_.back().h.hm, 1.0};
    }

    std::vector<GainPair> sample(RandomStream stream, std::size_t n) const {
        Engine eng(stream);
        std::vector<GainPair> out(n);
        for (auto& h : out) h = sample_one(eng);
        return out;
    }

    GainPair sample_one(Engine& eng) const {
        if (is_discrete()) {
            double u = eng.uniform();
            double cum = 0.0;
            for (const auto& a : atoms_) {
                cum += a.p;
                if (u < cum) return a.h;
            }
            return atoms_.back().h;
        }
        double um = eng.uniform(), ue = eng.uniform();
        return {mm_.quantile(um), me_.quantile(ue)};
    }

    // ---- 1D helpers over the hm (resp. he) marginal ----

    template <class G>
    double integrate_m(G&& g, std::vector<double> breaks = {}) const {
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& a : marg_m_) s += a.p * g(a.h.hm);
            return s;
        }
        auto pieces = make_pieces(merge(mm_.quad_knots(), breaks), 0.0, tm_);
        return gl_integrate_piecewise([&](double x) { return mm_.pdf(x) * g(x); }, pieces, order_);
    }

    template <class G>
    double integrate_e_upto(G&& g, double hi, std::vector<double> breaks = {}) const {
        if (is_discrete()) {
            double s = 0.0;
            for (const auto& a : marg_e_)
                if (a.h.he <= hi) s += a.p * g(a.h.he);
            return s;
        }
        auto pieces = make_pieces(merge(me_.quad_knots(), breaks), 0.0, std::min(hi, te_));
        return gl_integrate_piecewise([&](double x) { return me_.pdf(x) * g(x); }, pieces, order_);
    }

  private:
    static std::vector<double> merge(std::vector<double> a, const std::vector<double>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    void build_marginals() {
        auto build = [&](bool main) {
            std::vector<Atom> m;
            for (const auto& a : atoms_) {
                double v = main ? a.h.hm : a.h.he;
                auto it = std::find_if(m.begin(), m.end(), [&](const Atom& x) {
                    return (main ? x.h.hm : x.h.he) == v;
                });
                if (it == m.end())
                    m.push_back({main ? GainPair{v, 0.0} : GainPair{0.0, v}, a.p});
                else
                    it->p += a.p;
            }
            std::sort(m.begin(), m.end(), [&](const Atom& x, const Atom& y) {
                return (main ? x.h.hm : x.h.he) < (main ? y.h.hm : y.h.he);
            });
            return m;
        };
        marg_m_ = build(true);
        marg_e_ = build(false);
    }

    DistKind kind_ = DistKind::DiscreteJoint;
    std::vector<Atom> atoms_;
    std::vector<Atom> marg_m_, marg_e_;
    Marginal mm_, me_;
    int order_ = 128;
    double trunc_q_ = 1.0 - 1e-8;
    double tm_ = 0.0, te_ = 0.0;
};

}  // namespace secrecy
