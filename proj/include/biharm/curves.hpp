#pragma once

// Curve representation, arc-length reparametrization, the numerical Frenet
// apparatus, Legendre verification and phi-torsions.

#include "biharm/grid.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace biharm {

struct ParamCurve {
    std::shared_ptr<const SpaceFormModel> model;
    std::function<Vec(double)> position;
    double s0 = 0.0;
    double s1 = 1.0;

    double length_param() const { return s1 - s0; }
};

inline SampledCurve sample(const ParamCurve& c, double ds = kGridStep) {
    SampledCurve sc;
    sc.model = c.model;
    sc.s0 = c.s0;
    sc.ds = ds;
    int m = static_cast<int>(std::llround((c.s1 - c.s0) / ds)) + 1;
    sc.pos.reserve(m);
    for (int i = 0; i < m; ++i) sc.pos.push_back(c.position(c.s0 + i * ds));
    return sc;
}

// max_s |eta(gamma'(s))|, the defect from being a Legendre curve.
inline double legendre_residual(const ParamCurve& c) {
    SampledCurve sc = sample(c);
    VecSeries T = velocity(sc);
    double r = 0.0;
    for (int g = T.lo; g < T.hi(); ++g)
        r = std::max(r, std::abs(sc.model->eta(sc.pos[g], T.at(g))));
    return r;
}

// Arc-length reparametrization via a corrected-trapezoid cumulative length
// table and monotone cubic Hermite inversion.
inline ParamCurve reparametrize_arclength(const ParamCurve& c) {
    const double dt = kGridStep;
    SampledCurve sc = sample(c, dt);
    VecSeries V = velocity(sc);
    const int lo = V.lo, hi = V.hi();
    std::vector<double> w(hi - lo);
    for (int g = lo; g < hi; ++g) {
        double sp = std::sqrt(sc.model->metric(sc.pos[g], V.at(g), V.at(g)));
        if (sp < 1e-8) throw std::domain_error("reparametrize_arclength: vanishing velocity");
        w[g - lo] = sp;
    }
    // cumulative arc length s(t), 4th order (trapezoid + derivative correction)
    std::vector<double> s(w.size(), 0.0);
    for (size_t i = 1; i < w.size(); ++i) {
        double dw0 = (i >= 2) ? (w[i] - w[i - 2]) / (2 * dt) : (w[i] - w[i - 1]) / dt;
        double dw1 = (i + 1 < w.size()) ? (w[i + 1] - w[i - 1]) / (2 * dt) : (w[i] - w[i - 1]) / dt;
        s[i] = s[i - 1] + 0.5 * dt * (w[i - 1] + w[i]) - dt * dt / 12.0 * (dw1 - dw0);
    }
    const double t_lo = sc.s_at(lo);
    auto table_s = std::make_shared<std::vector<double>>(std::move(s));
    auto table_w = std::make_shared<std::vector<double>>(std::move(w));
    auto base = c.position;
    auto t_of_s = [table_s, table_w, t_lo, dt](double sv) {
        const auto& S = *table_s;
        const auto& W = *table_w;
        auto it = std::upper_bound(S.begin(), S.end(), sv);
        size_t i = (it == S.begin()) ? 0 : static_cast<size_t>(it - S.begin()) - 1;
        if (i >= S.size() - 1) i = S.size() - 2;
        double h = S[i + 1] - S[i];
        double u = (sv - S[i]) / h;
        double t0 = t_lo + i * dt, t1 = t0 + dt;
        double m0 = h / W[i], m1 = h / W[i + 1];  // dt/ds * h
        double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * t0 + (u3 - 2 * u2 + u) * m0
             + (-2 * u3 + 3 * u2) * t1 + (u3 - u2) * m1;
    };
    ParamCurve out;
    out.model = c.model;
    out.s0 = 0.0;
    out.s1 = table_s->back();
    out.position = [base, t_of_s](double sv) { return base(t_of_s(sv)); };
    return out;
}

struct FrenetData {
    std::shared_ptr<const SpaceFormModel> model;
    SampledCurve curve;
    int order = 0;
    bool order_ambiguous = false;
    std::vector<VecSeries> frames;               // E_1..E_r, common valid range
    std::vector<ScalarSeries> kappas;            // kappa_1..kappa_{r-1}
    std::map<std::pair<int, int>, ScalarSeries> torsions;  // tau_ij, 1-based i<j
    std::vector<ScalarSeries> eta_components;    // eta(E_i)

    int total_samples() const { return curve.size(); }
    SeriesStats kappa_stats(int i) const { return stats(kappas.at(i - 1), total_samples()); }
    SeriesStats tau_stats(int i, int j) const { return stats(torsions.at({i, j}), total_samples()); }
    bool has_tau(int i, int j) const { return torsions.count({i, j}) > 0; }
};

// phi-torsion tau_ij = g(E_i, phi E_j) profiles for a computed frame.
inline std::map<std::pair<int, int>, ScalarSeries>
phi_torsions(const SampledCurve& sc, const std::vector<VecSeries>& frames) {
    std::map<std::pair<int, int>, ScalarSeries> out;
    int r = static_cast<int>(frames.size());
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            int lo = std::max(frames[i].lo, frames[j].lo);
            int hi = std::min(frames[i].hi(), frames[j].hi());
            ScalarSeries t;
            t.lo = lo;
            t.v.reserve(hi - lo);
            for (int g = lo; g < hi; ++g)
                t.v.push_back(sc.model->metric(sc.pos[g], frames[i].at(g),
                                               sc.model->phi(sc.pos[g], frames[j].at(g))));
            out[{i + 1, j + 1}] = std::move(t);
        }
    }
    return out;
}

constexpr double kOrderTol = 1e-5;

// Frenet apparatus by Gram-Schmidt of iterated covariant derivatives.
// The osculating order is the first index whose orthogonal residual stays
// below tol_order on the interior of the domain.
inline FrenetData frenet(const ParamCurve& c, double tol_order = kOrderTol) {
    FrenetData fd;
    fd.model = c.model;
    fd.curve = sample(c);
    const SampledCurve& sc = fd.curve;

    VecSeries T = velocity(sc);
    {
        ScalarSeries sp = norm_series(sc, T);
        for (double x : sp.v)
            if (std::abs(x - 1.0) > 1e-6)
                throw std::domain_error("frenet: curve is not unit speed");
    }
    fd.frames.push_back(T);
    const int rmax = sc.model->dim();
    for (int k = 1; k <= rmax; ++k) {
        VecSeries D = covd(sc, T, fd.frames.back());
        // Gram-Schmidt against the whole computed frame
        VecSeries resid;
        resid.lo = D.lo;
        resid.v.reserve(D.v.size());
        for (int g = D.lo; g < D.hi(); ++g) {
            Vec r = D.at(g);
            for (const auto& E : fd.frames) {
                const Vec& e = E.at(g);
                r -= sc.model->metric(sc.pos[g], D.at(g), e) * e;
            }
            resid.v.push_back(std::move(r));
        }
        ScalarSeries kap = norm_series(sc, resid);
        SeriesStats st = stats(kap, sc.size());
        if (st.max_abs < tol_order || k == rmax) {
            fd.order = k;
            if (st.max_abs >= tol_order && k == rmax) fd.order = rmax;
            break;
        }
        if (st.max_abs < 10.0 * tol_order) fd.order_ambiguous = true;
        VecSeries E;
        E.lo = resid.lo;
        E.v.reserve(resid.v.size());
        for (int g = resid.lo; g < resid.hi(); ++g)
            E.v.push_back(Vec(resid.at(g) / kap.at(g)));
        fd.kappas.push_back(std::move(kap));
        fd.frames.push_back(std::move(E));
        fd.order = k + 1;
    }
    // restrict everything to the innermost common range
    int lo = fd.frames.back().lo, hi = fd.frames.back().hi();
    for (auto& E : fd.frames) E = restrict_range(E, lo, hi);
    for (auto& k : fd.kappas) k = restrict_range(k, lo, hi);
    fd.torsions = phi_torsions(sc, fd.frames);
    for (const auto& E : fd.frames) {
        ScalarSeries e;
        e.lo = E.lo;
        e.v.reserve(E.v.size());
        for (int g = E.lo; g < E.hi(); ++g)
            e.v.push_back(sc.model->eta(sc.pos[g], E.at(g)));
        fd.eta_components.push_back(std::move(e));
    }
    return fd;
}

}  // namespace biharm
