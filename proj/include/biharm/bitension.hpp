#pragma once

// Two independent evaluators of the tension and bitension fields along
// Legendre curves, and the biharmonicity verdict by residual.

#include "biharm/curves.hpp"

namespace biharm {

enum class BihVerdict { Harmonic, ProperBiharmonic, NotBiharmonic, Indeterminate };

inline const char* to_string(BihVerdict v) {
    switch (v) {
        case BihVerdict::Harmonic: return "harmonic";
        case BihVerdict::ProperBiharmonic: return "proper-biharmonic";
        case BihVerdict::NotBiharmonic: return "not-biharmonic";
        case BihVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

// Default tolerance ladder: closed-form connections reach a lower stencil
// floor than the deformed model's calibrated one.
inline double default_tolerance(const SpaceFormModel& m) {
    return m.kind() == ModelKind::DeformedSphere ? 1e-4 : 1e-5;
}

// tau(gamma) = nabla_T T.
inline VecSeries tension(const SampledCurve& sc) {
    VecSeries T = velocity(sc);
    return covd(sc, T, T);
}

constexpr double kLegendreGate = 1e-6;

// tau_2(gamma) = nabla_T^3 T - R(T, nabla_T T) T, via three nested
// first-order covariant derivatives and the closed-form curvature operator.
inline VecSeries bitension_direct(const SampledCurve& sc) {
    VecSeries T = velocity(sc);
    {
        double r = 0.0;
        for (int g = T.lo; g < T.hi(); ++g)
            r = std::max(r, std::abs(sc.model->eta(sc.pos[g], T.at(g))));
        if (r > kLegendreGate)
            throw std::domain_error("bitension_direct: input is not a Legendre curve");
    }
    VecSeries d1 = covd(sc, T, T);
    VecSeries d2 = covd(sc, T, d1);
    VecSeries d3 = covd(sc, T, d2);
    VecSeries out;
    out.lo = d3.lo;
    out.v.reserve(d3.v.size());
    for (int g = d3.lo; g < d3.hi(); ++g)
        out.v.push_back(Vec(d3.at(g)
                            - sc.model->curvature_op(sc.pos[g], T.at(g), d1.at(g), T.at(g))));
    return out;
}

inline VecSeries bitension_direct(const ParamCurve& c) {
    return bitension_direct(sample(c));
}

// The Frenet-frame expansion of the bitension field of a Legendre curve:
//   (-3 k1 k1') E1 + (k1'' - k1^3 - k1 k2^2 + (c+3) k1 / 4) E2
//   + (2 k1' k2 + k1 k2') E3 + k1 k2 k3 E4 + (3(c-1) k1 / 4) g(E2, phi T) phi T.
// Curvatures absent from the osculating order are treated as zero.
inline VecSeries bitension_frenet(const FrenetData& fd, double c) {
    const SampledCurve& sc = fd.curve;
    const int r = fd.order;
    if (r < 2) {
        // geodesic: bitension vanishes identically
        VecSeries out;
        out.lo = fd.frames[0].lo;
        out.v.assign(fd.frames[0].v.size(), Vec::Zero(sc.model->ambient_dim()));
        return out;
    }
    ScalarSeries k1 = fd.kappas[0];
    ScalarSeries k1p = deriv(k1, sc.ds);
    ScalarSeries k1pp = deriv(k1p, sc.ds);
    ScalarSeries k2, k2p;
    if (r >= 3) {
        k2 = fd.kappas[1];
        k2p = deriv(k2, sc.ds);
    }
    int lo = k1pp.lo, hi = k1pp.hi();
    if (r >= 3) {
        lo = std::max(lo, k2p.lo);
        hi = std::min(hi, k2p.hi());
    }
    VecSeries out;
    out.lo = lo;
    out.v.reserve(hi - lo);
    for (int g = lo; g < hi; ++g) {
        const Vec& E1 = fd.frames[0].at(g);
        const Vec& E2 = fd.frames[1].at(g);
        const Vec& p = sc.pos[g];
        double kap1 = k1.at(g), kap2 = (r >= 3) ? k2.at(g) : 0.0;
        double kap3 = (r >= 4) ? fd.kappas[2].at(g) : 0.0;
        Vec phiT = sc.model->phi(p, E1);
        Vec val = (-3.0 * kap1 * k1p.at(g)) * E1
                + (k1pp.at(g) - kap1 * kap1 * kap1 - kap1 * kap2 * kap2
                   + (c + 3.0) * kap1 / 4.0) * E2;
        if (r >= 3)
            val += (2.0 * k1p.at(g) * kap2 + kap1 * k2p.at(g)) * fd.frames[2].at(g);
        if (r >= 4)
            val += (kap1 * kap2 * kap3) * fd.frames[3].at(g);
        val += (3.0 * (c - 1.0) * kap1 / 4.0) * sc.model->metric(p, E2, phiT) * phiT;
        out.v.push_back(std::move(val));
    }
    return out;
}

struct BiharmonicReport {
    double tension_norm_max = 0.0;
    double bitension_direct_max = 0.0;
    double bitension_frenet_max = 0.0;
    double legendre_res = 0.0;
    double tolerance = 0.0;
    BihVerdict verdict = BihVerdict::Indeterminate;
    struct Row {
        double s, tension, bit_direct, bit_frenet;
    };
    std::vector<Row> per_sample;
};

// Residual maxima over the interior 90% of the parameter domain; verdict by
// the tolerance ladder. Indeterminate is a value, not an error.
inline BiharmonicReport biharmonic_verdict(const ParamCurve& c, double tol = -1.0) {
    if (tol <= 0.0) tol = default_tolerance(*c.model);
    BiharmonicReport rep;
    rep.tolerance = tol;
    rep.legendre_res = legendre_residual(c);
    if (rep.legendre_res > kLegendreGate)
        throw std::domain_error("biharmonic_verdict: input is not a Legendre curve");
    FrenetData fd = frenet(c);
    const SampledCurve& sc = fd.curve;
    VecSeries bd = bitension_direct(sc);
    VecSeries bf = bitension_frenet(fd, c.model->c());
    VecSeries tens = covd(sc, fd.frames[0], fd.frames[0]);

    ScalarSeries nt = norm_series(sc, tens);
    ScalarSeries nd = norm_series(sc, bd);
    ScalarSeries nf = norm_series(sc, bf);
    rep.tension_norm_max = stats(nt, sc.size()).max_abs;
    rep.bitension_direct_max = stats(nd, sc.size()).max_abs;
    rep.bitension_frenet_max = stats(nf, sc.size()).max_abs;

    int lo = std::max({nt.lo, nd.lo, nf.lo});
    int hi = std::min({nt.hi(), nd.hi(), nf.hi()});
    int stride = std::max(1, (hi - lo) / 512);
    for (int g = lo; g < hi; g += stride)
        rep.per_sample.push_back({sc.s_at(g), nt.at(g), nd.at(g), nf.at(g)});

    double d = rep.bitension_direct_max, f = rep.bitension_frenet_max;
    if (rep.tension_norm_max < tol) {
        rep.verdict = BihVerdict::Harmonic;
    } else if (d < tol && f < tol) {
        rep.verdict = (rep.tension_norm_max >= 10.0 * tol) ? BihVerdict::ProperBiharmonic
                                                           : BihVerdict::Indeterminate;
    } else if (d > 10.0 * tol && f > 10.0 * tol) {
        rep.verdict = BihVerdict::NotBiharmonic;
    } else {
        rep.verdict = BihVerdict::Indeterminate;
    }
    return rep;
}

}  // namespace biharm
