#pragma once

// Hopf cylinders over the homogeneous real hypersurfaces of CP^n of types
// A1 (geodesic spheres) and A2: principal-curvature spectra, the
// constant-mean-curvature biharmonicity criterion, the quadratic in tan^2(u)
// whose positive roots give the biharmonic radii, existence thresholds in
// the ambient phi-sectional curvature c, and the 3-dimensional criterion.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace biharm {

enum class TakagiType { A1, A2 };

inline std::string to_string(TakagiType t) { return t == TakagiType::A1 ? "A1" : "A2"; }

struct TakagiHypersurface {
    TakagiType type = TakagiType::A1;
    int n = 2;          // complex dimension of the projective base
    int p = 0, q = 0;   // A2 splitting, p + q = n - 1, both positive
    double u = 0.0;     // radius parameter in (0, pi/2)
    double c = 1.0;     // phi-sectional curvature of the total space, c > -3

    double r() const { return 2.0 / std::sqrt(c + 3.0); }

    void validate() const {
        if (n < 2) throw std::invalid_argument("TakagiHypersurface: requires n >= 2");
        if (c <= -3.0) throw std::invalid_argument("TakagiHypersurface: requires c > -3");
        if (!(u > 0.0 && u < M_PI / 2.0))
            throw std::invalid_argument("TakagiHypersurface: u must lie in (0, pi/2)");
        if (type == TakagiType::A2 && !(p >= 1 && q >= 1 && p + q == n - 1))
            throw std::invalid_argument("TakagiHypersurface: A2 requires p, q >= 1, p + q = n - 1");
    }
};

struct ShapeEigen {
    double value = 0.0;
    int multiplicity = 0;
};

struct HopfSpectrum {
    std::vector<ShapeEigen> eigen;       // principal curvatures of the hypersurface
    int dimension = 0;                   // 2n - 1
    double mean_curvature = 0.0;         // signed H = trace / (2n - 1)
    double second_fundamental_norm2 = 0.0;
};

inline HopfSpectrum spectrum(const TakagiHypersurface& h) {
    h.validate();
    const double r = h.r();
    const double cot_u = 1.0 / std::tan(h.u);
    const double tan_u = std::tan(h.u);
    HopfSpectrum s;
    s.dimension = 2 * h.n - 1;
    if (h.type == TakagiType::A1) {
        s.eigen.push_back({cot_u / r, 2 * h.n - 2});
    } else {
        s.eigen.push_back({-tan_u / r, 2 * h.p});
        s.eigen.push_back({cot_u / r, 2 * h.q});
    }
    s.eigen.push_back({2.0 / (r * std::tan(2.0 * h.u)), 1});
    double trace = 0.0, norm2 = 0.0;
    for (const auto& e : s.eigen) {
        trace += e.value * e.multiplicity;
        norm2 += e.value * e.value * e.multiplicity;
    }
    s.mean_curvature = trace / s.dimension;
    s.second_fundamental_norm2 = norm2;
    return s;
}

// A Hopf cylinder over a hypersurface of constant mean curvature H != 0 is
// proper biharmonic iff ||B||^2 = (c (n + 1) + 3 n - 5) / 2.
struct CmcCheck {
    double rhs = 0.0;
    double residual = 0.0;
    bool satisfied = false;
};

inline double cmc_criterion_rhs(int n, double c) {
    return (c * (n + 1) + 3.0 * n - 5.0) / 2.0;
}

inline CmcCheck cmc_criterion(double c, int n, double norm_B_sq, double tol = 1e-9) {
    CmcCheck out;
    out.rhs = cmc_criterion_rhs(n, c);
    out.residual = std::abs(norm_B_sq - out.rhs);
    out.satisfied = out.residual < tol;
    return out;
}

struct Quadratic {
    double a = 0.0, b = 0.0, c = 0.0;  // a t^2 + b t + c, t = tan^2 u

    double discriminant() const { return b * b - 4.0 * a * c; }

    std::vector<double> positive_roots() const {
        std::vector<double> out;
        double disc = discriminant();
        if (disc < 0.0) return out;
        double sq = std::sqrt(disc);
        // numerically stable pairing
        double z = -0.5 * (b + (b >= 0 ? sq : -sq));
        double r1 = z / a;
        double r2 = (z != 0.0) ? c / z : r1;
        if (r1 > 0.0) out.push_back(r1);
        if (disc > 0.0 && r2 > 0.0 && std::abs(r2 - r1) > 1e-14 * std::max(1.0, std::abs(r1)))
            out.push_back(r2);
        if (out.size() == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
        return out;
    }
};

// ||B(u)||^2 = rhs as a polynomial in t = tan^2 u after clearing the
// denominator t. With 1/r^2 = (c + 3)/4:
//   A1: r^2 ||B||^2 t = (2n - 2) + (1 - t)^2
//       (cot^2 u = 1/t, 4 cot^2(2u) = (1 - t)^2 / t)
//       => t^2 - (2 + r^2 rhs) t + (2n - 1) = 0
//   A2: r^2 ||B||^2 t = 2p t^2 + 2q + (1 - t)^2
//       => (2p + 1) t^2 - (2 + r^2 rhs) t + (2q + 1) = 0
inline Quadratic biharmonic_quadratic(const TakagiHypersurface& h) {
    const double r2 = 4.0 / (h.c + 3.0);
    const double rhs = cmc_criterion_rhs(h.n, h.c);
    Quadratic out;
    out.b = -2.0 - r2 * rhs;
    if (h.type == TakagiType::A1) {
        out.a = 1.0;
        out.c = 2.0 * h.n - 1.0;
    } else {
        if (!(h.p >= 1 && h.q >= 1 && h.p + h.q == h.n - 1))
            throw std::invalid_argument("biharmonic_quadratic: A2 requires p, q >= 1, p + q = n - 1");
        out.a = 2.0 * h.p + 1.0;
        out.c = 2.0 * h.q + 1.0;
    }
    return out;
}

enum class HopfVerdict { Minimal, ProperBiharmonic };

inline std::string to_string(HopfVerdict v) {
    return v == HopfVerdict::Minimal ? "minimal" : "proper-biharmonic";
}

struct HopfRoot {
    double tan2_u = 0.0;
    double u = 0.0;
    HopfVerdict verdict = HopfVerdict::ProperBiharmonic;
    double mean_curvature = 0.0;   // signed H at the root
    double cmc_residual = 0.0;     // | ||B||^2 - rhs | at the root
};

// Solves the biharmonicity equation for u; each root is cross-checked
// against the CMC criterion and classified as minimal (harmonic, H = 0) or
// proper biharmonic.
inline std::vector<HopfRoot> solve_biharmonic_u(TakagiType type, double c, int n,
                                                int p = 0, int q = 0) {
    TakagiHypersurface h{type, n, p, q, 0.1, c};
    h.validate();
    Quadratic quad = biharmonic_quadratic(h);
    std::vector<HopfRoot> roots;
    for (double t : quad.positive_roots()) {
        HopfRoot r;
        r.tan2_u = t;
        r.u = std::atan(std::sqrt(t));
        h.u = r.u;
        HopfSpectrum s = spectrum(h);
        r.mean_curvature = s.mean_curvature;
        r.cmc_residual = cmc_criterion(c, n, s.second_fundamental_norm2, 1e-8).residual;
        r.verdict = std::abs(r.mean_curvature) > 1e-9 ? HopfVerdict::ProperBiharmonic
                                                      : HopfVerdict::Minimal;
        roots.push_back(r);
    }
    return roots;
}

// Independent expanded radical expressions for the tan^2 u roots, used to
// cross-check the assembled-quadratic route.
inline std::vector<double> closed_form_tan2_roots(TakagiType type, double c, int n,
                                                  int p = 0, int q = 0) {
    double mid, rad;
    if (type == TakagiType::A1) {
        mid = n + (2.0 * c - 2.0) / (c + 3.0);
        rad = c * c * (n * n + 2.0 * n + 5.0) + 2.0 * c * (3.0 * n * n - 2.0 * n - 1.0)
            + 9.0 * n * n - 30.0 * n + 13.0;
        if (rad < 0.0) return {};
        rad = std::sqrt(rad) / (c + 3.0);
    } else {
        const double d2 = static_cast<double>((p - q) * (p - q));
        mid = (n + (2.0 * c - 2.0) / (c + 3.0)) / (2.0 * p + 1.0);
        rad = c * c * (d2 + 4.0 * n + 4.0) + 2.0 * c * (3.0 * d2 + 4.0 * n - 4.0)
            + 9.0 * d2 - 12.0 * n + 4.0;
        if (rad < 0.0) return {};
        rad = std::sqrt(rad) / ((c + 3.0) * (2.0 * p + 1.0));
    }
    std::vector<double> pos;
    if (mid - rad > 0.0) pos.push_back(mid - rad);
    if (rad > 0.0 && mid + rad > 0.0) pos.push_back(mid + rad);
    return pos;
}

// Smallest c > -3 admitting a biharmonic radius, in closed form.
inline double existence_threshold(TakagiType type, int n, int p = 0, int q = 0) {
    if (type == TakagiType::A1) {
        return (-3.0 * n * n + 2.0 * n + 1.0 + 8.0 * std::sqrt(2.0 * n - 1.0))
             / (n * n + 2.0 * n + 5.0);
    }
    const double d2 = static_cast<double>((p - q) * (p - q));
    return (-3.0 * d2 - 4.0 * n + 4.0 + 8.0 * std::sqrt((2.0 * p + 1.0) * (2.0 * q + 1.0)))
         / (d2 + 4.0 * n + 4.0);
}

// Numeric oracle for the threshold: bisection on positive-root existence.
// The root sum is strictly increasing in c and the root product is a
// positive constant, so existence is monotone in c.
inline double existence_threshold_numeric(TakagiType type, int n, int p = 0, int q = 0) {
    TakagiHypersurface h{type, n, p, q, 0.1, 1.0};
    auto has_root = [&](double c) {
        h.c = c;
        return !biharmonic_quadratic(h).positive_roots().empty();
    };
    double lo = -3.0 + 1e-9, hi = 100.0;
    if (!has_root(hi)) throw std::runtime_error("existence_threshold: no root below c = 100");
    if (has_root(lo)) return lo;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (has_root(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Hopf cylinders over curves in the orbit space of the 3-dimensional space
// form: for c <= 1 biharmonic means minimal; for c > 1 the cylinder is
// proper biharmonic iff the constant base curvature satisfies kappa^2 = c - 1.
struct Hopf3Result {
    bool proper_biharmonic = false;
    bool proper_possible = false;     // false when c <= 1 (minimal-only regime)
    double required_kappa2 = 0.0;     // c - 1 when applicable
    double residual = 0.0;            // | kappa^2 - (c - 1) |
};

inline Hopf3Result hopf3_criterion(double c, double kappa_bar, double tol = 1e-9) {
    if (c <= -3.0) throw std::invalid_argument("hopf3_criterion: requires c > -3");
    Hopf3Result r;
    if (c <= 1.0) return r;
    r.proper_possible = true;
    r.required_kappa2 = c - 1.0;
    r.residual = std::abs(kappa_bar * kappa_bar - r.required_kappa2);
    r.proper_biharmonic = r.residual < tol;
    return r;
}

}  // namespace biharm
