#pragma once

// Decision procedures for the case analysis of proper-biharmonic Legendre
// Frenet curves: given c and measured Frenet invariants, return the verdict
// and the constraint residuals. Also emits the complete order-4 profile.

#include "biharm/curves.hpp"

#include <array>
#include <optional>
#include <sstream>

namespace biharm {

enum class CaseTag { I, II, III, IV, Mixed };
enum class ClassVerdict { GeodesicOnly, ProperBiharmonic, NotProperBiharmonic };

inline const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
        case CaseTag::Mixed: return "Mixed";
    }
    return "?";
}

inline const char* to_string(ClassVerdict v) {
    switch (v) {
        case ClassVerdict::GeodesicOnly: return "geodesic-only";
        case ClassVerdict::ProperBiharmonic: return "proper-biharmonic";
        case ClassVerdict::NotProperBiharmonic: return "not-proper-biharmonic";
    }
    return "?";
}

struct Constraint {
    std::string name;
    double target = 0.0;
    double measured = 0.0;
    double residual = 0.0;
    bool ok = false;
};

inline Constraint make_constraint(std::string name, double target, double measured, double tol) {
    Constraint c;
    c.name = std::move(name);
    c.target = target;
    c.measured = measured;
    c.residual = std::abs(measured - target);
    c.ok = c.residual < tol;
    return c;
}

struct ClassificationVerdict {
    CaseTag case_tag = CaseTag::Mixed;
    ClassVerdict verdict = ClassVerdict::NotProperBiharmonic;
    std::vector<Constraint> constraints;
    std::optional<int> required_ambient_n;
    double alpha0 = 0.0;  // Case IV only
    std::string note;

    bool all_ok() const {
        for (const auto& c : constraints)
            if (!c.ok) return false;
        return true;
    }

    std::string render() const {
        std::ostringstream os;
        os << "case " << to_string(case_tag) << ": " << to_string(verdict);
        if (required_ambient_n) os << " (requires n >= " << *required_ambient_n << ")";
        os << "\n";
        for (const auto& c : constraints)
            os << "  " << c.name << ": " << c.target << " vs " << c.measured
               << " (residual " << c.residual << (c.ok ? ", ok" : ", FAIL") << ")\n";
        if (!note.empty()) os << "  note: " << note << "\n";
        return os.str();
    }
};

// Standard-deviation bound under which a measured torsion/curvature profile
// counts as constant.
constexpr double kConstancyTol = 1e-5;

struct Order4Branch {
    double alpha0 = 0.0;
    double tau12 = 0.0, tau14 = 0.0, tau23 = 0.0, tau34 = 0.0;
};

struct Order4Profile {
    bool admissible = false;
    std::string reason;
    double c = 0.0;
    double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0;
    std::array<Order4Branch, 2> branches;  // alpha0 in (pi/2,pi) and (3pi/2,2pi)
};

// Closed-form curvature/torsion profile of a proper-biharmonic Legendre
// Frenet curve of osculating order 4; admissible only for c in (7/3, 5).
inline Order4Profile order4_profile(double c) {
    Order4Profile p;
    p.c = c;
    if (!(c > 7.0 / 3.0 && c < 5.0)) {
        p.reason = "c must lie in the open interval (7/3, 5)";
        return p;
    }
    p.admissible = true;
    p.kappa1 = std::sqrt(c + 3.0) / 2.0;
    p.kappa2 = 0.5 * std::sqrt(6.0 * (c - 1.0) * (5.0 - c) / (c + 3.0));
    p.kappa3 = 0.5 * std::sqrt(3.0 * (c - 1.0) * (3.0 * c - 7.0) / (c + 3.0));
    const double sin_abs = std::sqrt((3.0 * c - 7.0) / (c + 3.0));
    const double cos_abs = std::sqrt(2.0 * (5.0 - c) / (c + 3.0));
    const double tau23_abs = (3.0 * c - 7.0) / std::sqrt(3.0 * (c - 1.0) * (c + 3.0));
    const double tau34_abs =
        std::sqrt(2.0 * (5.0 - c) * (3.0 * c - 7.0) / (3.0 * (c - 1.0) * (c + 3.0)));
    // branch 0: alpha0 in (pi/2, pi): cos < 0, sin > 0
    p.branches[0].alpha0 = M_PI - std::asin(sin_abs);
    p.branches[0].tau12 = cos_abs;   // -cos(alpha0)
    p.branches[0].tau14 = -sin_abs;  // -sin(alpha0)
    p.branches[0].tau23 = tau23_abs;
    p.branches[0].tau34 = -tau34_abs;
    // branch 1: alpha0 in (3pi/2, 2pi): cos > 0, sin < 0
    p.branches[1].alpha0 = 2.0 * M_PI - std::asin(sin_abs);
    p.branches[1].tau12 = -cos_abs;
    p.branches[1].tau14 = sin_abs;
    p.branches[1].tau23 = -tau23_abs;
    p.branches[1].tau34 = tau34_abs;
    return p;
}

// Residuals of the Case IV constraint system at given curvatures and angle.
inline std::vector<Constraint> case4_constraints(double c, double k1, double k2, double k3,
                                                 double alpha0, double tol = 1e-9) {
    std::vector<Constraint> out;
    double ca = std::cos(alpha0);
    out.push_back(make_constraint("kappa1^2 + kappa2^2 = (c+3)/4 + 3(c-1)cos^2(alpha0)/4",
                                  (c + 3.0) / 4.0 + 3.0 * (c - 1.0) / 4.0 * ca * ca,
                                  k1 * k1 + k2 * k2, tol));
    out.push_back(make_constraint("kappa2 kappa3 = -3(c-1)sin(2 alpha0)/8",
                                  -3.0 * (c - 1.0) / 8.0 * std::sin(2.0 * alpha0), k2 * k3, tol));
    Constraint ineq1;
    ineq1.name = "c + 3 + 3(c-1)cos^2(alpha0) > 0";
    ineq1.measured = c + 3.0 + 3.0 * (c - 1.0) * ca * ca;
    ineq1.ok = ineq1.measured > 0.0;
    ineq1.residual = ineq1.ok ? 0.0 : -ineq1.measured;
    out.push_back(ineq1);
    Constraint ineq2;
    ineq2.name = "3(c-1)sin(2 alpha0) < 0";
    ineq2.measured = 3.0 * (c - 1.0) * std::sin(2.0 * alpha0);
    ineq2.ok = ineq2.measured < 0.0;
    ineq2.residual = ineq2.ok ? 0.0 : ineq2.measured;
    out.push_back(ineq2);
    return out;
}

namespace detail {

inline double fold_angle(double a) {
    double t = std::fmod(a, 2.0 * M_PI);
    if (t <= 0.0) t += 2.0 * M_PI;
    return t;
}

}  // namespace detail

// The case analysis: picks the case from the measured tau_12 profile and
// checks the matching theorem's constraint system.
inline ClassificationVerdict classify(double c, const FrenetData& fd, double tol = 1e-4) {
    ClassificationVerdict v;
    const int r = fd.order;

    if (r == 1) {
        v.case_tag = (std::abs(c - 1.0) < 1e-12) ? CaseTag::I : CaseTag::II;
        v.verdict = ClassVerdict::GeodesicOnly;
        v.note = "curve is a geodesic (harmonic, hence not proper-biharmonic)";
        return v;
    }

    SeriesStats k1 = fd.kappa_stats(1);
    SeriesStats k2{};
    if (r >= 3) k2 = fd.kappa_stats(2);
    SeriesStats t12 = fd.tau_stats(1, 2);

    auto add_constancy = [&](const char* name, const SeriesStats& st) {
        Constraint ct;
        ct.name = std::string(name) + " constant";
        ct.measured = st.stddev;
        ct.ok = st.stddev < kConstancyTol;
        ct.residual = st.stddev;
        v.constraints.push_back(ct);
    };

    if (std::abs(c - 1.0) < 1e-12) {
        v.case_tag = CaseTag::I;
        v.required_ambient_n = 2;
        add_constancy("kappa1", k1);
        if (r == 2) {
            v.constraints.push_back(make_constraint("kappa1 = 1 (circle)", 1.0, k1.mean, tol));
        } else if (r == 3) {
            add_constancy("kappa2", k2);
            v.constraints.push_back(make_constraint("kappa1^2 + kappa2^2 = 1", 1.0,
                                                    k1.mean * k1.mean + k2.mean * k2.mean, tol));
        } else {
            v.verdict = ClassVerdict::NotProperBiharmonic;
            v.note = "c = 1 admits only circles (r=2) and helices (r=3)";
            return v;
        }
        v.verdict = v.all_ok() ? ClassVerdict::ProperBiharmonic : ClassVerdict::NotProperBiharmonic;
        return v;
    }

    if (t12.stddev >= kConstancyTol) {
        v.case_tag = CaseTag::Mixed;
        v.verdict = ClassVerdict::NotProperBiharmonic;
        v.note = "g(E2, phi T) is not constant along the curve; proper-biharmonic "
                 "Legendre curves have constant phi-torsion tau_12";
        add_constancy("tau12", t12);
        return v;
    }

    const double tau12 = t12.mean;
    if (std::abs(tau12) < 10.0 * kConstancyTol) {
        // Case II: E2 orthogonal to phi T
        v.case_tag = CaseTag::II;
        if (c <= -3.0) {
            v.verdict = ClassVerdict::GeodesicOnly;
            v.note = "c <= -3: biharmonic if and only if geodesic";
            return v;
        }
        add_constancy("kappa1", k1);
        if (r == 2) {
            v.required_ambient_n = 2;
            v.constraints.push_back(make_constraint("kappa1^2 = (c+3)/4", (c + 3.0) / 4.0,
                                                    k1.mean * k1.mean, tol));
        } else if (r == 3) {
            v.required_ambient_n = 3;
            add_constancy("kappa2", k2);
            v.constraints.push_back(make_constraint("kappa1^2 + kappa2^2 = (c+3)/4",
                                                    (c + 3.0) / 4.0,
                                                    k1.mean * k1.mean + k2.mean * k2.mean, tol));
        } else {
            v.verdict = ClassVerdict::NotProperBiharmonic;
            v.note = "tau12 = 0 admits only circles (r=2) and helices (r=3)";
            return v;
        }
        v.verdict = v.all_ok() ? ClassVerdict::ProperBiharmonic : ClassVerdict::NotProperBiharmonic;
        return v;
    }

    if (std::abs(std::abs(tau12) - 1.0) < 10.0 * kConstancyTol) {
        // Case III: E2 parallel to phi T; Frenet frame {T, phi T, xi}
        v.case_tag = CaseTag::III;
        if (c < 1.0) {
            v.verdict = ClassVerdict::GeodesicOnly;
            v.note = "c < 1 with E2 || phi T: biharmonic if and only if geodesic";
            return v;
        }
        add_constancy("kappa1", k1);
        Constraint rOrder;
        rOrder.name = "osculating order = 3";
        rOrder.measured = r;
        rOrder.target = 3;
        rOrder.ok = (r == 3);
        rOrder.residual = std::abs(r - 3);
        v.constraints.push_back(rOrder);
        v.constraints.push_back(make_constraint("kappa1^2 = c - 1", c - 1.0,
                                                k1.mean * k1.mean, tol));
        if (r >= 3)
            v.constraints.push_back(make_constraint("kappa2 = 1", 1.0, k2.mean, tol));
        v.verdict = v.all_ok() ? ClassVerdict::ProperBiharmonic : ClassVerdict::NotProperBiharmonic;
        return v;
    }

    // Case IV: tau12 constant, different from 0 and +-1
    v.case_tag = CaseTag::IV;
    if (c <= -3.0) {
        v.verdict = ClassVerdict::GeodesicOnly;
        v.note = "c <= -3: biharmonic if and only if geodesic";
        return v;
    }
    add_constancy("tau12", t12);
    if (r < 4) {
        v.verdict = ClassVerdict::NotProperBiharmonic;
        v.note = "Case IV requires osculating order r >= 4";
        return v;
    }
    SeriesStats t14 = fd.tau_stats(1, 4);
    const double alpha0 = detail::fold_angle(std::atan2(-t14.mean, -tau12));
    v.alpha0 = alpha0;
    add_constancy("kappa1", k1);
    add_constancy("kappa2", k2);
    add_constancy("kappa3", fd.kappa_stats(3));
    SeriesStats k3 = fd.kappa_stats(3);
    for (auto& ct : case4_constraints(c, k1.mean, k2.mean, k3.mean, alpha0, tol))
        v.constraints.push_back(std::move(ct));
    // phi T = cos(alpha0) E2 + sin(alpha0) E4
    {
        const SampledCurve& sc = fd.curve;
        double res = 0.0;
        for (int g = fd.frames[3].lo; g < fd.frames[3].hi(); ++g) {
            Vec phiT = sc.model->phi(sc.pos[g], fd.frames[0].at(g));
            Vec diff = phiT - std::cos(alpha0) * fd.frames[1].at(g)
                            - std::sin(alpha0) * fd.frames[3].at(g);
            res = std::max(res, std::sqrt(sc.model->metric(sc.pos[g], diff, diff)));
        }
        Constraint ct;
        ct.name = "phi T = cos(alpha0) E2 + sin(alpha0) E4";
        ct.measured = res;
        ct.residual = res;
        ct.ok = res < tol;
        v.constraints.push_back(ct);
    }
    v.verdict = v.all_ok() ? ClassVerdict::ProperBiharmonic : ClassVerdict::NotProperBiharmonic;
    return v;
}

inline ClassificationVerdict classify(const ParamCurve& c, double tol = 1e-4) {
    return classify(c.model->c(), frenet(c), tol);
}

}  // namespace biharm
