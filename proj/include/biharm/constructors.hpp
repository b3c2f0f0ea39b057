#pragma once

// Explicit proper-biharmonic Legendre curves in S^{2n+1}, admissible ambient
// frames, Frenet ODE integration with prescribed curvature profiles, flow
// cylinders F(t,p) = phi_t(p), and random Legendre curve generation.

#include "biharm/bitension.hpp"
#include "biharm/classify.hpp"
#include "biharm/grid.hpp"

#include <Eigen/Dense>

#include <memory>
#include <random>

namespace biharm {

// ----- admissible frames (ambient R^{2n+2} with complex structure I) --------

struct AdmissibleFrame {
    Vec e1, e2, e3, e4;
    Eigen::Matrix4d gram_I;  // <e_i, I e_j>
};

namespace detail {

inline Vec axis(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v[i] = 1.0;
    return v;
}

// real/imaginary unit vectors of the k-th complex coordinate (0-based)
inline Vec re_axis(int dim, int k) { return axis(dim, 2 * k); }
inline Vec im_axis(int dim, int k) { return axis(dim, 2 * k + 1); }

}  // namespace detail

// Orthonormal {e_i} in R^{2n+2} with <e1,I e3> = <e1,I e4> = <e2,I e3> =
// <e2,I e4> = 0 and A<e1,I e2> + B<e3,I e4> = 0. For n >= 3 the pairs sit in
// two I-orthogonal complex 2-planes with <e1,I e2> = -B/sqrt(A^2+B^2) and
// <e3,I e4> = A/sqrt(A^2+B^2); n = 2 has too few complex planes for that
// split and instead pins <e3,I e4> = 1, <e1,I e2> = -B/A.
inline AdmissibleFrame canonical_admissible_frame(int n, double A, double B, int sign = +1) {
    if (n < 2) throw std::invalid_argument("canonical_admissible_frame: requires n >= 2");
    if (A < 0.0 || B < 0.0 || A * A + B * B == 0.0)
        throw std::invalid_argument("canonical_admissible_frame: invalid (A, B)");
    const int dim = 2 * n + 2;
    const double sg = sign >= 0 ? 1.0 : -1.0;
    AdmissibleFrame f;
    double mu, nu;  // mu = <e1, I e2>, nu = <e3, I e4>
    if (n >= 3) {
        mu = -B / std::sqrt(A * A + B * B) * sg;
        nu = A / std::sqrt(A * A + B * B) * sg;
    } else {
        if (A == 0.0)
            throw std::invalid_argument("canonical_admissible_frame: n = 2 needs A > 0");
        nu = sg;
        mu = -B * sg / A;
    }
    using detail::im_axis;
    using detail::re_axis;
    // e1, e2 in complex planes 0/1; <e1, I e2> = -alpha with e2 = alpha*Im0 + beta*Re1
    f.e1 = re_axis(dim, 0);
    f.e2 = -mu * im_axis(dim, 0) + std::sqrt(std::max(0.0, 1.0 - mu * mu)) * re_axis(dim, 1);
    if (n >= 3) {
        f.e3 = re_axis(dim, 2);
        f.e4 = -nu * im_axis(dim, 2) + std::sqrt(std::max(0.0, 1.0 - nu * nu)) * re_axis(dim, 3);
    } else {
        f.e3 = re_axis(dim, 2);
        f.e4 = -nu * im_axis(dim, 2);  // nu = +-1
    }
    SpaceFormModel m = SpaceFormModel::unit_sphere(n);  // for j_mul only
    std::array<const Vec*, 4> es = {&f.e1, &f.e2, &f.e3, &f.e4};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f.gram_I(i, j) = es[i]->dot(m.j_mul(*es[j]));
    return f;
}

// ----- closed-form catalog curves on the unit sphere -------------------------

// gamma(s) = (cos(sqrt2 s) e1 + sin(sqrt2 s) e2 + e3)/sqrt2, with
// {e_i, I e_j} orthonormal; the proper-biharmonic circle with kappa1 = 1.
inline ParamCurve circle_curve(int n, double span = -1.0) {
    if (n < 2) throw std::invalid_argument("circle_curve: requires n >= 2");
    const int dim = 2 * n + 2;
    const double rt2 = std::sqrt(2.0);
    Vec e1 = detail::re_axis(dim, 0), e2 = detail::re_axis(dim, 1), e3 = detail::re_axis(dim, 2);
    ParamCurve c;
    c.model = std::make_shared<SpaceFormModel>(SpaceFormModel::unit_sphere(n));
    c.s0 = 0.0;
    c.s1 = span > 0.0 ? span : 2.0 * M_PI / rt2;  // one full period by default
    c.position = [=](double s) {
        return Vec((std::cos(rt2 * s) * e1 + std::sin(rt2 * s) * e2 + e3) / rt2);
    };
    return c;
}

// gamma(s) = (cos(As) e1 + sin(As) e2 + cos(Bs) e3 + sin(Bs) e4)/sqrt2 with
// A = sqrt(1+kappa1), B = sqrt(1-kappa1); the proper-biharmonic helix family.
inline ParamCurve helix_curve(int n, double kappa1, double span = 3.0) {
    if (n < 2) throw std::invalid_argument("helix_curve: requires n >= 2");
    if (!(kappa1 > 0.0 && kappa1 < 1.0))
        throw std::invalid_argument("helix_curve: kappa1 must lie in (0, 1)");
    const double A = std::sqrt(1.0 + kappa1), B = std::sqrt(1.0 - kappa1);
    AdmissibleFrame f = canonical_admissible_frame(n, A, B);
    ParamCurve c;
    c.model = std::make_shared<SpaceFormModel>(SpaceFormModel::unit_sphere(n));
    c.s0 = 0.0;
    c.s1 = span;
    c.position = [=](double s) {
        return Vec((std::cos(A * s) * f.e1 + std::sin(A * s) * f.e2 + std::cos(B * s) * f.e3
                    + std::sin(B * s) * f.e4) / std::sqrt(2.0));
    };
    return c;
}

// Legendre great circle (geodesic): gamma(s) = cos(s) p + sin(s) T with T a
// unit contact vector at p.
inline ParamCurve legendre_geodesic(int n, double span = 2.0 * M_PI) {
    const int dim = 2 * n + 2;
    Vec p0 = detail::re_axis(dim, 0), t0 = detail::re_axis(dim, 1);
    ParamCurve c;
    c.model = std::make_shared<SpaceFormModel>(SpaceFormModel::unit_sphere(n));
    c.s0 = 0.0;
    c.s1 = span;
    c.position = [=](double s) { return Vec(std::cos(s) * p0 + std::sin(s) * t0); };
    return c;
}

// ----- Frenet ODE integration -------------------------------------------------

struct FrenetInit {
    Vec p;
    std::vector<Vec> frame;  // E_1..E_r, g-orthonormal, eta(E_1) = 0
};

namespace detail {

inline void orthonormalize(const SpaceFormModel& m, const Vec& p, std::vector<Vec>& frame) {
    for (size_t i = 0; i < frame.size(); ++i) {
        Vec v = m.project_tangent(p, frame[i]);
        for (size_t j = 0; j < i; ++j) v -= m.metric(p, v, frame[j]) * frame[j];
        frame[i] = v / std::sqrt(m.metric(p, v, v));
    }
}

struct OdeNodes {
    double s0, ds;
    std::vector<Vec> pos;
    std::vector<Vec> vel;

    Vec eval(double s) const {
        double x = (s - s0) / ds;
        int i = static_cast<int>(std::floor(x));
        i = std::max(0, std::min(i, static_cast<int>(pos.size()) - 2));
        double u = x - i;
        if (std::abs(u) < 1e-9) return pos[i];
        if (std::abs(u - 1.0) < 1e-9) return pos[i + 1];
        double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * pos[i] + ds * (u3 - 2 * u2 + u) * vel[i]
             + (-2 * u3 + 3 * u2) * pos[i + 1] + ds * (u3 - u2) * vel[i + 1];
    }
};

}  // namespace detail

// Integrates the Frenet system nabla_T E_i = -kappa_{i-1} E_{i-1} +
// kappa_i E_{i+1} with constant curvatures from a given initial frame.
// Classical RK4 on the grid step with per-step frame re-orthonormalization.
inline ParamCurve integrate_frenet_ode(std::shared_ptr<const SpaceFormModel> model,
                                       const FrenetInit& init,
                                       const std::vector<double>& kappas, double length) {
    const SpaceFormModel& m = *model;
    const int r = static_cast<int>(init.frame.size());
    if (r < 1 || static_cast<int>(kappas.size()) != r - 1)
        throw std::invalid_argument("integrate_frenet_ode: need r frame vectors, r-1 curvatures");
    for (double k : kappas)
        if (k <= 0.0) throw std::invalid_argument("integrate_frenet_ode: curvatures must be positive");
    // frame compatibility checks
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j <= i; ++j) {
            double gij = m.metric(init.p, init.frame[i], init.frame[j]);
            double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(gij - want) > 1e-8)
                throw std::invalid_argument("integrate_frenet_ode: initial frame not g-orthonormal");
        }
    }
    if (std::abs(m.eta(init.p, init.frame[0])) > 1e-8)
        throw std::invalid_argument("integrate_frenet_ode: initial tangent must be a contact vector");

    const double h = kGridStep;
    const int steps = static_cast<int>(std::ceil(length / h));
    auto nodes = std::make_shared<detail::OdeNodes>();
    nodes->s0 = 0.0;
    nodes->ds = h;
    nodes->pos.reserve(steps + 1);
    nodes->vel.reserve(steps + 1);

    // state = (p, E_1..E_r) flattened
    const int d = m.ambient_dim();
    auto rhs = [&](const std::vector<Vec>& y) {
        std::vector<Vec> dy(r + 1);
        const Vec& p = y[0];
        const Vec& T = y[1];
        dy[0] = T;
        for (int i = 0; i < r; ++i) {
            Vec cov = Vec::Zero(d);
            if (i > 0) cov -= kappas[i - 1] * y[i];          // -kappa_{i-1} E_{i-1}
            if (i < r - 1) cov += kappas[i] * y[i + 2];      // +kappa_i E_{i+1}
            dy[i + 1] = m.dds_from_cov(p, T, y[i + 1], cov);
        }
        return dy;
    };

    std::vector<Vec> y(r + 1);
    y[0] = init.p;
    for (int i = 0; i < r; ++i) y[i + 1] = init.frame[i];
    nodes->pos.push_back(y[0]);
    nodes->vel.push_back(y[1]);
    for (int step = 0; step < steps; ++step) {
        auto k1 = rhs(y);
        std::vector<Vec> y2(r + 1), y3(r + 1), y4(r + 1);
        for (int i = 0; i <= r; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
        auto k2 = rhs(y2);
        for (int i = 0; i <= r; ++i) y3[i] = y[i] + 0.5 * h * k2[i];
        auto k3 = rhs(y3);
        for (int i = 0; i <= r; ++i) y4[i] = y[i] + h * k3[i];
        auto k4 = rhs(y4);
        for (int i = 0; i <= r; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        y[0] = m.project_point(y[0]);
        std::vector<Vec> frame(y.begin() + 1, y.end());
        detail::orthonormalize(m, y[0], frame);
        for (int i = 0; i < r; ++i) y[i + 1] = frame[i];
        nodes->pos.push_back(y[0]);
        nodes->vel.push_back(y[1]);
    }

    ParamCurve c;
    c.model = std::move(model);
    c.s0 = 0.0;
    c.s1 = steps * h;
    c.position = [nodes](double s) { return nodes->eval(s); };
    return c;
}

// ----- case-specific initial frames ------------------------------------------

namespace detail {

// Base point and a unit contact tangent in I-generic position.
inline std::pair<Vec, Vec> base_point_and_tangent(const SpaceFormModel& m) {
    if (!m.is_sphere_kind())
        throw std::invalid_argument("frame synthesis targets the sphere models");
    const int dim = m.ambient_dim();
    Vec p0 = re_axis(dim, 0);
    Vec t0 = re_axis(dim, 1);
    t0 /= std::sqrt(m.metric(p0, t0, t0));
    return {p0, t0};
}

inline Vec g_normalized(const SpaceFormModel& m, const Vec& p, const Vec& v) {
    return v / std::sqrt(m.metric(p, v, v));
}

}  // namespace detail

// E2 orthogonal to phi T, all frame vectors in the contact distribution and
// totally real (Cases I and II).
inline FrenetInit case2_frame(const SpaceFormModel& m, int r) {
    auto [p0, t0] = detail::base_point_and_tangent(m);
    if (m.n() + 1 < r + 1)
        throw std::invalid_argument("case2_frame: ambient dimension too small for requested order");
    FrenetInit init;
    init.p = p0;
    init.frame.push_back(t0);
    const int dim = m.ambient_dim();
    for (int i = 1; i < r; ++i)
        init.frame.push_back(detail::g_normalized(m, p0, detail::re_axis(dim, i + 1)));
    return init;
}

// E2 = sign * phi T, E3 = sign * xi (Case III; kappa2 must be 1).
inline FrenetInit case3_frame(const SpaceFormModel& m, int sign = +1) {
    auto [p0, t0] = detail::base_point_and_tangent(m);
    double sg = sign >= 0 ? 1.0 : -1.0;
    FrenetInit init;
    init.p = p0;
    init.frame.push_back(t0);
    init.frame.push_back(Vec(sg * detail::g_normalized(m, p0, m.phi(p0, t0))));
    init.frame.push_back(Vec(sg * m.xi(p0)));
    return init;
}

// Initial frame for the order-4 profile: phi T = cos(a0) E2 + sin(a0) E4 and
// E3 = (cos(a0)/kappa2) (kappa1 sin(a0) phi W + xi) with W a unit contact
// vector orthogonal to T and phi T.
inline FrenetInit case4_frame(const SpaceFormModel& m, const Order4Profile& prof, int branch = 0) {
    if (!prof.admissible) throw std::invalid_argument("case4_frame: profile not admissible");
    auto [p0, t0] = detail::base_point_and_tangent(m);
    const int dim = m.ambient_dim();
    if (m.n() < 2) throw std::invalid_argument("case4_frame: requires n >= 2");
    const double a0 = prof.branches[branch].alpha0;
    const double ca = std::cos(a0), sa = std::sin(a0);
    Vec phiT = detail::g_normalized(m, p0, m.phi(p0, t0));
    Vec w = detail::g_normalized(m, p0, detail::re_axis(dim, 2));
    Vec phiW = detail::g_normalized(m, p0, m.phi(p0, w));
    FrenetInit init;
    init.p = p0;
    init.frame.push_back(t0);
    init.frame.push_back(Vec(ca * phiT + sa * w));
    init.frame.push_back(Vec(ca / prof.kappa2 * (prof.kappa1 * sa * phiW + m.xi(p0))));
    init.frame.push_back(Vec(sa * phiT - ca * w));
    return init;
}

// ----- random Legendre curves --------------------------------------------------

// Integrates p' = T, nabla_T T = a(s) phi T + b(s) U with U a unit contact
// vector g-orthogonal to T and phi T; eta(nabla_T T) = 0 keeps the curve
// Legendre. U is carried as state with nabla_T U = -b T, which preserves
// |U| = 1, eta(U) = 0 and U _|_ T, phi T, so the curve's higher curvatures
// stay moderate (no fast frame rotation from a degenerating projection).
// Smooth trigonometric random controls.
inline ParamCurve random_legendre_curve(std::shared_ptr<const SpaceFormModel> model,
                                        std::mt19937& rng, double length = 1.0) {
    const SpaceFormModel& m = *model;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double a0 = 0.7 + 0.6 * u01(rng);
    const double a1 = 0.25 * u01(rng);
    const double om_a = 1.0 + 1.5 * u01(rng), ph_a = 2.0 * M_PI * u01(rng);
    const double b0 = 0.2 + 0.4 * u01(rng);
    const double b1 = 0.15 * u01(rng);
    const double om_b = 1.0 + 1.5 * u01(rng), ph_b = 2.0 * M_PI * u01(rng);

    Vec p = m.random_point(rng);
    Vec T = m.random_contact_tangent(p, rng);
    Vec U;
    {
        Vec u1 = m.phi(p, T);
        Vec seed = m.random_tangent(p, rng);
        U = seed - m.eta(p, seed) * m.xi(p);
        U -= m.metric(p, U, T) * T;
        U -= m.metric(p, U, u1) * u1;
        U /= std::sqrt(m.metric(p, U, U));
    }

    const double h = kGridStep;
    const int steps = static_cast<int>(std::ceil(length / h));
    auto nodes = std::make_shared<detail::OdeNodes>();
    nodes->s0 = 0.0;
    nodes->ds = h;

    struct State { Vec p, T, U; };
    auto rhs = [&](double s, const State& y) {
        double av = a0 + a1 * std::cos(om_a * s + ph_a);
        double bv = b0 + b1 * std::cos(om_b * s + ph_b);
        Vec W = av * m.phi(y.p, y.T) + bv * y.U;
        State d;
        d.p = y.T;
        d.T = m.dds_from_cov(y.p, y.T, y.T, W);
        d.U = m.dds_from_cov(y.p, y.T, y.U, Vec(-bv * y.T));
        return d;
    };

    State y{p, T, U};
    nodes->pos.push_back(y.p);
    nodes->vel.push_back(y.T);
    for (int step = 0; step < steps; ++step) {
        double s = step * h;
        State k1 = rhs(s, y);
        State y2{Vec(y.p + 0.5 * h * k1.p), Vec(y.T + 0.5 * h * k1.T), Vec(y.U + 0.5 * h * k1.U)};
        State k2 = rhs(s + h / 2, y2);
        State y3{Vec(y.p + 0.5 * h * k2.p), Vec(y.T + 0.5 * h * k2.T), Vec(y.U + 0.5 * h * k2.U)};
        State k3 = rhs(s + h / 2, y3);
        State y4{Vec(y.p + h * k3.p), Vec(y.T + h * k3.T), Vec(y.U + h * k3.U)};
        State k4 = rhs(s + h, y4);
        y.p += h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        y.T += h / 6.0 * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T);
        y.U += h / 6.0 * (k1.U + 2.0 * k2.U + 2.0 * k3.U + k4.U);
        y.p = m.project_point(y.p);
        y.T = m.project_tangent(y.p, y.T);
        y.T -= m.eta(y.p, y.T) * m.xi(y.p);
        y.T /= std::sqrt(m.metric(y.p, y.T, y.T));
        Vec u1 = m.phi(y.p, y.T);
        y.U = m.project_tangent(y.p, y.U);
        y.U -= m.eta(y.p, y.U) * m.xi(y.p);
        y.U -= m.metric(y.p, y.U, y.T) * y.T;
        y.U -= m.metric(y.p, y.U, u1) * u1;
        y.U /= std::sqrt(m.metric(y.p, y.U, y.U));
        nodes->pos.push_back(y.p);
        nodes->vel.push_back(y.T);
    }
    ParamCurve c;
    c.model = std::move(model);
    c.s0 = 0.0;
    c.s1 = steps * h;
    c.position = [nodes](double s) { return nodes->eval(s); };
    return c;
}

// ----- flow cylinders -----------------------------------------------------------

struct CylinderPatch {
    std::shared_ptr<const SpaceFormModel> model;
    double t0 = 0.0, dt = 0.0;
    double s0 = 0.0, ds = 0.0;
    std::vector<std::vector<Vec>> F;  // F[j][k] = phi_{t_j}(gamma(s_k))
    bool legendre_base = true;
};

// F(t, p) = phi_t(p) over the base curve; columns are xi-integral curves.
inline CylinderPatch flow_cylinder(const ParamCurve& base, double t0, double t1,
                                   int nt = 64, int ns = 256) {
    CylinderPatch patch;
    patch.model = base.model;
    patch.t0 = t0;
    patch.dt = (t1 - t0) / (nt - 1);
    patch.s0 = base.s0;
    patch.ds = (base.s1 - base.s0) / (ns - 1);
    patch.legendre_base = legendre_residual(base) < kLegendreGate;
    patch.F.resize(nt);
    for (int j = 0; j < nt; ++j) {
        patch.F[j].reserve(ns);
        double t = t0 + j * patch.dt;
        for (int k = 0; k < ns; ++k)
            patch.F[j].push_back(base.model->xi_flow(base.position(patch.s0 + k * patch.ds), t));
    }
    return patch;
}

struct CylinderReport {
    double metric_tt_residual = 0.0;   // |g(F_t,F_t) - 1|
    double metric_ts_residual = 0.0;   // |g(F_t,F_s)|
    double metric_ss_residual = 0.0;   // |g(F_s,F_s) - 1|
    double product_metric_residual = 0.0;
    double tension_min = 0.0, tension_max = 0.0;
    double tension_vs_kappa1_max = 0.0;  // max | ||tau(F)|| - kappa1(s) |
    bool base_is_legendre = true;
};

namespace detail {

// 5-point central first derivative of a grid row/column.
template <class Get>
Vec stencil5(const Get& f, int i, double h) {
    return Vec((-f(i + 2) + 8.0 * f(i + 1) - 8.0 * f(i - 1) + f(i - 2)) / (12.0 * h));
}

}  // namespace detail

// Discretized surface tension trace(nabla dF) of the patch via nested
// 5-point stencils; verifies the product metric g~ = dt^2 + ds^2 and
// compares ||tau(F)(t,s)|| with the base curve's kappa1(s).
inline CylinderReport cylinder_bitension_check(const CylinderPatch& patch,
                                               const std::vector<double>& kappa1_of_s) {
    const SpaceFormModel& m = *patch.model;
    const int nt = static_cast<int>(patch.F.size());
    const int ns = static_cast<int>(patch.F[0].size());
    if (nt < 9 || ns < 9) throw std::invalid_argument("cylinder grid too coarse for stencils");
    CylinderReport rep;
    rep.base_is_legendre = patch.legendre_base;
    rep.tension_min = std::numeric_limits<double>::infinity();

    auto Ft_at = [&](int j, int k) {
        return detail::stencil5([&](int jj) { return patch.F[jj][k]; }, j, patch.dt);
    };
    auto Fs_at = [&](int j, int k) {
        return detail::stencil5([&](int kk) { return patch.F[j][kk]; }, k, patch.ds);
    };
    for (int j = 4; j < nt - 4; ++j) {
        for (int k = 4; k < ns - 4; ++k) {
            const Vec& p = patch.F[j][k];
            Vec ft = Ft_at(j, k), fs = Fs_at(j, k);
            rep.metric_tt_residual = std::max(rep.metric_tt_residual,
                                              std::abs(m.metric(p, ft, ft) - 1.0));
            rep.metric_ts_residual = std::max(rep.metric_ts_residual,
                                              std::abs(m.metric(p, ft, fs)));
            rep.metric_ss_residual = std::max(rep.metric_ss_residual,
                                              std::abs(m.metric(p, fs, fs) - 1.0));
            // nabla_{F_t} F_t + nabla_{F_s} F_s
            Vec dft_dt = detail::stencil5([&](int jj) { return Ft_at(jj, k); }, j, patch.dt);
            Vec dfs_ds = detail::stencil5([&](int kk) { return Fs_at(j, kk); }, k, patch.ds);
            Vec tau = m.cov_from_dds(p, ft, ft, dft_dt) + m.cov_from_dds(p, fs, fs, dfs_ds);
            double nrm = std::sqrt(m.metric(p, tau, tau));
            rep.tension_min = std::min(rep.tension_min, nrm);
            rep.tension_max = std::max(rep.tension_max, nrm);
            if (!kappa1_of_s.empty()) {
                double kap = kappa1_of_s[k];
                rep.tension_vs_kappa1_max = std::max(rep.tension_vs_kappa1_max,
                                                     std::abs(nrm - kap));
            }
        }
    }
    rep.product_metric_residual = std::max({rep.metric_tt_residual, rep.metric_ts_residual,
                                            rep.metric_ss_residual});
    return rep;
}

}  // namespace biharm
