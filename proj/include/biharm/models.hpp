#pragma once

// Concrete Sasakian space-form models: the unit sphere S^{2n+1}, its
// D-homothetic deformations, and the standard flat model R^{2n+1}(-3).
// All structure tensors, the Levi-Civita connection along curves, the
// closed-form curvature operator and the Reeb flow are evaluated
// pointwise on an ambient coordinate representation.

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace biharm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class ModelKind { UnitSphere, DeformedSphere, FlatSasakian };

struct AmbientPoint {
    Vec coords;
};

struct TangentVector {
    Vec base;
    Vec components;
};

class SpaceFormModel {
public:
    static SpaceFormModel unit_sphere(int n) {
        check_n(n);
        return SpaceFormModel(ModelKind::UnitSphere, n, 1.0);
    }
    static SpaceFormModel deformed_sphere(int n, double a) {
        check_n(n);
        if (a <= 0.0) throw std::invalid_argument("deformation parameter a must be positive");
        return SpaceFormModel(ModelKind::DeformedSphere, n, a);
    }
    static SpaceFormModel flat_sasakian(int n) {
        check_n(n);
        return SpaceFormModel(ModelKind::FlatSasakian, n, 1.0);
    }

    ModelKind kind() const { return kind_; }
    int n() const { return n_; }
    double a() const { return a_; }
    double c() const { return c_; }
    int dim() const { return 2 * n_ + 1; }
    int ambient_dim() const {
        return kind_ == ModelKind::FlatSasakian ? 2 * n_ + 1 : 2 * n_ + 2;
    }
    bool is_sphere_kind() const { return kind_ != ModelKind::FlatSasakian; }

    // ----- structure tensors -------------------------------------------------

    double metric(const Vec& p, const Vec& X, const Vec& Y) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return X.dot(Y);
            case ModelKind::DeformedSphere:
                return a_ * X.dot(Y) + a_ * (a_ - 1.0) * eta0(p, X) * eta0(p, Y);
            case ModelKind::FlatSasakian: {
                return X.dot(metric_matrix(p) * Y);
            }
        }
        return 0.0;
    }

    double metric(const TangentVector& X, const TangentVector& Y) const {
        if ((X.base - Y.base).norm() > 1e-10)
            throw std::invalid_argument("metric: tangent vectors have different base points");
        return metric(X.base, X.components, Y.components);
    }

    Vec phi(const Vec& p, const Vec& X) const {
        if (is_sphere_kind()) {
            // tangential part of the ambient complex structure
            return j_mul(X) - eta0(p, X) * p;
        }
        // flat model, coordinates (x_1..x_n, y_1..y_n, z)
        Vec out = Vec::Zero(dim());
        double yz = 0.0;
        for (int i = 0; i < n_; ++i) {
            out[i] = X[n_ + i];
            out[n_ + i] = -X[i];
            yz += X[n_ + i] * p[n_ + i];
        }
        out[2 * n_] = yz;
        return out;
    }

    TangentVector phi(const TangentVector& X) const {
        return {X.base, phi(X.base, X.components)};
    }

    Vec xi(const Vec& p) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return -j_mul(p);
            case ModelKind::DeformedSphere:
                return -j_mul(p) / a_;
            case ModelKind::FlatSasakian: {
                Vec out = Vec::Zero(dim());
                out[2 * n_] = 2.0;
                return out;
            }
        }
        return Vec();
    }

    double eta(const Vec& p, const Vec& X) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return eta0(p, X);
            case ModelKind::DeformedSphere:
                return a_ * eta0(p, X);
            case ModelKind::FlatSasakian: {
                double s = X[2 * n_];
                for (int i = 0; i < n_; ++i) s -= p[n_ + i] * X[i];
                return 0.5 * s;
            }
        }
        return 0.0;
    }

    // Ambient extension of eta used by finite-difference checks; smooth in p
    // off the carrier (sphere kinds normalize the base point).
    double eta_ambient(const Vec& p, const Vec& X) const {
        if (is_sphere_kind()) {
            Vec q = p / p.norm();
            double e = -X.dot(j_mul(q));
            return kind_ == ModelKind::DeformedSphere ? a_ * e : e;
        }
        return eta(p, X);
    }

    // ----- curvature of the space form --------------------------------------

    // R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
    // closed form with constant (c+3)/4 and (c-1)/4 blocks.
    Vec curvature_op(const Vec& p, const Vec& X, const Vec& Y, const Vec& Z) const {
        const double k1 = (c_ + 3.0) / 4.0;
        const double k2 = (c_ - 1.0) / 4.0;
        const Vec xiv = xi(p);
        const double eX = eta(p, X), eY = eta(p, Y), eZ = eta(p, Z);
        const Vec pX = phi(p, X), pY = phi(p, Y), pZ = phi(p, Z);
        Vec r = k1 * (metric(p, Y, Z) * X - metric(p, X, Z) * Y);
        r += k2 * (eX * eZ * Y - eY * eZ * X
                   + metric(p, X, Z) * eY * xiv - metric(p, Y, Z) * eX * xiv
                   + metric(p, Z, pY) * pX - metric(p, Z, pX) * pY
                   + 2.0 * metric(p, X, pY) * pZ);
        return r;
    }

    Vec curvature_op(const TangentVector& X, const TangentVector& Y, const TangentVector& Z) const {
        if ((X.base - Y.base).norm() > 1e-10 || (X.base - Z.base).norm() > 1e-10)
            throw std::invalid_argument("curvature_op: mismatched base points");
        return curvature_op(X.base, X.components, Y.components, Z.components);
    }

    // ----- Levi-Civita connection along curves -------------------------------

    // nabla_T X given the ambient parameter derivative dX/ds of the field.
    Vec cov_from_dds(const Vec& p, const Vec& T, const Vec& X, const Vec& dXds) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return dXds - dXds.dot(p) * p;
            case ModelKind::DeformedSphere: {
                Vec v = dXds - dXds.dot(p) * p;
                v -= (a_ - 1.0) * (eta0(p, T) * phi(p, X) + eta0(p, X) * phi(p, T));
                return v;
            }
            case ModelKind::FlatSasakian:
                return dXds + christoffel_term(p, T, X);
        }
        return Vec();
    }

    // Inverse map: ambient derivative dX/ds of a tangent field along a curve
    // with velocity T, given nabla_T X. Used by the Frenet ODE integrator.
    Vec dds_from_cov(const Vec& p, const Vec& T, const Vec& X, const Vec& cov) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return cov - X.dot(T) * p;
            case ModelKind::DeformedSphere:
                return cov + (a_ - 1.0) * (eta0(p, T) * phi(p, X) + eta0(p, X) * phi(p, T))
                       - X.dot(T) * p;
            case ModelKind::FlatSasakian:
                return cov - christoffel_term(p, T, X);
        }
        return Vec();
    }

    // Gamma(T,X) for the flat model, assembled from the analytic metric
    // derivatives (the metric depends on the y coordinates only).
    Vec christoffel_term(const Vec& q, const Vec& T, const Vec& X) const {
        const int d = dim();
        Mat mt = Mat::Zero(d, d), mx = Mat::Zero(d, d);
        for (int k = 0; k < n_; ++k) {
            if (T[n_ + k] != 0.0) add_dg(mt, k, T[n_ + k], q);
            if (X[n_ + k] != 0.0) add_dg(mx, k, X[n_ + k], q);
        }
        Vec rhs = mt * X + mx * T;
        // minus the partial_m g_ij contraction; nonzero only for y indices
        for (int k = 0; k < n_; ++k) {
            Mat dg = Mat::Zero(d, d);
            add_dg(dg, k, 1.0, q);
            rhs[n_ + k] -= T.dot(dg * X);
        }
        return 0.5 * metric_matrix(q).llt().solve(rhs);
    }

    Mat metric_matrix(const Vec& q) const {
        const int d = dim();
        Mat g = Mat::Zero(d, d);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j)
                g(i, j) = (((i == j) ? 1.0 : 0.0) + q[n_ + i] * q[n_ + j]) / 4.0;
            g(n_ + i, n_ + i) = 0.25;
            g(i, 2 * n_) = g(2 * n_, i) = -q[n_ + i] / 4.0;
        }
        g(2 * n_, 2 * n_) = 0.25;
        return g;
    }

    // ----- Reeb flow ---------------------------------------------------------

    Vec xi_flow(const Vec& p, double t) const {
        switch (kind_) {
            case ModelKind::UnitSphere:
                return std::cos(t) * p - std::sin(t) * j_mul(p);
            case ModelKind::DeformedSphere: {
                double s = t / a_;
                return std::cos(s) * p - std::sin(s) * j_mul(p);
            }
            case ModelKind::FlatSasakian: {
                Vec q = p;
                q[2 * n_] += 2.0 * t;
                return q;
            }
        }
        return Vec();
    }

    std::optional<double> xi_period() const {
        switch (kind_) {
            case ModelKind::UnitSphere: return 2.0 * M_PI;
            case ModelKind::DeformedSphere: return 2.0 * M_PI * a_;
            case ModelKind::FlatSasakian: return std::nullopt;
        }
        return std::nullopt;
    }

    // ----- carrier helpers ---------------------------------------------------

    Vec project_point(const Vec& p) const {
        return is_sphere_kind() ? Vec(p / p.norm()) : p;
    }

    Vec project_tangent(const Vec& p, const Vec& v) const {
        return is_sphere_kind() ? Vec(v - v.dot(p) * p) : v;
    }

    double carrier_residual(const Vec& p) const {
        return is_sphere_kind() ? std::abs(p.norm() - 1.0) : 0.0;
    }

    Vec random_point(std::mt19937& rng) const {
        std::normal_distribution<double> nd(0.0, 1.0);
        Vec p(ambient_dim());
        for (int i = 0; i < p.size(); ++i) p[i] = nd(rng);
        if (is_sphere_kind()) return Vec(p / p.norm());
        return Vec(0.5 * p);
    }

    Vec random_tangent(const Vec& p, std::mt19937& rng) const {
        std::normal_distribution<double> nd(0.0, 1.0);
        Vec v(ambient_dim());
        for (int i = 0; i < v.size(); ++i) v[i] = nd(rng);
        return project_tangent(p, v);
    }

    Vec random_unit_tangent(const Vec& p, std::mt19937& rng) const {
        Vec v = random_tangent(p, rng);
        return Vec(v / std::sqrt(metric(p, v, v)));
    }

    // Unit contact tangent vector (eta = 0) at p.
    Vec random_contact_tangent(const Vec& p, std::mt19937& rng) const {
        Vec v = random_tangent(p, rng);
        Vec x = xi(p);
        v -= eta(p, v) * x;  // g(xi,xi) = 1 in every model
        double nrm = std::sqrt(metric(p, v, v));
        if (nrm < 1e-8) throw std::runtime_error("degenerate contact sample");
        return Vec(v / nrm);
    }

    // Ambient complex structure, pairs (x_k, y_k) at indices (2k, 2k+1).
    Vec j_mul(const Vec& v) const {
        Vec out(v.size());
        for (int k = 0; 2 * k + 1 < v.size(); ++k) {
            out[2 * k] = -v[2 * k + 1];
            out[2 * k + 1] = v[2 * k];
        }
        return out;
    }

    // Undeformed sphere contact form (also the deformed one up to the factor a).
    double eta0(const Vec& p, const Vec& X) const {
        return -X.dot(j_mul(p));
    }

private:
    static void check_n(int n) {
        if (n < 1) throw std::invalid_argument("dimension parameter n must be >= 1");
    }

    SpaceFormModel(ModelKind k, int n, double a) : kind_(k), n_(n), a_(a) {
        if (n < 1) throw std::invalid_argument("n must be positive");
        switch (kind_) {
            case ModelKind::UnitSphere: c_ = 1.0; break;
            case ModelKind::DeformedSphere: c_ = 4.0 / a_ - 3.0; break;
            case ModelKind::FlatSasakian: c_ = -3.0; break;
        }
    }

    void add_dg(Mat& m, int k, double w, const Vec& q) const {
        // w * d g / d y_k
        for (int j = 0; j < n_; ++j) {
            m(k, j) += w * q[n_ + j] / 4.0;
            m(j, k) += w * q[n_ + j] / 4.0;
        }
        m(k, 2 * n_) += -w / 4.0;
        m(2 * n_, k) += -w / 4.0;
    }

    ModelKind kind_;
    int n_;
    double a_;
    double c_ = 1.0;
};

}  // namespace biharm
