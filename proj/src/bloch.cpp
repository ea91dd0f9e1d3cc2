#include "isocone/bloch.hpp"

#include <cmath>

namespace isocone {

namespace {

constexpr double kPi = 3.14159265358979323846;

double unit_angle(const Vec3& a, const Vec3& b) {
    const double c = std::clamp(a.dot(b), -1.0, 1.0);
    return std::acos(c);
}

Vec3 normalized_or_throw(const Vec3& v, const char* what) {
    const double n = v.norm();
    if (n < 1e-12) throw InputError(std::string(what) + ": zero vector");
    return v / n;
}

// Fibonacci sphere grid, deterministic.
std::vector<Vec3> sphere_grid(int n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * kPi * (i / golden - std::floor(i / golden));
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

// Unit vector orthogonal to v, deterministic.
Vec3 any_orthogonal(const Vec3& v) {
    const Vec3 e = std::abs(v.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    return v.cross(e).normalized();
}

}  // namespace

BlochCoordinates bloch_coordinates(const Hermitian& a) {
    if (a.dim() != 2) throw InputError("bloch_coordinates: need a 2x2 matrix");
    const Mat& m = a.mat();
    BlochCoordinates c;
    c.trace_half = 0.5 * (m(0, 0).real() + m(1, 1).real());
    c.m = Vec3(m(0, 1).real(), -m(0, 1).imag(), 0.5 * (m(0, 0).real() - m(1, 1).real()));
    return c;
}

Hermitian pauli_vector(const Vec3& v) {
    Mat m(2, 2);
    m(0, 0) = Complex(v.z(), 0.0);
    m(0, 1) = Complex(v.x(), -v.y());
    m(1, 0) = Complex(v.x(), v.y());
    m(1, 1) = Complex(-v.z(), 0.0);
    return hermitian_unchecked(std::move(m));
}

Hermitian bloch_projector(const Vec3& d) {
    const Vec3 u = d.normalized();
    Mat m = 0.5 * (Mat::Identity(2, 2) + pauli_vector(u).mat());
    return hermitian_unchecked(std::move(m));
}

Eigen::Matrix3d bloch_rotation(const Mat& u) {
    if (u.rows() != 2 || u.cols() != 2) throw InputError("bloch_rotation: need a 2x2 unitary");
    Eigen::Matrix3d r;
    const Vec3 basis[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    for (int i = 0; i < 3; ++i) {
        const Mat conj = u * pauli_vector(basis[i]).mat() * u.adjoint();
        const BlochCoordinates c = bloch_coordinates(hermitian_unchecked(
            0.5 * (conj + Mat(conj.adjoint()))));
        r.col(i) = c.m;
    }
    return r;
}

BlochRegion BlochRegion::cap(const Vec3& center, double angle) {
    if (!(angle > 0.0) || angle > kPi)
        throw InputError("BlochRegion::cap: angle must lie in (0, pi]");
    if (angle > kPi / 2 + 1e-12)
        throw InputError(
            "BlochRegion::cap: caps wider than a hemisphere are not geodesically convex; "
            "use a full inner cone");
    BlochRegion k;
    k.kind_ = Kind::cap;
    k.center_ = normalized_or_throw(center, "BlochRegion::cap center");
    k.angle_ = angle;
    k.antipode_free_ = angle < kPi / 2 - 1e-12;
    k.interior_point_ = k.center_;
    k.interior_margin_ = angle;
    return k;
}

BlochRegion BlochRegion::polygon(std::vector<Vec3> normals) {
    if (normals.empty())
        throw InputError("BlochRegion::polygon: need at least one hemisphere normal");
    if (normals.size() > 32)
        throw InputError("BlochRegion::polygon: at most 32 hemisphere normals");
    BlochRegion k;
    k.kind_ = Kind::polygon;
    for (auto& n : normals) n = normalized_or_throw(n, "BlochRegion::polygon normal");
    k.normals_ = std::move(normals);
    // Interior point: maximize the minimal hemisphere margin over a grid,
    // then refine by averaging active normals.
    Vec3 best = Vec3::UnitZ();
    double best_margin = -kInf;
    for (const Vec3& p : sphere_grid(4096)) {
        double m = kInf;
        for (const Vec3& n : k.normals_) m = std::min(m, p.dot(n));
        if (m > best_margin) {
            best_margin = m;
            best = p;
        }
    }
    for (int it = 0; it < 64; ++it) {
        Vec3 pull = Vec3::Zero();
        for (const Vec3& n : k.normals_)
            if (best.dot(n) < best_margin + 0.05) pull += n;
        if (pull.norm() < 1e-12) break;
        const Vec3 cand = (best + 0.1 * pull.normalized()).normalized();
        double m = kInf;
        for (const Vec3& n : k.normals_) m = std::min(m, cand.dot(n));
        if (m <= best_margin) break;
        best = cand;
        best_margin = m;
    }
    if (best_margin < 1e-6)
        throw InputError("BlochRegion::polygon: region is empty or has no interior");
    k.interior_point_ = best;
    k.interior_margin_ = best_margin;
    // Interior antipodal pairs are impossible (p.n > 0 and -p.n > 0 clash),
    // but boundary pairs survive, e.g. the equator of a single hemisphere.
    k.antipode_free_ = true;
    for (const Vec3& p : sphere_grid(2048)) {
        double m1 = kInf, m2 = kInf;
        for (const Vec3& n : k.normals_) {
            m1 = std::min(m1, p.dot(n));
            m2 = std::min(m2, -p.dot(n));
        }
        if (m1 > -1e-9 && m2 > -1e-9) {
            k.antipode_free_ = false;
            break;
        }
    }
    return k;
}

double BlochRegion::direction_margin(const Vec3& d) const {
    const Vec3 u = normalized_or_throw(d, "direction_margin");
    if (kind_ == Kind::cap) return angle_ - unit_angle(u, center_);
    double m = kInf;
    for (const Vec3& n : normals_) m = std::min(m, u.dot(n));
    return m;
}

MembershipResult BlochRegion::classify_direction(const Vec3& d, double tol) const {
    return classify_margin(direction_margin(d), tol);
}

double BlochRegion::min_dot(const Vec3& d, int samples) const {
    const double nd = d.norm();
    if (nd < 1e-15) return 0.0;
    const Vec3 u = d / nd;
    if (kind_ == Kind::cap) {
        const double theta = unit_angle(u, center_);
        return nd * std::cos(std::min(theta + angle_, kPi));
    }
    // Antipode of d inside: unconstrained minimum is attained there.
    if (direction_margin(-u) >= 0.0) return -nd;
    double best = kInf;
    // the interior point is always feasible
    best = std::min(best, nd * u.dot(interior_point_));
    // vertices: pairwise intersections of boundary circles
    const auto feasible = [this](const Vec3& p) {
        for (const Vec3& n : normals_)
            if (p.dot(n) < -1e-9) return false;
        return true;
    };
    for (std::size_t i = 0; i < normals_.size(); ++i)
        for (std::size_t j = i + 1; j < normals_.size(); ++j) {
            const Vec3 c = normals_[i].cross(normals_[j]);
            if (c.norm() < 1e-12) continue;
            const Vec3 v = c.normalized();
            if (feasible(v)) best = std::min(best, nd * u.dot(v));
            if (feasible(-v)) best = std::min(best, nd * u.dot(-v));
        }
    // discretized boundary circles
    for (const Vec3& n : normals_) {
        const Vec3 e1 = any_orthogonal(n);
        const Vec3 e2 = n.cross(e1);
        for (int s = 0; s < samples; ++s) {
            const double t = 2.0 * kPi * s / samples;
            const Vec3 p = std::cos(t) * e1 + std::sin(t) * e2;
            if (feasible(p)) best = std::min(best, nd * u.dot(p));
        }
    }
    return best;
}

BlochRegion BlochRegion::rotated(const Eigen::Matrix3d& r) const {
    if ((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-8)
        throw InputError("BlochRegion::rotated: matrix is not a rotation");
    if (kind_ == Kind::cap) return cap(r * center_, angle_);
    std::vector<Vec3> normals;
    for (const Vec3& n : normals_) normals.push_back(r * n);
    return polygon(std::move(normals));
}

MembershipResult m2_membership(const BlochRegion& k, const Hermitian& a, double tol) {
    if (a.dim() != 2) throw InputError("m2_membership: need a 2x2 matrix");
    const BlochCoordinates c = bloch_coordinates(a);
    if (c.m.norm() <= tol * std::max(1.0, a.norm())) return {Verdict::inside, kInf};
    return k.classify_direction(c.m, tol);
}

bool m2_dual_cone_test(const BlochRegion& k, const Vec3& d, double tol, int samples) {
    if (d.norm() < 1e-15) return true;
    return k.min_dot(d, samples) >= -tol;
}

}  // namespace isocone
