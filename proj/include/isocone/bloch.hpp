#pragma once

// Geometry of M_2 cones: geodesically convex regions of the Bloch sphere
// (caps and hemisphere-intersection polygons), membership of 2x2 hermitians
// and the dual-cone test on Bloch vectors.

#include "isocone/hermitian.hpp"
#include "isocone/types.hpp"

#include <vector>

namespace isocone {

// Bloch decomposition a = (tr a / 2) 1 + m . sigma of a 2x2 hermitian.
struct BlochCoordinates {
    double trace_half;  // tr a / 2
    Vec3 m;             // real 3-vector
};

BlochCoordinates bloch_coordinates(const Hermitian& a);

// m . sigma as a hermitian matrix.
Hermitian pauli_vector(const Vec3& m);

// Rank-1 projector (1 + d.sigma)/2 for a unit direction d.
Hermitian bloch_projector(const Vec3& d);

// SO(3) rotation induced on Bloch vectors by conjugation with a 2x2 unitary:
// R(u) d . sigma = u (d . sigma) u*.
Eigen::Matrix3d bloch_rotation(const Mat& u);

// Compact geodesically convex subset of the unit sphere with nonempty
// relative interior.  Caps keep angle <= pi/2 (larger caps are the whole
// sphere once geodesically hulled; construct those as a full inner cone).
// Polygons are intersections of closed hemispheres given by unit normals.
class BlochRegion {
  public:
    enum class Kind { cap, polygon };

    static BlochRegion cap(const Vec3& center, double angle);
    static BlochRegion polygon(std::vector<Vec3> normals);

    Kind kind() const { return kind_; }
    const Vec3& center() const { return center_; }
    double angle() const { return angle_; }
    const std::vector<Vec3>& normals() const { return normals_; }
    // false iff some pair d, -d both belongs to the region (only possible on
    // the boundary, e.g. the equator of a hemisphere)
    bool antipode_free() const { return antipode_free_; }

    // Signed containment margin for a unit direction: angle units for caps,
    // hemisphere dot-product units for polygons.
    double direction_margin(const Vec3& d) const;
    MembershipResult classify_direction(const Vec3& d, double tol) const;

    // A point with maximal containment margin, and that margin.
    Vec3 interior_point() const { return interior_point_; }
    double interior_margin() const { return interior_margin_; }

    // min over n in K of d . n  (exact closed form for caps; discretized
    // boundary plus vertices for polygons, sup-gap <= |d| * pi / samples).
    double min_dot(const Vec3& d, int samples = 256) const;

    BlochRegion rotated(const Eigen::Matrix3d& r) const;

  private:
    BlochRegion() = default;
    Kind kind_ = Kind::cap;
    Vec3 center_ = Vec3::UnitZ();
    double angle_ = 0.0;
    std::vector<Vec3> normals_;
    bool antipode_free_ = true;
    Vec3 interior_point_ = Vec3::UnitZ();
    double interior_margin_ = 0.0;
};

// Membership of a 2x2 hermitian in the cone R+.K + R.1: scalars are inside,
// otherwise the Bloch direction of the traceless part must lie in K.
MembershipResult m2_membership(const BlochRegion& k, const Hermitian& a, double tol);

// True iff min over n in K of d.n >= -tol; d = 0 is accepted.
bool m2_dual_cone_test(const BlochRegion& k, const Vec3& d, double tol, int samples = 256);

}  // namespace isocone
