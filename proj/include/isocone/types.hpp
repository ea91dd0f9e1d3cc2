#pragma once

// Shared scalar types, tolerance policy and error taxonomy used across the
// library.  All dense linear algebra is carried by Eigen complex matrices;
// dimensions stay at desk scale (<= ~64).

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace isocone {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Vec3 = Eigen::Vector3d;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Single tolerance value threaded through all modules.  Comparisons use the
// absolute tolerance scaled by max(1, scale) where scale is a norm of the
// operands involved.
struct ToleranceConfig {
    double atol = 1e-9;

    double scaled(double scale) const { return atol * std::max(1.0, scale); }
};

// Three-valued membership verdict.  The sets we decide are closed; points
// within tolerance of the decision surface are reported as boundary.
enum class Verdict { inside, outside, boundary };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::inside: return "inside";
        case Verdict::outside: return "outside";
        default: return "boundary";
    }
}

// Verdict plus the signed slack of the binding constraint (positive inside).
// Constraints that cannot bind contribute +inf.
struct MembershipResult {
    Verdict verdict = Verdict::boundary;
    double margin = 0.0;
};

inline MembershipResult classify_margin(double margin, double tol) {
    if (margin > tol) return {Verdict::inside, margin};
    if (margin < -tol) return {Verdict::outside, margin};
    return {Verdict::boundary, margin};
}

// Error taxonomy.
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class FunctionDomainError : public std::domain_error {
  public:
    explicit FunctionDomainError(const std::string& what) : std::domain_error(what) {}
};

class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class AmbiguityError : public std::runtime_error {
  public:
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateLatticeError : public std::runtime_error {
  public:
    explicit DegenerateLatticeError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedMorphismError : public std::runtime_error {
  public:
    explicit UnsupportedMorphismError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isocone
