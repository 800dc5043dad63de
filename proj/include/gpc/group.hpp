#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gpc/errors.hpp"

namespace gpc {

/// Default tolerance attached to a group spec. Used by validating
/// constructors and by tolerance-based element equality.
inline constexpr double kDefaultTolerance = 1e-9;

enum class GroupKind : std::uint8_t { RPlus, GL, SE2, SE3, Product };

/// Describes a coefficient group: the multiplicative reals, invertible
/// matrices of a fixed size, planar or spatial rigid motions, or a finite
/// direct product of such groups.
///
/// Specs are value types. Structural equality ignores the tolerance, so two
/// specs that describe the same group are compatible even if they carry
/// different numerical settings.
class GroupSpec {
 public:
  static GroupSpec rplus(double tolerance = kDefaultTolerance);
  static GroupSpec gl(int dim, double tolerance = kDefaultTolerance);
  static GroupSpec se2(double tolerance = kDefaultTolerance);
  static GroupSpec se3(double tolerance = kDefaultTolerance);
  static GroupSpec product(std::vector<GroupSpec> factors,
                           double tolerance = kDefaultTolerance);

  GroupKind kind() const noexcept { return kind_; }
  double tolerance() const noexcept { return tolerance_; }

  /// Matrix size of a GL spec. Throws UnsupportedGroup otherwise.
  int gl_dim() const;

  /// Factor list of a Product spec. Throws UnsupportedGroup otherwise.
  const std::vector<GroupSpec>& factors() const;

  /// Dimension of the rotation/translation blocks: 2 for SE2, 3 for SE3.
  int se_dim() const;

  /// Structural equality; tolerance does not participate.
  friend bool operator==(const GroupSpec& a, const GroupSpec& b);
  friend bool operator!=(const GroupSpec& a, const GroupSpec& b) {
    return !(a == b);
  }

 private:
  GroupSpec(GroupKind kind, int gl_dim, std::vector<GroupSpec> factors,
            double tolerance);

  GroupKind kind_;
  int gl_dim_ = 0;
  std::vector<GroupSpec> factors_;
  double tolerance_;
};

/// Rotation + translation payload of an SE2/SE3 element.
struct RigidMotion {
  Eigen::MatrixXd rotation;     // 2x2 or 3x3, orthogonal with det +1
  Eigen::VectorXd translation;  // matching size
};

/// An element of a coefficient group, tagged with its spec.
///
/// Elements are immutable values: every group operation returns a new
/// element. Validating constructors reject payloads that are not in the
/// group (non-positive reals, singular matrices, non-orthogonal rotation
/// blocks) using the spec tolerance where a numerical check is involved.
class GroupElement {
 public:
  static GroupElement rplus(double value,
                            const GroupSpec& spec = GroupSpec::rplus());
  static GroupElement gl(Eigen::MatrixXd m, const GroupSpec& spec);
  /// Convenience: infers GroupSpec::gl(m.rows()).
  static GroupElement gl(Eigen::MatrixXd m);
  static GroupElement se2(const Eigen::Matrix2d& rotation,
                          const Eigen::Vector2d& translation,
                          const GroupSpec& spec = GroupSpec::se2());
  static GroupElement se3(const Eigen::Matrix3d& rotation,
                          const Eigen::Vector3d& translation,
                          const GroupSpec& spec = GroupSpec::se3());
  static GroupElement product(std::vector<GroupElement> parts,
                              const GroupSpec& spec);
  /// Convenience: infers the product spec from the parts.
  static GroupElement product(std::vector<GroupElement> parts);

  const GroupSpec& spec() const noexcept { return spec_; }
  GroupKind kind() const noexcept { return spec_.kind(); }

  /// Payload accessors; each throws UnsupportedGroup on a kind mismatch.
  double rplus_value() const;
  const Eigen::MatrixXd& matrix() const;
  const RigidMotion& motion() const;
  const std::vector<GroupElement>& parts() const;

 private:
  GroupElement(GroupSpec spec,
               std::variant<double, Eigen::MatrixXd, RigidMotion,
                            std::vector<GroupElement>>
                   payload);

  GroupSpec spec_;
  std::variant<double, Eigen::MatrixXd, RigidMotion, std::vector<GroupElement>>
      payload_;
};

/// Identity element of the group described by spec.
GroupElement identity(const GroupSpec& spec);

/// Group product g * h. Throws SpecMismatch if the specs differ.
GroupElement compose(const GroupElement& g, const GroupElement& h);

GroupElement inverse(const GroupElement& g);

/// Nonnegative distance-to-identity surrogate:
///   RPlus    |ln g|
///   GL       ||g - I||_F + ||g^-1 - I||_F
///   SE2/SE3  ||R - I||_F + |t|
///   Product  sum over the factors
/// Zero exactly at the identity.
double deviation(const GroupElement& g);

/// Group morphism GL(n) -> RPlus, g -> |det g|. Identity on RPlus elements.
/// Throws UnsupportedMorphism for other kinds.
GroupElement det_morphism(const GroupElement& g);

/// Componentwise comparison of payloads within tol (absolute).
bool approx_equal(const GroupElement& g, const GroupElement& h, double tol);
inline bool approx_equal(const GroupElement& g, const GroupElement& h) {
  return approx_equal(g, h, g.spec().tolerance());
}

/// Group-invariant closeness: deviation(g^-1 h) <= tol.
bool close(const GroupElement& g, const GroupElement& h, double tol);

inline bool approx_identity(const GroupElement& g, double tol) {
  return deviation(g) <= tol;
}
inline bool approx_identity(const GroupElement& g) {
  return approx_identity(g, g.spec().tolerance());
}

}  // namespace gpc
