#include "gpc/group.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gpc {

namespace {

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::RPlus:
      return "rplus";
    case GroupKind::GL:
      return "gl";
    case GroupKind::SE2:
      return "se2";
    case GroupKind::SE3:
      return "se3";
    case GroupKind::Product:
      return "product";
  }
  return "?";
}

void require_same_spec(const GroupSpec& a, const GroupSpec& b,
                       const char* op) {
  if (a != b) {
    throw SpecMismatch(std::string(op) + ": elements belong to different groups (" +
                       kind_name(a.kind()) + " vs " + kind_name(b.kind()) + ")");
  }
}

void check_rotation(const Eigen::MatrixXd& r, int dim, double tol) {
  if (r.rows() != dim || r.cols() != dim) {
    throw NumericalDegeneracy("rotation block has wrong size");
  }
  const Eigen::MatrixXd defect =
      r.transpose() * r - Eigen::MatrixXd::Identity(dim, dim);
  if (defect.cwiseAbs().maxCoeff() > tol) {
    throw NumericalDegeneracy("rotation block is not orthogonal within tolerance");
  }
  if (r.determinant() <= 0.0) {
    throw NumericalDegeneracy("rotation block is orientation-reversing");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

GroupSpec::GroupSpec(GroupKind kind, int gl_dim, std::vector<GroupSpec> factors,
                     double tolerance)
    : kind_(kind),
      gl_dim_(gl_dim),
      factors_(std::move(factors)),
      tolerance_(tolerance) {
  if (!(tolerance_ > 0.0)) {
    throw Error("group tolerance must be positive");
  }
}

GroupSpec GroupSpec::rplus(double tolerance) {
  return GroupSpec(GroupKind::RPlus, 0, {}, tolerance);
}

GroupSpec GroupSpec::gl(int dim, double tolerance) {
  if (dim < 1) {
    throw DimensionError("gl spec requires dim >= 1");
  }
  return GroupSpec(GroupKind::GL, dim, {}, tolerance);
}

GroupSpec GroupSpec::se2(double tolerance) {
  return GroupSpec(GroupKind::SE2, 0, {}, tolerance);
}

GroupSpec GroupSpec::se3(double tolerance) {
  return GroupSpec(GroupKind::SE3, 0, {}, tolerance);
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors, double tolerance) {
  if (factors.empty()) {
    throw Error("product spec requires at least one factor");
  }
  return GroupSpec(GroupKind::Product, 0, std::move(factors), tolerance);
}

int GroupSpec::gl_dim() const {
  if (kind_ != GroupKind::GL) {
    throw UnsupportedGroup("gl_dim: spec is not gl");
  }
  return gl_dim_;
}

const std::vector<GroupSpec>& GroupSpec::factors() const {
  if (kind_ != GroupKind::Product) {
    throw UnsupportedGroup("factors: spec is not a product");
  }
  return factors_;
}

int GroupSpec::se_dim() const {
  if (kind_ == GroupKind::SE2) return 2;
  if (kind_ == GroupKind::SE3) return 3;
  throw UnsupportedGroup("se_dim: spec is not se2/se3");
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case GroupKind::GL:
      return a.gl_dim_ == b.gl_dim_;
    case GroupKind::Product: {
      if (a.factors_.size() != b.factors_.size()) return false;
      for (std::size_t i = 0; i < a.factors_.size(); ++i) {
        if (a.factors_[i] != b.factors_[i]) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// GroupElement: construction
// ---------------------------------------------------------------------------

GroupElement::GroupElement(GroupSpec spec,
                           std::variant<double, Eigen::MatrixXd, RigidMotion,
                                        std::vector<GroupElement>>
                               payload)
    : spec_(std::move(spec)), payload_(std::move(payload)) {}

GroupElement GroupElement::rplus(double value, const GroupSpec& spec) {
  if (spec.kind() != GroupKind::RPlus) {
    throw SpecMismatch("rplus element requires an rplus spec");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveInput("rplus element must be a positive finite real");
  }
  return GroupElement(spec, value);
}

GroupElement GroupElement::gl(Eigen::MatrixXd m, const GroupSpec& spec) {
  if (spec.kind() != GroupKind::GL) {
    throw SpecMismatch("gl element requires a gl spec");
  }
  const int dim = spec.gl_dim();
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError("gl element has wrong matrix size for its spec");
  }
  if (!m.allFinite()) {
    throw NumericalDegeneracy("gl element has non-finite entries");
  }
  if (std::abs(m.determinant()) <= spec.tolerance()) {
    throw NumericalDegeneracy("gl element is singular within tolerance");
  }
  return GroupElement(spec, std::move(m));
}

GroupElement GroupElement::gl(Eigen::MatrixXd m) {
  const int dim = static_cast<int>(m.rows());
  return gl(std::move(m), GroupSpec::gl(dim));
}

GroupElement GroupElement::se2(const Eigen::Matrix2d& rotation,
                               const Eigen::Vector2d& translation,
                               const GroupSpec& spec) {
  if (spec.kind() != GroupKind::SE2) {
    throw SpecMismatch("se2 element requires an se2 spec");
  }
  check_rotation(rotation, 2, spec.tolerance());
  if (!translation.allFinite()) {
    throw NumericalDegeneracy("se2 translation has non-finite entries");
  }
  return GroupElement(spec, RigidMotion{rotation, translation});
}

GroupElement GroupElement::se3(const Eigen::Matrix3d& rotation,
                               const Eigen::Vector3d& translation,
                               const GroupSpec& spec) {
  if (spec.kind() != GroupKind::SE3) {
    throw SpecMismatch("se3 element requires an se3 spec");
  }
  check_rotation(rotation, 3, spec.tolerance());
  if (!translation.allFinite()) {
    throw NumericalDegeneracy("se3 translation has non-finite entries");
  }
  return GroupElement(spec, RigidMotion{rotation, translation});
}

GroupElement GroupElement::product(std::vector<GroupElement> parts,
                                   const GroupSpec& spec) {
  if (spec.kind() != GroupKind::Product) {
    throw SpecMismatch("product element requires a product spec");
  }
  const auto& factors = spec.factors();
  if (parts.size() != factors.size()) {
    throw SpecMismatch("product element has wrong number of parts");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].spec() != factors[i]) {
      throw SpecMismatch("product part does not match its factor spec");
    }
  }
  return GroupElement(spec, std::move(parts));
}

GroupElement GroupElement::product(std::vector<GroupElement> parts) {
  std::vector<GroupSpec> factors;
  factors.reserve(parts.size());
  for (const auto& p : parts) factors.push_back(p.spec());
  return product(std::move(parts), GroupSpec::product(std::move(factors)));
}

// ---------------------------------------------------------------------------
// GroupElement: payload access
// ---------------------------------------------------------------------------

double GroupElement::rplus_value() const {
  if (const double* v = std::get_if<double>(&payload_)) return *v;
  throw UnsupportedGroup("rplus_value: element is not rplus");
}

const Eigen::MatrixXd& GroupElement::matrix() const {
  if (const auto* m = std::get_if<Eigen::MatrixXd>(&payload_)) return *m;
  throw UnsupportedGroup("matrix: element is not gl");
}

const RigidMotion& GroupElement::motion() const {
  if (const auto* m = std::get_if<RigidMotion>(&payload_)) return *m;
  throw UnsupportedGroup("motion: element is not se2/se3");
}

const std::vector<GroupElement>& GroupElement::parts() const {
  if (const auto* p = std::get_if<std::vector<GroupElement>>(&payload_)) {
    return *p;
  }
  throw UnsupportedGroup("parts: element is not a product");
}

// ---------------------------------------------------------------------------
// Group operations
// ---------------------------------------------------------------------------

GroupElement identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::RPlus:
      return GroupElement::rplus(1.0, spec);
    case GroupKind::GL:
      return GroupElement::gl(
          Eigen::MatrixXd::Identity(spec.gl_dim(), spec.gl_dim()), spec);
    case GroupKind::SE2:
      return GroupElement::se2(Eigen::Matrix2d::Identity(),
                               Eigen::Vector2d::Zero(), spec);
    case GroupKind::SE3:
      return GroupElement::se3(Eigen::Matrix3d::Identity(),
                               Eigen::Vector3d::Zero(), spec);
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(spec.factors().size());
      for (const auto& f : spec.factors()) parts.push_back(identity(f));
      return GroupElement::product(std::move(parts), spec);
    }
  }
  throw UnsupportedGroup("identity: unknown group kind");
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  require_same_spec(g.spec(), h.spec(), "compose");
  switch (g.kind()) {
    case GroupKind::RPlus:
      return GroupElement::rplus(g.rplus_value() * h.rplus_value(), g.spec());
    case GroupKind::GL:
      return GroupElement::gl(g.matrix() * h.matrix(), g.spec());
    case GroupKind::SE2:
    case GroupKind::SE3: {
      const RigidMotion& a = g.motion();
      const RigidMotion& b = h.motion();
      const Eigen::MatrixXd r = a.rotation * b.rotation;
      const Eigen::VectorXd t = a.rotation * b.translation + a.translation;
      if (g.kind() == GroupKind::SE2) {
        return GroupElement::se2(r, t, g.spec());
      }
      return GroupElement::se3(r, t, g.spec());
    }
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(g.parts().size());
      for (std::size_t i = 0; i < g.parts().size(); ++i) {
        parts.push_back(compose(g.parts()[i], h.parts()[i]));
      }
      return GroupElement::product(std::move(parts), g.spec());
    }
  }
  throw UnsupportedGroup("compose: unknown group kind");
}

GroupElement inverse(const GroupElement& g) {
  switch (g.kind()) {
    case GroupKind::RPlus:
      return GroupElement::rplus(1.0 / g.rplus_value(), g.spec());
    case GroupKind::GL: {
      Eigen::MatrixXd inv = g.matrix().inverse();
      if (!inv.allFinite()) {
        throw NumericalDegeneracy("inverse: gl element is numerically singular");
      }
      return GroupElement::gl(std::move(inv), g.spec());
    }
    case GroupKind::SE2:
    case GroupKind::SE3: {
      const RigidMotion& m = g.motion();
      const Eigen::MatrixXd rt = m.rotation.transpose();
      const Eigen::VectorXd t = -(rt * m.translation);
      if (g.kind() == GroupKind::SE2) {
        return GroupElement::se2(rt, t, g.spec());
      }
      return GroupElement::se3(rt, t, g.spec());
    }
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(g.parts().size());
      for (const auto& p : g.parts()) parts.push_back(inverse(p));
      return GroupElement::product(std::move(parts), g.spec());
    }
  }
  throw UnsupportedGroup("inverse: unknown group kind");
}

double deviation(const GroupElement& g) {
  switch (g.kind()) {
    case GroupKind::RPlus:
      return std::abs(std::log(g.rplus_value()));
    case GroupKind::GL: {
      const Eigen::MatrixXd& m = g.matrix();
      const int dim = static_cast<int>(m.rows());
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);
      const Eigen::MatrixXd inv = m.inverse();
      if (!inv.allFinite()) {
        throw NumericalDegeneracy("deviation: gl element is numerically singular");
      }
      return (m - eye).norm() + (inv - eye).norm();
    }
    case GroupKind::SE2:
    case GroupKind::SE3: {
      const RigidMotion& m = g.motion();
      const int dim = static_cast<int>(m.rotation.rows());
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);
      return (m.rotation - eye).norm() + m.translation.norm();
    }
    case GroupKind::Product: {
      double total = 0.0;
      for (const auto& p : g.parts()) total += deviation(p);
      return total;
    }
  }
  throw UnsupportedGroup("deviation: unknown group kind");
}

GroupElement det_morphism(const GroupElement& g) {
  switch (g.kind()) {
    case GroupKind::RPlus:
      return g;
    case GroupKind::GL:
      return GroupElement::rplus(std::abs(g.matrix().determinant()),
                                 GroupSpec::rplus(g.spec().tolerance()));
    default:
      throw UnsupportedMorphism("det_morphism is defined on gl and rplus only");
  }
}

bool approx_equal(const GroupElement& g, const GroupElement& h, double tol) {
  if (g.spec() != h.spec()) return false;
  switch (g.kind()) {
    case GroupKind::RPlus:
      return std::abs(g.rplus_value() - h.rplus_value()) <= tol;
    case GroupKind::GL:
      return (g.matrix() - h.matrix()).cwiseAbs().maxCoeff() <= tol;
    case GroupKind::SE2:
    case GroupKind::SE3: {
      const RigidMotion& a = g.motion();
      const RigidMotion& b = h.motion();
      return (a.rotation - b.rotation).cwiseAbs().maxCoeff() <= tol &&
             (a.translation - b.translation).cwiseAbs().maxCoeff() <= tol;
    }
    case GroupKind::Product: {
      for (std::size_t i = 0; i < g.parts().size(); ++i) {
        if (!approx_equal(g.parts()[i], h.parts()[i], tol)) return false;
      }
      return true;
    }
  }
  throw UnsupportedGroup("approx_equal: unknown group kind");
}

bool close(const GroupElement& g, const GroupElement& h, double tol) {
  require_same_spec(g.spec(), h.spec(), "close");
  return deviation(compose(inverse(g), h)) <= tol;
}

}  // namespace gpc
