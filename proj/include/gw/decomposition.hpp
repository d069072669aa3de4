#pragma once

// Reductive triple decompositions g = k + m1 + m2 + m3.

#include <array>
#include <string>
#include <vector>

#include "gw/lie_algebra.hpp"

namespace gw {

enum class Part { k, m, m1, m2, m3 };

const char* to_string(Part p);

/// Index sets carving the basis of an algebra into k, m1, m2, m3.
class SpaceDescriptor {
 public:
  /// Throws Error(InvalidDescriptor) unless the four sets partition the basis.
  SpaceDescriptor(std::string name, AlgebraPtr algebra, std::vector<std::size_t> k, std::vector<std::size_t> m1,
                  std::vector<std::size_t> m2, std::vector<std::size_t> m3, bool user_supplied = false);

  const std::string& name() const { return name_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  /// Basis indices of a part, ascending; Part::m lists m1, then m2, then m3.
  const std::vector<std::size_t>& indices(Part p) const;
  /// 0 for k, 1..3 for m1..m3.
  int module_of(std::size_t basis_index) const { return module_of_[basis_index]; }
  std::size_t dim_k() const { return k_.size(); }
  std::size_t dim_m(int i) const { return modules_.at(static_cast<std::size_t>(i - 1)).size(); }

  /// Descriptors loaded from user files carry no irreducibility guarantee.
  bool user_supplied() const { return user_supplied_; }

 private:
  std::string name_;
  AlgebraPtr algebra_;
  std::vector<std::size_t> k_;
  std::array<std::vector<std::size_t>, 3> modules_;
  std::vector<std::size_t> m_;
  std::vector<int> module_of_;
  bool user_supplied_ = false;
};

struct Violation {
  /// One of: b_orthogonality, subalgebra, reductivity, module_invariance, wallach.
  std::string condition;
  std::size_t a = 0;
  std::size_t b = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  /// Always false: module irreducibility is not checked algorithmically.
  bool irreducibility_checked = false;
  /// Set for user-supplied descriptors.
  bool irreducibility_warning = false;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive basis-pair check of B-orthogonality of the blocks,
/// [k,k] in k, [k,m] in m, [k,mi] in mi and [mi,mi] in k.
VerificationReport verify_space(const SpaceDescriptor& d);

/// Coefficient masking. Throws Error(AlgebraMismatch).
template <class S>
AlgebraVector<S> project(const AlgebraVector<S>& v, const SpaceDescriptor& d, Part part) {
  if (v.algebra_ptr() != d.algebra_ptr()) {
    throw Error(ErrorCode::AlgebraMismatch, "vector is not over the algebra of space " + d.name());
  }
  AlgebraVector<S> out(v.algebra_ptr());
  for (std::size_t i : d.indices(part)) out[i] = v[i];
  return out;
}

/// [ijk] values, indices 1..3.
class TripleSymbolTable {
 public:
  const Rational& operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }
  Rational& operator()(int i, int j, int k) { return values_[index(i, j, k)]; }

 private:
  static std::size_t index(int i, int j, int k) {
    return static_cast<std::size_t>((i - 1) * 9 + (j - 1) * 3 + (k - 1));
  }
  std::array<Rational, 27> values_{};
};

/// Sum over B-orthonormal module bases of B([u, v], w)^2, evaluated on the
/// given (possibly unnormalized) bases through the inverse Gram blocks, so
/// no square roots are needed.
TripleSymbolTable triple_symbols(const SpaceDescriptor& d);

}  // namespace gw
