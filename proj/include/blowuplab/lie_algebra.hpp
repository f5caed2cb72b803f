#pragma once

#include "blowuplab/exterior.hpp"
#include "blowuplab/linalg.hpp"
#include "blowuplab/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace blowuplab {

using CeForm = GradedForm<Rational>;

/// One nonzero structure constant [b_i, b_j] = ... + value * b_k + ...,
/// 0-based, with i < j. The entry for (j, i) is implied.
struct BracketEntry {
  int i;
  int j;
  int k;
  Rational value;
};

/// Cyclic Jacobi sum [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] != 0.
struct JacobiViolation {
  int i;
  int j;
  int k;
  RationalVector defect;
};

/// Finite-dimensional real Lie algebra given by rational structure constants
/// c(i,j,k) with [b_i, b_j] = sum_k c(i,j,k) b_k.
///
/// Antisymmetry is checked on construction. The Jacobi identity is checked on
/// first request and cached; every Lie-theoretic query (height, Killing form,
/// ...) calls validate() first. The CE differential and jacobi_check itself
/// also work on tables that violate Jacobi, so both directions of
/// "d^2 = 0 iff Jacobi" can be tested.
class LieAlgebra {
public:
  /// Dense constants indexed (i * n + j) * n + k.
  LieAlgebra(std::string name, int dimension, std::vector<Rational> constants);

  static LieAlgebra from_brackets(std::string name, int dimension, const std::vector<BracketEntry> &entries);
  static LieAlgebra abelian(std::string name, int dimension);

  const std::string &name() const noexcept { return name_; }
  int dimension() const noexcept { return n_; }

  const Rational &constant(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// Nonzero entries with i < j in (i, j, k) order.
  std::vector<BracketEntry> brackets() const;

  RationalVector bracket(const RationalVector &x, const RationalVector &y) const;

  /// Matrix of ad_x in the standard basis: column j is [x, b_j].
  RationalMatrix ad(const RationalVector &x) const;

  bool is_abelian() const;

  const std::vector<JacobiViolation> &jacobi_violations() const;

  /// Throws JacobiError listing the violating triples.
  void validate() const;

  /// Same algebra in the basis b'_j = sum_a basis(a, j) b_a (columns of an
  /// invertible matrix).
  LieAlgebra change_basis(const RationalMatrix &basis, std::string name = {}) const;

  LieAlgebra renamed(std::string name) const;

  /// Structural equality (name ignored).
  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  struct Cache;

  std::string name_;
  int n_;
  std::vector<Rational> c_;
  std::shared_ptr<Cache> cache_;
};

/// All violating triples i < j < k (0-based); empty iff the Jacobi identity
/// holds.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra &algebra);

/// Chevalley-Eilenberg differential on the exterior algebra of g*, with
/// (d xi)(X, Y) = -xi([X, Y]) on 1-forms, extended as a degree +1
/// derivation.
CeForm ce_differential(const LieAlgebra &algebra, const CeForm &form);

/// Covector xi as a degree-1 form.
CeForm covector_form(const RationalVector &xi);

/// xi ^ d xi for a generic covector: the 3-form whose coefficients are
/// quadratic polynomials in xi1..xin (ring names "xi1", ...).
GradedForm<Polynomial> symbolic_xi_wedge_dxi(const LieAlgebra &algebra);

/// Skew matrix A(i, j) = (d xi)(b_i, b_j) = -xi([b_i, b_j]).
RationalMatrix d_xi_matrix(const LieAlgebra &algebra, const RationalVector &xi);

enum class ElementType { One = 1, Two = 2 };

/// Height by iterated wedge: the k with xi ^ (d xi)^k != 0 and
/// xi ^ (d xi)^(k+1) = 0. Cross-checked against height_by_rank; a mismatch
/// raises InternalError.
int height(const LieAlgebra &algebra, const RationalVector &xi);

int height_by_wedge(const LieAlgebra &algebra, const RationalVector &xi);

/// Half the rank of d xi restricted to ker xi.
int height_by_rank(const LieAlgebra &algebra, const RationalVector &xi);

/// One iff (d xi)^(k+1) = 0 for k = height(xi).
ElementType element_type(const LieAlgebra &algebra, const RationalVector &xi);

/// rank of d xi.
int coadjoint_orbit_dim(const LieAlgebra &algebra, const RationalVector &xi);

/// xi lies in the image of X -> ad*_X xi (tangent space of the orbit).
bool radial_in_orbit(const LieAlgebra &algebra, const RationalVector &xi);

/// Cartan class read directly from which of xi ^ (d xi)^k and (d xi)^(k+1)
/// vanish, without going through height or type.
int cartan_class(const LieAlgebra &algebra, const RationalVector &xi);

/// B(i, j) = trace(ad_{b_i} ad_{b_j}).
RationalMatrix killing_form(const LieAlgebra &algebra);

/// Row-reduced basis of [g, g].
std::vector<RationalVector> derived_algebra(const LieAlgebra &algebra);

struct HeightReport {
  int height = 0;
  ElementType type = ElementType::One;
  int cartan_class = 1;
  int orbit_dim = 0;
  bool radial_in_orbit = false;
};

/// All of the above for one covector; the relations
///   cartan_class = 2 height + type, orbit_dim = 2 height (+2 if type Two),
///   radial_in_orbit iff type Two
/// are checked before returning (InternalError otherwise).
HeightReport height_report(const LieAlgebra &algebra, const RationalVector &xi);

} // namespace blowuplab
