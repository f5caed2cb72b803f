#include "blowuplab/lie_algebra.hpp"

#include "blowuplab/errors.hpp"

#include <mutex>
#include <optional>

namespace blowuplab {

struct LieAlgebra::Cache {
  std::once_flag jacobi_once;
  std::vector<JacobiViolation> jacobi;
};

LieAlgebra::LieAlgebra(std::string name, int dimension, std::vector<Rational> constants)
    : name_(std::move(name)), n_(dimension), c_(std::move(constants)), cache_(std::make_shared<Cache>()) {
  if (n_ < 1 || n_ > 32)
    throw DomainError("Lie algebra dimension must lie in [1, 32]");
  if (c_.size() != static_cast<std::size_t>(n_) * n_ * n_)
    throw StructuralError("structure constant table has wrong size");
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (c_[index(i, j, k)] != -c_[index(j, i, k)])
          throw DomainError("structure constants are not antisymmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
}

LieAlgebra LieAlgebra::from_brackets(std::string name, int dimension, const std::vector<BracketEntry> &entries) {
  if (dimension < 1 || dimension > 32)
    throw DomainError("Lie algebra dimension must lie in [1, 32]");
  const auto n = static_cast<std::size_t>(dimension);
  std::vector<Rational> c(n * n * n);
  for (const auto &e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dimension || e.j >= dimension || e.k >= dimension)
      throw DomainError("bracket index out of range");
    if (e.i >= e.j)
      throw DomainError("bracket entries must have i < j");
    c[(e.i * n + e.j) * n + e.k] += e.value;
    c[(e.j * n + e.i) * n + e.k] -= e.value;
  }
  return LieAlgebra(std::move(name), dimension, std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::string name, int dimension) {
  const auto n = static_cast<std::size_t>(dimension);
  return LieAlgebra(std::move(name), dimension, std::vector<Rational>(n * n * n));
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (!is_zero(constant(i, j, k)))
          out.push_back({i, j, k, constant(i, j, k)});
  return out;
}

RationalVector LieAlgebra::bracket(const RationalVector &x, const RationalVector &y) const {
  if (x.size() != static_cast<std::size_t>(n_) || y.size() != static_cast<std::size_t>(n_))
    throw StructuralError("bracket operands have wrong dimension");
  RationalVector out(n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(x[i]))
      continue;
    for (int j = 0; j < n_; ++j) {
      if (is_zero(y[j]))
        continue;
      const Rational w = x[i] * y[j];
      for (int k = 0; k < n_; ++k)
        out[k] += w * constant(i, j, k);
    }
  }
  return out;
}

RationalMatrix LieAlgebra::ad(const RationalVector &x) const {
  RationalMatrix m(n_, n_);
  for (int j = 0; j < n_; ++j) {
    RationalVector bj(n_);
    bj[j] = 1;
    const auto col = bracket(x, bj);
    for (int k = 0; k < n_; ++k)
      m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto &c : c_)
    if (!is_zero(c))
      return false;
  return true;
}

const std::vector<JacobiViolation> &LieAlgebra::jacobi_violations() const {
  std::call_once(cache_->jacobi_once, [this] { cache_->jacobi = jacobi_check(*this); });
  return cache_->jacobi;
}

void LieAlgebra::validate() const {
  const auto &violations = jacobi_violations();
  if (violations.empty())
    return;
  std::string msg = "Jacobi identity violated for triples";
  for (const auto &v : violations)
    msg += " (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ")";
  throw JacobiError(msg);
}

LieAlgebra LieAlgebra::change_basis(const RationalMatrix &basis, std::string name) const {
  if (basis.rows() != static_cast<std::size_t>(n_) || basis.cols() != static_cast<std::size_t>(n_))
    throw StructuralError("basis matrix has wrong size");
  const RationalMatrix inv = inverse(basis);
  const auto n = static_cast<std::size_t>(n_);
  std::vector<Rational> c(n * n * n);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const auto old = bracket(basis.column(i), basis.column(j));
      const auto coords = inv * old;
      for (int k = 0; k < n_; ++k)
        c[(i * n + j) * n + k] = coords[k];
    }
  return LieAlgebra(name.empty() ? name_ : std::move(name), n_, std::move(c));
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra &algebra) {
  const int n = algebra.dimension();
  auto basis = [n](int i) {
    RationalVector v(n);
    v[i] = 1;
    return v;
  };
  std::vector<JacobiViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto bi = basis(i), bj = basis(j), bk = basis(k);
        auto sum = algebra.bracket(algebra.bracket(bi, bj), bk);
        const auto t2 = algebra.bracket(algebra.bracket(bj, bk), bi);
        const auto t3 = algebra.bracket(algebra.bracket(bk, bi), bj);
        for (int a = 0; a < n; ++a)
          sum[a] += t2[a] + t3[a];
        if (!is_zero_vector(sum))
          out.push_back({i, j, k, std::move(sum)});
      }
  return out;
}

CeForm covector_form(const RationalVector &xi) { return CeForm::linear(xi, RationalContext{}); }

CeForm ce_differential(const LieAlgebra &algebra, const CeForm &form) {
  const int n = algebra.dimension();
  if (form.dimension() != n)
    throw StructuralError("form dimension does not match the Lie algebra");

  // d theta^k = -sum_{i<j} c(i,j,k) theta^i ^ theta^j
  std::vector<CeForm> d_generator;
  d_generator.reserve(n);
  for (int k = 0; k < n; ++k) {
    CeForm d(n, RationalContext{});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        d.add_term((Blade{1} << i) | (Blade{1} << j), -algebra.constant(i, j, k));
    d_generator.push_back(std::move(d));
  }

  CeForm out(n, RationalContext{});
  for (const auto &[blade, coeff] : form.terms()) {
    const auto indices = blade_indices(blade);
    // Leibniz: sum_r (-1)^r theta^{i_1..i_{r-1}} ^ d theta^{i_r} ^ theta^{i_{r+1}..}
    for (std::size_t r = 0; r < indices.size(); ++r) {
      CeForm left = CeForm::scalar(n, Rational(1));
      for (std::size_t s = 0; s < r; ++s)
        left = wedge(left, CeForm::basis(n, indices[s], RationalContext{}));
      CeForm right = CeForm::scalar(n, Rational(1));
      for (std::size_t s = r + 1; s < indices.size(); ++s)
        right = wedge(right, CeForm::basis(n, indices[s], RationalContext{}));
      CeForm term = wedge(wedge(left, d_generator[indices[r]]), right);
      const Rational sign = (r % 2 == 0) ? coeff : Rational(-coeff);
      out += term.scaled(sign);
    }
  }
  return out;
}

RationalMatrix d_xi_matrix(const LieAlgebra &algebra, const RationalVector &xi) {
  const int n = algebra.dimension();
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k)
        s += xi[k] * algebra.constant(i, j, k);
      a(i, j) = -s;
    }
  return a;
}

namespace {

void require_nonzero_covector(const LieAlgebra &algebra, const RationalVector &xi) {
  if (xi.size() != static_cast<std::size_t>(algebra.dimension()))
    throw StructuralError("covector length does not match the Lie algebra dimension");
  if (is_zero_vector(xi))
    throw DomainError("covector must be nonzero");
  algebra.validate();
}

} // namespace

GradedForm<Polynomial> symbolic_xi_wedge_dxi(const LieAlgebra &algebra) {
  algebra.validate();
  const int n = algebra.dimension();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    names.push_back("xi" + std::to_string(i));
  const RingPtr ring = make_ring(names);
  GradedForm<Polynomial> out(n, ring);
  for (int a = 0; a < n; ++a) {
    const CeForm theta_a = CeForm::basis(n, a, RationalContext{});
    for (int b = 0; b < n; ++b) {
      const CeForm piece = wedge(theta_a, ce_differential(algebra, CeForm::basis(n, b, RationalContext{})));
      const Polynomial monomial = Polynomial::variable(ring, a) * Polynomial::variable(ring, b);
      for (const auto &[blade, c] : piece.terms())
        out.add_term(blade, monomial * c);
    }
  }
  return out;
}

int height_by_wedge(const LieAlgebra &algebra, const RationalVector &xi) {
  require_nonzero_covector(algebra, xi);
  const CeForm x = covector_form(xi);
  const CeForm dx = ce_differential(algebra, x);
  // xi ^ (d xi)^(k+1) = (xi ^ (d xi)^k) ^ d xi, so iterate until it vanishes.
  CeForm current = x;
  int k = 0;
  for (;;) {
    CeForm next = wedge(current, dx);
    if (next.is_zero())
      return k;
    current = std::move(next);
    ++k;
  }
}

int height_by_rank(const LieAlgebra &algebra, const RationalVector &xi) {
  require_nonzero_covector(algebra, xi);
  const int n = algebra.dimension();
  RationalMatrix row(1, n);
  for (int i = 0; i < n; ++i)
    row(0, i) = xi[i];
  const auto kernel = kernel_basis(row);
  const RationalMatrix a = d_xi_matrix(algebra, xi);
  RationalMatrix restricted(kernel.size(), kernel.size());
  for (std::size_t p = 0; p < kernel.size(); ++p) {
    const auto ak = a * kernel[p];
    for (std::size_t q = 0; q < kernel.size(); ++q) {
      // kernel[q]^T A kernel[p] up to transpose; rank is unaffected
      Rational s = 0;
      for (int i = 0; i < n; ++i)
        s += kernel[q][i] * ak[i];
      restricted(q, p) = s;
    }
  }
  const auto r = rank(restricted);
  if (r % 2 != 0)
    throw InternalError("restricted d xi has odd rank");
  return static_cast<int>(r / 2);
}

int height(const LieAlgebra &algebra, const RationalVector &xi) {
  const int by_wedge = height_by_wedge(algebra, xi);
  const int by_rank = height_by_rank(algebra, xi);
  if (by_wedge != by_rank)
    throw InternalError("height mismatch at " + to_string(xi) + ": wedge " + std::to_string(by_wedge) + ", rank " +
                        std::to_string(by_rank));
  return by_wedge;
}

ElementType element_type(const LieAlgebra &algebra, const RationalVector &xi) {
  const int k = height(algebra, xi);
  const CeForm dx = ce_differential(algebra, covector_form(xi));
  return wedge_power(dx, k + 1).is_zero() ? ElementType::One : ElementType::Two;
}

int coadjoint_orbit_dim(const LieAlgebra &algebra, const RationalVector &xi) {
  require_nonzero_covector(algebra, xi);
  return static_cast<int>(rank(d_xi_matrix(algebra, xi)));
}

bool radial_in_orbit(const LieAlgebra &algebra, const RationalVector &xi) {
  require_nonzero_covector(algebra, xi);
  // (ad*_{b_i} xi)(b_j) = -xi([b_i, b_j]) = A(i, j): the tangent space of the
  // orbit is the row space of A, which equals its column space (A skew).
  return in_column_span(d_xi_matrix(algebra, xi), xi);
}

int cartan_class(const LieAlgebra &algebra, const RationalVector &xi) {
  require_nonzero_covector(algebra, xi);
  const int n = algebra.dimension();
  const CeForm x = covector_form(xi);
  const CeForm dx = ce_differential(algebra, x);
  CeForm power = CeForm::scalar(n, Rational(1)); // (d xi)^k
  for (int k = 0; k <= n; ++k) {
    const CeForm next = wedge(power, dx); // (d xi)^(k+1)
    const bool lower_nonzero = !wedge(x, power).is_zero();
    if (lower_nonzero && next.is_zero())
      return 2 * k + 1;
    if (!next.is_zero() && wedge(x, next).is_zero())
      return 2 * k + 2;
    power = next;
  }
  throw InternalError("Cartan class not determined for " + to_string(xi));
}

RationalMatrix killing_form(const LieAlgebra &algebra) {
  algebra.validate();
  const int n = algebra.dimension();
  std::vector<RationalMatrix> ads;
  for (int i = 0; i < n; ++i) {
    RationalVector bi(n);
    bi[i] = 1;
    ads.push_back(algebra.ad(bi));
  }
  RationalMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational trace = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          trace += ads[i](p, q) * ads[j](q, p);
      b(i, j) = trace;
      b(j, i) = trace;
    }
  return b;
}

std::vector<RationalVector> derived_algebra(const LieAlgebra &algebra) {
  algebra.validate();
  const int n = algebra.dimension();
  std::vector<RationalVector> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RationalVector v(n);
      for (int k = 0; k < n; ++k)
        v[k] = algebra.constant(i, j, k);
      if (!is_zero_vector(v))
        rows.push_back(std::move(v));
    }
  return row_space_basis(rows, n);
}

HeightReport height_report(const LieAlgebra &algebra, const RationalVector &xi) {
  HeightReport r;
  r.height = height(algebra, xi);
  r.type = element_type(algebra, xi);
  r.cartan_class = cartan_class(algebra, xi);
  r.orbit_dim = coadjoint_orbit_dim(algebra, xi);
  r.radial_in_orbit = radial_in_orbit(algebra, xi);

  const int type = static_cast<int>(r.type);
  const bool class_ok = r.cartan_class == 2 * r.height + type;
  const bool orbit_ok = r.orbit_dim == 2 * r.height + (r.type == ElementType::Two ? 2 : 0);
  const bool radial_ok = r.radial_in_orbit == (r.type == ElementType::Two);
  if (!class_ok || !orbit_ok || !radial_ok)
    throw InternalError("inconsistent height report at " + to_string(xi) + ": height " + std::to_string(r.height) +
                        ", type " + std::to_string(type) + ", class " + std::to_string(r.cartan_class) + ", orbit " +
                        std::to_string(r.orbit_dim) + ", radial " + (r.radial_in_orbit ? "yes" : "no"));
  return r;
}

} // namespace blowuplab
