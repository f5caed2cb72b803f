#pragma once

// Sparse exterior algebra over an n-dimensional space (n <= 32).
//
// Basis elements are encoded as bitmasks: bit i set means index i (0-based)
// is present. A GradedForm stores coefficients of dx_I, a GradedVector those
// of e_I. Both may mix degrees.
//
// Multi-insertion follows i_{X^Y} = i_Y i_X: for a blade e_{j1}^...^e_{jp}
// with j1 < ... < jp, i_{e_j1} is applied first.

#include "blowuplab/errors.hpp"
#include "blowuplab/polynomial.hpp"
#include "blowuplab/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace blowuplab {

using Blade = std::uint32_t;

inline int blade_degree(Blade b) { return std::popcount(b); }

std::vector<int> blade_indices(Blade b);
Blade blade_from_indices(const std::vector<int> &indices);

/// Canonical blade order: by degree, then lexicographically by index list.
struct BladeOrder {
  bool operator()(Blade a, Blade b) const;
};

/// Sign of dx_a ^ dx_b relative to dx_{a|b}; 0 if they overlap.
int wedge_sign(Blade a, Blade b);

/// Sign of i_{e_j}(dx_b) relative to dx_{b \ j}; 0 if j is not in b.
int interior_sign(int j, Blade b);

// ---------------------------------------------------------------------------
// Coefficient ring adapters.

struct RationalContext {
  friend bool operator==(RationalContext, RationalContext) { return true; }
};

template <class R> struct CoeffTraits;

template <> struct CoeffTraits<Rational> {
  using Context = RationalContext;
  static Context context_of(const Rational &) { return {}; }
  static Rational zero(Context) { return Rational(0); }
  static Rational one(Context) { return Rational(1); }
  static bool is_zero(const Rational &x) { return blowuplab::is_zero(x); }
  static bool compatible(Context, Context) { return true; }
  static std::string to_string(const Rational &x) { return blowuplab::to_string(x); }
  static bool is_atomic(const Rational &) { return true; }
};

template <> struct CoeffTraits<Polynomial> {
  using Context = RingPtr;
  static Context context_of(const Polynomial &p) { return p.ring(); }
  static Polynomial zero(const Context &ring) { return Polynomial(ring); }
  static Polynomial one(const Context &ring) { return Polynomial(ring, Rational(1)); }
  static bool is_zero(const Polynomial &p) { return p.is_zero(); }
  static bool compatible(const Context &a, const Context &b) { return same_ring(a, b); }
  static std::string to_string(const Polynomial &p) { return p.to_string(); }
  static bool is_atomic(const Polynomial &p) { return p.terms().size() <= 1; }
};

struct FormTag {
  static constexpr const char *symbol = "d";
  static constexpr const char *basis = "x";
};
struct VectorTag {
  static constexpr const char *symbol = "e";
  static constexpr const char *basis = "";
};

/// Element of the exterior algebra with coefficients in R. Canonical: no
/// stored coefficient is zero. Immutable in spirit: operations return new
/// values; the only mutators are add_term/+= used while building.
template <class R, class Tag> class Graded {
public:
  using Traits = CoeffTraits<R>;
  using Context = typename Traits::Context;
  using Terms = std::map<Blade, R, BladeOrder>;

  Graded(int dimension, Context context) : dim_(dimension), ctx_(std::move(context)) {
    if (dimension < 0 || dimension > 32)
      throw StructuralError("exterior algebra dimension must lie in [0, 32]");
  }

  /// Scalar (degree-0) element.
  static Graded scalar(int dimension, const R &value) {
    Graded g(dimension, Traits::context_of(value));
    g.add_term(0, value);
    return g;
  }

  /// Single basis element e_i (vector) or dx_i (form), 0-based.
  static Graded basis(int dimension, int index, const Context &context) {
    Graded g(dimension, context);
    if (index < 0 || index >= dimension)
      throw DomainError("basis index out of range");
    g.add_term(Blade{1} << index, Traits::one(context));
    return g;
  }

  /// Degree-1 element from a coefficient list.
  static Graded linear(const std::vector<R> &coefficients, const Context &context) {
    Graded g(static_cast<int>(coefficients.size()), context);
    for (int i = 0; i < g.dim_; ++i)
      g.add_term(Blade{1} << i, coefficients[i]);
    return g;
  }

  /// dx_1 ^ ... ^ dx_n
  static Graded volume(int dimension, const Context &context) {
    Graded g(dimension, context);
    g.add_term(full_blade(dimension), Traits::one(context));
    return g;
  }

  static Blade full_blade(int dimension) {
    return dimension == 32 ? ~Blade{0} : ((Blade{1} << dimension) - 1);
  }

  int dimension() const noexcept { return dim_; }
  const Context &context() const noexcept { return ctx_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  R coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Traits::zero(ctx_) : it->second;
  }

  /// Degree-k projection.
  Graded component(int degree) const {
    Graded out(dim_, ctx_);
    for (const auto &[b, c] : terms_)
      if (blade_degree(b) == degree)
        out.terms_.emplace(b, c);
    return out;
  }

  /// Highest degree present; -1 for zero.
  int top_degree() const {
    int d = -1;
    for (const auto &[b, c] : terms_)
      d = std::max(d, blade_degree(b));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty())
      return true;
    const int d = blade_degree(terms_.begin()->first);
    for (const auto &[b, c] : terms_)
      if (blade_degree(b) != d)
        return false;
    return true;
  }

  void add_term(Blade b, const R &c) {
    if (b & ~full_blade(dim_))
      throw StructuralError("blade index exceeds dimension");
    if (Traits::is_zero(c))
      return;
    if (!Traits::compatible(ctx_, Traits::context_of(c)))
      throw StructuralError("coefficient belongs to a different ring");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second))
        terms_.erase(it);
    }
  }

  void check_compatible(const Graded &other) const {
    if (dim_ != other.dim_)
      throw StructuralError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
    if (!Traits::compatible(ctx_, other.ctx_))
      throw StructuralError("coefficient ring mismatch");
  }

  Graded &operator+=(const Graded &other) {
    check_compatible(other);
    for (const auto &[b, c] : other.terms_)
      add_term(b, c);
    return *this;
  }

  Graded &operator-=(const Graded &other) {
    check_compatible(other);
    for (const auto &[b, c] : other.terms_)
      add_term(b, -c);
    return *this;
  }

  friend Graded operator+(Graded a, const Graded &b) { return a += b; }
  friend Graded operator-(Graded a, const Graded &b) { return a -= b; }

  Graded operator-() const {
    Graded out = *this;
    for (auto &[b, c] : out.terms_)
      c = -c;
    return out;
  }

  /// Multiply every coefficient by a ring element.
  Graded scaled(const R &factor) const {
    Graded out(dim_, ctx_);
    if (!Traits::compatible(ctx_, Traits::context_of(factor)))
      throw StructuralError("scale factor belongs to a different ring");
    for (const auto &[b, c] : terms_)
      out.add_term(b, c * factor);
    return out;
  }

  Graded scaled(const Rational &factor) const
    requires(!std::is_same_v<R, Rational>)
  {
    Graded out(dim_, ctx_);
    for (const auto &[b, c] : terms_)
      out.add_term(b, c * factor);
    return out;
  }

  /// Apply f to every coefficient (e.g. a ring homomorphism). The result
  /// lives over `target`.
  template <class F> Graded map_coefficients(F &&f, const Context &target) const {
    Graded out(dim_, target);
    for (const auto &[b, c] : terms_)
      out.add_term(b, f(c));
    return out;
  }

  friend bool operator==(const Graded &a, const Graded &b) {
    return a.dim_ == b.dim_ && Traits::compatible(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

  /// Canonical text, blades ordered by degree then index list.
  /// Forms print as "c*dx1^dx3", vectors as "c*e1^e3"; `basis_name`
  /// overrides the variable stem (e.g. "x~").
  std::string to_string(const std::string &basis_name = Tag::basis) const {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto &[b, c] : terms_) {
      std::string blade;
      for (int i : blade_indices(b)) {
        if (!blade.empty())
          blade += "^";
        blade += std::string(Tag::symbol) + basis_name + std::to_string(i + 1);
      }
      std::string coeff = Traits::to_string(c);
      std::string term;
      if (blade.empty())
        term = Traits::is_atomic(c) ? coeff : "(" + coeff + ")";
      else if (coeff == "1")
        term = blade;
      else if (coeff == "-1")
        term = "-" + blade;
      else
        term = (Traits::is_atomic(c) ? coeff : "(" + coeff + ")") + "*" + blade;
      if (first)
        out += term;
      else if (term.front() == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
      first = false;
    }
    return out;
  }

private:
  int dim_;
  Context ctx_;
  Terms terms_;
};

template <class R> using GradedForm = Graded<R, FormTag>;
template <class R> using GradedVector = Graded<R, VectorTag>;

/// Exterior product. Sign from the shuffle permutation of the index sets.
template <class R> GradedForm<R> wedge(const GradedForm<R> &a, const GradedForm<R> &b) {
  a.check_compatible(b);
  GradedForm<R> out(a.dimension(), a.context());
  for (const auto &[ba, ca] : a.terms()) {
    for (const auto &[bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0)
        continue;
      R c = ca * cb;
      out.add_term(ba | bb, s > 0 ? c : R(-c));
    }
  }
  return out;
}

/// Insertion of a vector (degree-1 components of v; other degrees rejected).
template <class R> GradedForm<R> interior(const GradedVector<R> &v, const GradedForm<R> &a) {
  if (v.dimension() != a.dimension())
    throw StructuralError("dimension mismatch in interior product");
  if (!CoeffTraits<R>::compatible(v.context(), a.context()))
    throw StructuralError("coefficient ring mismatch in interior product");
  GradedForm<R> out(a.dimension(), a.context());
  for (const auto &[bv, cv] : v.terms()) {
    if (blade_degree(bv) != 1)
      throw DomainError("interior product expects a degree-1 vector");
    const int j = std::countr_zero(bv);
    for (const auto &[ba, ca] : a.terms()) {
      const int s = interior_sign(j, ba);
      if (s == 0)
        continue;
      R c = cv * ca;
      out.add_term(ba & ~bv, s > 0 ? c : R(-c));
    }
  }
  return out;
}

/// Insertion of a multivector, extended linearly from blades with
/// i_{X^Y} = i_Y i_X.
template <class R> GradedForm<R> multi_interior(const GradedVector<R> &w, const GradedForm<R> &a) {
  if (w.dimension() != a.dimension())
    throw StructuralError("dimension mismatch in interior product");
  if (!CoeffTraits<R>::compatible(w.context(), a.context()))
    throw StructuralError("coefficient ring mismatch in interior product");
  GradedForm<R> out(a.dimension(), a.context());
  for (const auto &[bw, cw] : w.terms()) {
    for (const auto &[ba, ca] : a.terms()) {
      if ((bw & ba) != bw)
        continue;
      int sign = 1;
      Blade current = ba;
      for (int j : blade_indices(bw)) {
        sign *= interior_sign(j, current);
        current &= ~(Blade{1} << j);
      }
      R c = cw * ca;
      out.add_term(current, sign > 0 ? c : R(-c));
    }
  }
  return out;
}

/// e^{i_pi} lambda = sum_{k=0}^{floor(n/2)} (1/k!) i_pi^k lambda.
template <class R> GradedForm<R> exp_interior(const GradedVector<R> &pi, const GradedForm<R> &lambda) {
  for (const auto &[b, c] : pi.terms())
    if (blade_degree(b) != 2)
      throw DomainError("exp_interior expects a bivector");
  GradedForm<R> result = lambda;
  GradedForm<R> term = lambda;
  for (int k = 1; k <= lambda.dimension() / 2; ++k) {
    term = multi_interior(pi, term);
    if (term.is_zero())
      break;
    term = term.scaled(Rational(1, k));
    result += term;
  }
  return result;
}

/// a^k under the wedge product (a^0 = 1).
template <class R> GradedForm<R> wedge_power(const GradedForm<R> &a, int k) {
  auto result = GradedForm<R>::scalar(a.dimension(), CoeffTraits<R>::one(a.context()));
  for (int i = 0; i < k; ++i)
    result = wedge(result, a);
  return result;
}

} // namespace blowuplab
