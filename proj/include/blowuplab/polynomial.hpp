#pragma once

#include "blowuplab/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blowuplab {

/// Ordered list of variable names. Two rings are compatible iff their name
/// lists are equal.
class PolyRing {
public:
  explicit PolyRing(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing &, const PolyRing &) = default;

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr &a, const RingPtr &b);

using Exponents = std::vector<std::uint32_t>;

/// Graded order: lower total degree first; within a degree, lexicographically
/// larger exponent vectors first (x1 > x2 > ...). Iterating a polynomial
/// therefore yields "1 + x1 + x2 + x1^2 + x1*x2 + ...".
struct GradedLexOrder {
  bool operator()(const Exponents &a, const Exponents &b) const;
};

std::uint32_t total_degree(const Exponents &e);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficients are stored, and every exponent vector has
/// exactly ring->size() entries.
class Polynomial {
public:
  using Terms = std::map<Exponents, Rational, GradedLexOrder>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Rational &constant);

  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Exponents exponents, const Rational &coefficient);

  const RingPtr &ring() const noexcept { return ring_; }
  const Terms &terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Exponents &e) const;
  std::uint32_t total_degree() const;

  /// Smallest exponent of variable `var` over all terms (the var-adic
  /// valuation). Precondition: not zero.
  std::uint32_t valuation(std::size_t var) const;

  /// Terms whose exponent of `var` is exactly `power`, with that variable
  /// removed (set to exponent zero).
  Polynomial coefficient_of_power(std::size_t var, std::uint32_t power) const;

  /// Exact division by var^power; nullopt if some term has a smaller exponent.
  std::optional<Polynomial> divide_by_power(std::size_t var, std::uint32_t power) const;

  /// Evaluation at a point given for every ring variable.
  Rational evaluate(std::span<const Rational> point) const;

  /// Ring homomorphism into images.front().ring(): variable i maps to images[i].
  Polynomial substitute(const std::vector<Polynomial> &images, const RingPtr &target) const;

  /// Same coefficients, reinterpreted over an isomorphic ring with other
  /// variable names (size must match).
  Polynomial rename(const RingPtr &target) const;

  /// d/dx_var
  Polynomial derivative(std::size_t var) const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Rational &scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
  friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial &a, const Polynomial &b);

  /// Canonical text, e.g. "1 + x~2^2 + x~3^2", "-1/2*x1*y1", "0".
  std::string to_string() const;

private:
  void check_ring(const Polynomial &other) const;
  void add_term(const Exponents &e, const Rational &c);

  RingPtr ring_;
  Terms terms_;
};

Polynomial pow(const Polynomial &base, unsigned exponent);

/// Parses expressions such as "1 + y1^2", "2*y1*y2 - 3/2", "(y1 - 1)^2" over
/// the given ring. Numbers must be integers or p/q (no decimals).
Polynomial parse_polynomial(std::string_view text, const RingPtr &ring);

} // namespace blowuplab
