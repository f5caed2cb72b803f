#include "blowuplab/polynomial.hpp"

#include "blowuplab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace blowuplab {

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

bool same_ring(const RingPtr &a, const RingPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

std::uint32_t total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexOrder::operator()(const Exponents &a, const Exponents &b) const {
  const auto da = blowuplab::total_degree(a);
  const auto db = blowuplab::total_degree(b);
  if (da != db)
    return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_)
    throw StructuralError("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, const Rational &constant) : Polynomial(std::move(ring)) {
  add_term(Exponents(ring_->size(), 0), constant);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size())
    throw DomainError("variable index " + std::to_string(index) + " out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exponents, const Rational &coefficient) {
  Polynomial p(std::move(ring));
  if (exponents.size() != p.ring_->size())
    throw StructuralError("exponent vector length does not match ring");
  p.add_term(exponents, coefficient);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && blowuplab::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

Rational Polynomial::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : blowuplab::total_degree(terms_.rbegin()->first);
}

std::uint32_t Polynomial::valuation(std::size_t var) const {
  if (terms_.empty())
    throw DomainError("valuation of the zero polynomial");
  std::uint32_t v = UINT32_MAX;
  for (const auto &[e, c] : terms_)
    v = std::min(v, e.at(var));
  return v;
}

Polynomial Polynomial::coefficient_of_power(std::size_t var, std::uint32_t power) const {
  Polynomial out(ring_);
  for (const auto &[e, c] : terms_) {
    if (e.at(var) != power)
      continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_by_power(std::size_t var, std::uint32_t power) const {
  Polynomial out(ring_);
  for (const auto &[e, c] : terms_) {
    if (e.at(var) < power)
      return std::nullopt;
    Exponents f = e;
    f[var] -= power;
    out.add_term(f, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size())
    throw StructuralError("evaluation point has wrong number of coordinates");
  Rational sum = 0;
  for (const auto &[e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k)
        term *= point[i];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial> &images, const RingPtr &target) const {
  if (images.size() != ring_->size())
    throw StructuralError("substitution needs one image per variable");
  for (const auto &img : images)
    if (!same_ring(img.ring(), target))
      throw StructuralError("substitution images live in different rings");

  // powers[i][k] = images[i]^k, built on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial & {
    auto &cache = powers[i];
    if (cache.empty())
      cache.emplace_back(target, Rational(1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial out(target);
  for (const auto &[e, c] : terms_) {
    Polynomial term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::rename(const RingPtr &target) const {
  if (target->size() != ring_->size())
    throw StructuralError("rename requires rings of equal size");
  Polynomial out(target);
  out.terms_ = terms_;
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(ring_);
  for (const auto &[e, c] : terms_) {
    if (e.at(var) == 0)
      continue;
    Exponents f = e;
    f[var] -= 1;
    out.add_term(f, c * Rational(e[var]));
  }
  return out;
}

void Polynomial::check_ring(const Polynomial &other) const {
  if (!same_ring(ring_, other.ring_))
    throw StructuralError("polynomials belong to different rings");
}

void Polynomial::add_term(const Exponents &e, const Rational &c) {
  if (blowuplab::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (blowuplab::is_zero(it->second))
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  check_ring(other);
  for (const auto &[e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  check_ring(other);
  for (const auto &[e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  Exponents e(a.ring_->size());
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) { return *this = *this * other; }

Polynomial &Polynomial::operator*=(const Rational &scalar) {
  if (blowuplab::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!monomial.empty())
        monomial += "*";
      monomial += ring_->name(i);
      if (e[i] > 1)
        monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty())
      out += blowuplab::to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += blowuplab::to_string(magnitude) + "*" + monomial;
  }
  return out;
}

Polynomial pow(const Polynomial &base, unsigned exponent) {
  Polynomial result(base.ring(), Rational(1));
  for (unsigned k = 0; k < exponent; ++k)
    result *= base;
  return result;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const RingPtr &ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  Polynomial expression() {
    skip_space();
    Polynomial sum(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-')
      negate = text_[pos_++] == '-';
    Polynomial t = term();
    sum += negate ? -t : t;
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-')
        return sum;
      negate = text_[pos_++] == '-';
      t = term();
      sum += negate ? -t : t;
    }
  }

  Polynomial term() {
    Polynomial product = factor();
    for (;;) {
      skip_space();
      if (peek() != '*')
        return product;
      ++pos_;
      product *= factor();
    }
  }

  Polynomial factor() {
    skip_space();
    Polynomial base(ring_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = expression();
      skip_space();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Polynomial(ring_, number());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '~'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = ring_->index_of(name);
      if (!index)
        fail("unknown variable '" + name + "'");
      base = Polynomial::variable(ring_, *index);
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'");
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent after '^'");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail("floating-point literals are not allowed");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError &e) {
      fail(e.what());
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 1, pos_ + 1); }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr &ring) { return PolyParser(text, ring).parse(); }

} // namespace blowuplab
