#include "skit/ordinal.hpp"

#include <cctype>
#include <limits>

#include "skit/error.hpp"

namespace skit {

namespace {

using Coefficient = Ordinal::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  if (a > std::numeric_limits<Coefficient>::max() - b) {
    throw ArithmeticOverflow("ordinal coefficient overflow in addition");
  }
  return a + b;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  if (a != 0 && b > std::numeric_limits<Coefficient>::max() / a) {
    throw ArithmeticOverflow("ordinal coefficient overflow in multiplication");
  }
  return a * b;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ordinal parse error at position " + std::to_string(pos_) + ": " +
                     what + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Coefficient parse_number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    Coefficient value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), static_cast<Coefficient>(text_[pos_] - '0'));
      ++pos_;
    }
    return value;
  }

  Ordinal parse_sum() {
    Ordinal total = parse_product();
    while (accept('+')) total = add(total, parse_product());
    return total;
  }

  Ordinal parse_product() {
    Ordinal value = parse_atom();
    while (accept('*')) value = multiply(value, parse_atom());
    return value;
  }

  Ordinal parse_atom() {
    skip_space();
    if (accept('(')) {
      Ordinal inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('w')) {
      if (accept('^')) return Ordinal::omega_power(parse_exponent());
      return Ordinal::omega();
    }
    return Ordinal(parse_number());
  }

  Ordinal parse_exponent() {
    skip_space();
    if (accept('(')) {
      Ordinal inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('w')) {
      if (accept('^')) return Ordinal::omega_power(parse_exponent());
      return Ordinal::omega();
    }
    return Ordinal(parse_number());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exponents print bare when they are a number or exactly w.
std::string exponent_text(const Ordinal& e) {
  std::string s = e.to_string();
  if (e.is_finite() || e == Ordinal::omega()) return s;
  return "(" + s + ")";
}

}  // namespace

Ordinal::Ordinal(Coefficient n) {
  if (n != 0) terms_.push_back(OrdinalTerm{Ordinal{}, n});
}

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent) { return monomial(exponent, 1); }

Ordinal Ordinal::monomial(const Ordinal& exponent, Coefficient coefficient) {
  if (coefficient == 0) return Ordinal{};
  return Ordinal(std::vector<OrdinalTerm>{OrdinalTerm{exponent, coefficient}});
}

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).parse_all(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

Ordinal::Coefficient Ordinal::finite_value() const {
  if (!is_finite()) throw DomainError("ordinal " + to_string() + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const OrdinalTerm& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) out += "^" + exponent_text(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const OrdinalTerm& x = a.terms_[i];
    const OrdinalTerm& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

OrdinalOrder compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return OrdinalOrder::less;
  if (c > 0) return OrdinalOrder::greater;
  return OrdinalOrder::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<OrdinalTerm> out;
  for (const OrdinalTerm& t : a.terms_) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      out.push_back(OrdinalTerm{lead, checked_add(t.coefficient, b.terms_.front().coefficient)});
      out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
      return Ordinal(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return Ordinal(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  // Left distributivity: a * (t1 + t2 + ...) = a*t1 + a*t2 + ...
  const OrdinalTerm& head = a.terms_.front();
  Ordinal result;
  for (const OrdinalTerm& t : b.terms_) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * c = w^e1 * (c1 * c) + (rest of a)
      std::vector<OrdinalTerm> terms = a.terms_;
      terms.front().coefficient = checked_mul(head.coefficient, t.coefficient);
      piece = Ordinal(std::move(terms));
    } else {
      // a * w^e * c = w^(e1 + e) * c
      piece = Ordinal::monomial(add(head.exponent, t.exponent), t.coefficient);
    }
    result = add(result, piece);
  }
  return result;
}

std::optional<Ordinal> predecessor(const Ordinal& a) {
  if (!a.is_successor()) return std::nullopt;
  std::vector<OrdinalTerm> terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  Ordinal out;
  for (const OrdinalTerm& t : terms) out = add(out, Ordinal::monomial(t.exponent, t.coefficient));
  return out;
}

Ordinal fundamental(const Ordinal& limit, std::uint64_t n) {
  if (!limit.is_limit()) throw DomainError("fundamental sequence requested for non-limit " + limit.to_string());
  if (n == 0) throw DomainError("fundamental sequence index must be positive");
  const std::vector<OrdinalTerm>& terms = limit.terms();
  Ordinal head;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    head = add(head, Ordinal::monomial(terms[i].exponent, terms[i].coefficient));
  }
  const OrdinalTerm& last = terms.back();
  head = add(head, Ordinal::monomial(last.exponent, last.coefficient - 1));
  if (auto g = predecessor(last.exponent)) {
    return add(head, Ordinal::monomial(*g, n));
  }
  return add(head, Ordinal::omega_power(fundamental(last.exponent, n)));
}

Ordinal associated_sequence(const Ordinal& a, std::uint64_t n) {
  if (a.is_zero()) throw DomainError("associated sequence of 0 is undefined");
  if (auto p = predecessor(a)) return *p;
  return fundamental(a, n);
}

}  // namespace skit
