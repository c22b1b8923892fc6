#pragma once

// Countable ordinals below epsilon_0 in Cantor normal form.
//
//   alpha = w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek
//
// Exponents are themselves ordinals, so the representation is a finite tree.
// Coefficients are machine words; arithmetic that would overflow them throws
// ArithmeticOverflow.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skit {

struct OrdinalTerm;

class Ordinal {
 public:
  using Coefficient = std::uint64_t;

  Ordinal() = default;  // zero
  explicit Ordinal(Coefficient n);

  static Ordinal zero() { return Ordinal{}; }
  static Ordinal omega();
  // w^exponent
  static Ordinal omega_power(const Ordinal& exponent);
  // w^exponent * coefficient; coefficient 0 yields zero.
  static Ordinal monomial(const Ordinal& exponent, Coefficient coefficient);

  // Parses the ASCII syntax `0`, `3`, `w`, `w^2*3+w+1`, `w^(w+1)`, `w^w`.
  // Non-canonical sums such as `1+w` are accepted and normalized.
  static Ordinal parse(std::string_view text);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  // Value of a finite ordinal; DomainError otherwise.
  Coefficient finite_value() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<OrdinalTerm> terms);

  std::vector<OrdinalTerm> terms_;

  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  friend Ordinal multiply(const Ordinal& a, const Ordinal& b);
};

struct OrdinalTerm {
  Ordinal exponent;
  Ordinal::Coefficient coefficient = 1;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

enum class OrdinalOrder { less, equal, greater };

OrdinalOrder compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal multiply(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return multiply(a, b); }

// alpha - 1 for a successor alpha; nullopt for zero and limits.
std::optional<Ordinal> predecessor(const Ordinal& a);

// Canonical fundamental sequence lambda[n] of a limit ordinal (n >= 1).
// For lambda = head + w^b * c:
//   b = g + 1   ->  head + w^b * (c-1) + w^g * n
//   b limit     ->  head + w^b * (c-1) + w^(b[n])
Ordinal fundamental(const Ordinal& limit, std::uint64_t n);

// The ordinal alpha_n whose successors (alpha_n + 1) are associated to alpha:
// alpha - 1 for successors, lambda[n] for limits. DomainError for zero.
Ordinal associated_sequence(const Ordinal& a, std::uint64_t n);

// Identifier of the fundamental-sequence convention, recorded in certificates.
inline constexpr std::string_view kFundamentalSequenceScheme = "cnf-canonical-v1";

}  // namespace skit
