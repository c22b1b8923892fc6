#pragma once

// Exact rationals and finitely supported coefficient sequences over N.

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skit/sets.hpp"

namespace skit {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; result is canonical. ParseError otherwise,
// DomainError for a zero denominator.
Rational parse_rational(std::string_view text);
// "p/q" in lowest terms, or "p" for integers.
std::string format_rational(const Rational& q);

Rational abs(const Rational& q);

// Finitely supported sequence (a_i)_{i>=1}; zero entries are never stored.
class Vector {
 public:
  using Entries = std::map<Index, Rational>;

  Vector() = default;
  explicit Vector(const Entries& entries);

  static Vector unit(Index i);
  // Sum of e_i over the set, all coefficients one.
  static Vector indicator(const FiniteSet& set);

  const Entries& entries() const { return entries_; }
  Rational get(Index i) const;
  void set(Index i, const Rational& value);
  void add_to(Index i, const Rational& value);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  FiniteSet support() const;
  Index min_support() const;
  Index max_support() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& scalar);
  Vector& operator/=(const Rational& scalar);

  // Coefficients on `indices` only.
  Vector restricted(const FiniteSet& indices) const;

  Rational ell1() const;
  Rational sup() const;

  std::string to_string() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Entries entries_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& scalar, Vector v);

// Blocks are nonzero vectors; u < v means max supp u < min supp v.
using Block = Vector;

bool precedes(const Block& a, const Block& b);
// Every consecutive pair precedes; DomainError naming the first offending
// pair, or a zero block.
void require_successive(const std::vector<Block>& blocks);

}  // namespace skit
