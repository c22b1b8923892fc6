#include "skit/vector.hpp"

#include <cctype>

#include "skit/error.hpp"

namespace skit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Vector::Vector(const Entries& entries) {
  for (const auto& [i, v] : entries) set(i, v);
}

Vector Vector::unit(Index i) {
  Vector v;
  v.set(i, 1);
  return v;
}

Vector Vector::indicator(const FiniteSet& set) {
  Vector v;
  for (Index i : set) v.set(i, 1);
  return v;
}

Rational Vector::get(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void Vector::set(Index i, const Rational& value) {
  if (i < 1) throw DomainError("vector indices start at 1");
  if (value == 0) {
    entries_.erase(i);
  } else {
    entries_[i] = value;
  }
}

void Vector::add_to(Index i, const Rational& value) { set(i, get(i) + value); }

FiniteSet Vector::support() const {
  std::vector<Index> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.first);
  return FiniteSet(std::move(s));
}

Index Vector::min_support() const {
  if (entries_.empty()) throw DomainError("support of the zero vector is empty");
  return entries_.begin()->first;
}

Index Vector::max_support() const {
  if (entries_.empty()) throw DomainError("support of the zero vector is empty");
  return entries_.rbegin()->first;
}

Vector& Vector::operator+=(const Vector& other) {
  for (const auto& [i, v] : other.entries_) add_to(i, v);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  for (const auto& [i, v] : other.entries_) add_to(i, -v);
  return *this;
}

Vector& Vector::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= scalar;
  return *this;
}

Vector& Vector::operator/=(const Rational& scalar) {
  if (scalar == 0) throw DomainError("division of a vector by zero");
  for (auto& e : entries_) e.second /= scalar;
  return *this;
}

Vector Vector::restricted(const FiniteSet& indices) const {
  Vector out;
  for (const auto& [i, v] : entries_) {
    if (indices.contains(i)) out.entries_.emplace(i, v);
  }
  return out;
}

Rational Vector::ell1() const {
  Rational s = 0;
  for (const auto& e : entries_) s += abs(e.second);
  return s;
}

Rational Vector::sup() const {
  Rational s = 0;
  for (const auto& e : entries_) {
    Rational a = abs(e.second);
    if (a > s) s = a;
  }
  return s;
}

std::string Vector::to_string() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [i, v] : entries_) {
    if (!s.empty()) s += " + ";
    s += format_rational(v) + "*e" + std::to_string(i);
  }
  return s;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(const Rational& scalar, Vector v) { return v *= scalar; }

bool precedes(const Block& a, const Block& b) { return a.max_support() < b.min_support(); }

void require_successive(const std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].is_zero()) throw DomainError("block " + std::to_string(i + 1) + " is zero");
    if (i > 0 && !precedes(blocks[i - 1], blocks[i])) {
      throw DomainError("blocks " + std::to_string(i) + " and " + std::to_string(i + 1) +
                        " are not successive");
    }
  }
}

}  // namespace skit
