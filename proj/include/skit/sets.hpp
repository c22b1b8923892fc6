#pragma once

// Finite subsets of N = {1, 2, ...} and eventually-arithmetic infinite
// subsets of N.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace skit {

using Index = std::int64_t;

// Strictly increasing list of positive integers.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Index> elements);
  // Validates strict increase and positivity; DomainError otherwise.
  explicit FiniteSet(std::vector<Index> elements);
  // Sorts and deduplicates first.
  static FiniteSet from_unsorted(std::vector<Index> elements);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static FiniteSet interval(Index lo, Index hi);

  const std::vector<Index>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Index min() const;
  Index max() const;
  Index operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(Index x) const;
  bool is_subset_of(const FiniteSet& other) const;
  // True when *this is an initial segment of other.
  bool is_initial_segment_of(const FiniteSet& other) const;

  // Append x > max(); DomainError otherwise.
  FiniteSet with_back(Index x) const;
  FiniteSet without_min() const;
  FiniteSet without_max() const;
  // Elements at positions [from, to).
  FiniteSet slice(std::size_t from, std::size_t to) const;

  std::string to_string() const;

  friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Index> elements_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);
// E < F in the sense max E < min F (true when either is empty).
bool precedes(const FiniteSet& a, const FiniteSet& b);

// prefix followed by tail_start, tail_start + step, ...
class IntStream {
 public:
  IntStream(FiniteSet prefix, Index tail_start, Index tail_step);

  static IntStream naturals() { return IntStream({}, 1, 1); }
  static IntStream odds() { return IntStream({}, 1, 2); }
  static IntStream evens() { return IntStream({}, 2, 2); }
  static IntStream tail_from(Index start) { return IntStream({}, start, 1); }

  const FiniteSet& prefix() const { return prefix_; }
  Index tail_start() const { return tail_start_; }
  Index tail_step() const { return tail_step_; }

  // i-th element, 1-based.
  Index at(std::size_t i) const;
  Index min() const { return at(1); }
  bool contains(Index x) const;
  // 1-based position of x in the enumeration; nullopt when x is not in the stream.
  std::optional<std::size_t> position_of(Index x) const;
  // Least element strictly greater than x.
  Index next_after(Index x) const;
  // First n elements.
  FiniteSet take(std::size_t n) const;
  // Elements <= bound.
  FiniteSet up_to(Index bound) const;
  // { m in stream : m > x }.
  IntStream after(Index x) const;
  // { m in stream : m >= x }.
  IntStream from(Index x) const { return after(x - 1); }

  std::string to_string() const;

  friend bool operator==(const IntStream&, const IntStream&) = default;

 private:
  FiniteSet prefix_;
  Index tail_start_;
  Index tail_step_;
};

// All subsets of {1..window} with at most max_size elements, in lexicographic
// order of their increasing enumerations, starting with the empty set.
std::vector<FiniteSet> subsets_of_window(Index window, std::size_t max_size);

// All subsets of `ground`, lexicographic, including the empty set.
std::vector<FiniteSet> subsets_of(const FiniteSet& ground);

}  // namespace skit
