#include "skit/sets.hpp"

#include <algorithm>

#include "skit/error.hpp"

namespace skit {

namespace {

void validate(const std::vector<Index>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw DomainError("finite set elements must be >= 1");
    if (i > 0 && v[i] <= v[i - 1]) throw DomainError("finite set elements must be strictly increasing");
  }
}

void lex_subsets(const std::vector<Index>& ground, std::size_t start, std::size_t max_size,
                 std::vector<Index>& current, std::vector<FiniteSet>& out) {
  out.emplace_back(current);
  if (current.size() == max_size) return;
  for (std::size_t i = start; i < ground.size(); ++i) {
    current.push_back(ground[i]);
    lex_subsets(ground, i + 1, max_size, current, out);
    current.pop_back();
  }
}

}  // namespace

FiniteSet::FiniteSet(std::initializer_list<Index> elements) : elements_(elements) {
  validate(elements_);
}

FiniteSet::FiniteSet(std::vector<Index> elements) : elements_(std::move(elements)) {
  validate(elements_);
}

FiniteSet FiniteSet::from_unsorted(std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet(std::move(elements));
}

FiniteSet FiniteSet::interval(Index lo, Index hi) {
  std::vector<Index> v;
  for (Index x = lo; x <= hi; ++x) v.push_back(x);
  return FiniteSet(std::move(v));
}

Index FiniteSet::min() const {
  if (elements_.empty()) throw DomainError("min of the empty set");
  return elements_.front();
}

Index FiniteSet::max() const {
  if (elements_.empty()) throw DomainError("max of the empty set");
  return elements_.back();
}

bool FiniteSet::contains(Index x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool FiniteSet::is_initial_segment_of(const FiniteSet& other) const {
  return elements_.size() <= other.elements_.size() &&
         std::equal(elements_.begin(), elements_.end(), other.elements_.begin());
}

FiniteSet FiniteSet::with_back(Index x) const {
  if (!elements_.empty() && x <= elements_.back()) {
    throw DomainError("with_back requires an element above the maximum");
  }
  FiniteSet out = *this;
  if (x < 1) throw DomainError("finite set elements must be >= 1");
  out.elements_.push_back(x);
  return out;
}

FiniteSet FiniteSet::without_min() const {
  if (elements_.empty()) return {};
  return slice(1, elements_.size());
}

FiniteSet FiniteSet::without_max() const {
  if (elements_.empty()) return {};
  return slice(0, elements_.size() - 1);
}

FiniteSet FiniteSet::slice(std::size_t from, std::size_t to) const {
  FiniteSet out;
  out.elements_.assign(elements_.begin() + static_cast<std::ptrdiff_t>(from),
                       elements_.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

std::string FiniteSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSet(std::move(out));
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSet(std::move(out));
}

bool precedes(const FiniteSet& a, const FiniteSet& b) {
  return a.empty() || b.empty() || a.max() < b.min();
}

IntStream::IntStream(FiniteSet prefix, Index tail_start, Index tail_step)
    : prefix_(std::move(prefix)), tail_start_(tail_start), tail_step_(tail_step) {
  if (tail_step_ < 1) throw DomainError("stream step must be positive");
  if (tail_start_ < 1) throw DomainError("stream elements must be >= 1");
  if (!prefix_.empty() && tail_start_ <= prefix_.max()) {
    throw DomainError("stream tail must start above the prefix");
  }
}

Index IntStream::at(std::size_t i) const {
  if (i == 0) throw RangeError("stream positions are 1-based");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return tail_start_ + static_cast<Index>(i - prefix_.size() - 1) * tail_step_;
}

bool IntStream::contains(Index x) const { return position_of(x).has_value(); }

std::optional<std::size_t> IntStream::position_of(Index x) const {
  const auto& p = prefix_.elements();
  if (auto it = std::lower_bound(p.begin(), p.end(), x); it != p.end() && *it == x) {
    return static_cast<std::size_t>(it - p.begin()) + 1;
  }
  if (x < tail_start_ || (x - tail_start_) % tail_step_ != 0) return std::nullopt;
  return prefix_.size() + static_cast<std::size_t>((x - tail_start_) / tail_step_) + 1;
}

Index IntStream::next_after(Index x) const {
  const auto& p = prefix_.elements();
  if (auto it = std::upper_bound(p.begin(), p.end(), x); it != p.end()) return *it;
  if (x < tail_start_) return tail_start_;
  return tail_start_ + ((x - tail_start_) / tail_step_ + 1) * tail_step_;
}

FiniteSet IntStream::take(std::size_t n) const {
  std::vector<Index> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(at(i));
  return FiniteSet(std::move(v));
}

FiniteSet IntStream::up_to(Index bound) const {
  std::vector<Index> v;
  for (std::size_t i = 1;; ++i) {
    Index x = at(i);
    if (x > bound) break;
    v.push_back(x);
  }
  return FiniteSet(std::move(v));
}

IntStream IntStream::after(Index x) const {
  std::vector<Index> kept;
  for (Index p : prefix_) {
    if (p > x) kept.push_back(p);
  }
  Index start = tail_start_;
  if (x >= tail_start_) start = tail_start_ + ((x - tail_start_) / tail_step_ + 1) * tail_step_;
  return IntStream(FiniteSet(std::move(kept)), start, tail_step_);
}

std::string IntStream::to_string() const {
  return prefix_.to_string() + "+(" + std::to_string(tail_start_) + "," +
         std::to_string(tail_start_ + tail_step_) + ",...)";
}

std::vector<FiniteSet> subsets_of_window(Index window, std::size_t max_size) {
  std::vector<Index> ground;
  for (Index x = 1; x <= window; ++x) ground.push_back(x);
  std::vector<FiniteSet> out;
  std::vector<Index> current;
  lex_subsets(ground, 0, max_size, current, out);
  return out;
}

std::vector<FiniteSet> subsets_of(const FiniteSet& ground) {
  std::vector<FiniteSet> out;
  std::vector<Index> current;
  lex_subsets(ground.elements(), 0, ground.size(), current, out);
  return out;
}

}  // namespace skit
