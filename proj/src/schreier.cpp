#include "skit/schreier.hpp"

#include <string>
#include <unordered_map>

#include "skit/error.hpp"
#include "skit/setfam.hpp"

namespace skit {

namespace {

constexpr std::size_t kCacheLimit = 1u << 22;

struct MembershipCache {
  std::unordered_map<std::string, bool> entries;
};

// Confined per thread: membership queries stay pure and lock-free.
MembershipCache& cache() {
  thread_local MembershipCache c;
  return c;
}

std::string cache_key(const Ordinal& xi, const FiniteSet& set) {
  std::string key = xi.to_string();
  key += ':';
  for (Index x : set) {
    key += std::to_string(x);
    key += ',';
  }
  return key;
}

bool decide(const Ordinal& xi, const FiniteSet& set);

bool s_member_cached(const Ordinal& xi, const FiniteSet& set) {
  if (set.empty()) return true;
  if (set.size() == 1) return true;
  // {1} is maximal in every Schreier family.
  if (set.min() == 1) return false;
  if (xi.is_zero()) return false;
  if (xi == Ordinal(1)) return set.size() <= static_cast<std::size_t>(set.min());
  std::string key = cache_key(xi, set);
  MembershipCache& c = cache();
  if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  const bool result = decide(xi, set);
  if (c.entries.size() >= kCacheLimit) c.entries.clear();
  c.entries.emplace(std::move(key), result);
  return result;
}

bool decide(const Ordinal& xi, const FiniteSet& set) {
  const Index min = set.min();
  if (auto pred = predecessor(xi)) {
    // S_1[S_z]: the greedy split into maximal initial segments of S_z uses
    // the fewest parts; the minima form an S_1-set iff there are <= min F.
    std::size_t parts = 0;
    std::size_t pos = 0;
    while (pos < set.size()) {
      if (++parts > static_cast<std::size_t>(min)) return false;
      std::size_t end = pos + 1;
      while (end < set.size() && s_member_cached(*pred, set.slice(pos, end + 1))) ++end;
      pos = end;
    }
    return true;
  }
  // Limit: scan every n <= min F; the families S_{xi_n+1} need not be nested.
  for (Index n = 1; n <= min; ++n) {
    const Ordinal step = add(fundamental(xi, static_cast<std::uint64_t>(n)), Ordinal(1));
    if (s_member_cached(step, set)) return true;
  }
  return false;
}

}  // namespace

bool s_member(const Ordinal& xi, const FiniteSet& set) { return s_member_cached(xi, set); }

void clear_schreier_cache() { cache().entries.clear(); }

bool s_maximal(const Ordinal& xi, const FiniteSet& set) {
  if (set.empty()) throw DomainError("maximality of the empty set is undefined");
  if (!s_member(xi, set)) {
    throw DomainError(set.to_string() + " is not a member of S_" + xi.to_string());
  }
  return !s_member(xi, set.with_back(set.max() + 1));
}

std::vector<FiniteSet> s_decompose(const Ordinal& xi, const IntStream& stream, std::size_t count) {
  std::vector<FiniteSet> parts;
  parts.reserve(count);
  Index next = stream.min();
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Index> part{next};
    next = stream.next_after(next);
    while (s_member(xi, FiniteSet(part).with_back(next))) {
      part.push_back(next);
      next = stream.next_after(next);
    }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

ThresholdCertificate s_threshold(const Ordinal& alpha, const Ordinal& beta, Index search_bound,
                                 Index window, std::size_t max_size) {
  if (!(alpha < beta)) {
    throw DomainError("threshold requires alpha < beta, got " + alpha.to_string() + " and " +
                      beta.to_string());
  }
  ThresholdCertificate cert;
  cert.window = window;
  cert.max_size = max_size;
  std::optional<FiniteSet> last_counterexample;
  for (Index n = 1; n <= search_bound; ++n) {
    std::optional<FiniteSet> counterexample;
    for (const FiniteSet& offsets : subsets_of_window(window + 1, max_size)) {
      if (offsets.empty()) continue;
      std::vector<Index> v;
      for (Index o : offsets) v.push_back(n + o - 1);
      FiniteSet f(std::move(v));
      if (s_member(alpha, f) && !s_member(beta, f)) {
        counterexample = f;
        break;
      }
    }
    if (!counterexample) {
      cert.threshold = n;
      cert.counterexample_below = last_counterexample;
      return cert;
    }
    last_counterexample = counterexample;
  }
  throw NotFound("no threshold for S_" + alpha.to_string() + " inside S_" + beta.to_string() +
                 " up to " + std::to_string(search_bound));
}

Le5Result check_le5(const Ordinal& alpha, Index window) {
  Le5Result result;
  result.window = window;
  for (Index n = 2; n <= window; ++n) {
    FiniteSet above = FiniteSet::interval(n + 1, window);
    for (const FiniteSet& tail : subsets_of(above)) {
      if (tail.empty()) continue;
      std::vector<Index> with_n{n};
      with_n.insert(with_n.end(), tail.begin(), tail.end());
      FiniteSet head_n(std::move(with_n));
      if (!s_member(alpha, head_n) || !s_maximal(alpha, head_n)) continue;
      for (Index m = 1; m < n; ++m) {
        std::vector<Index> with_m{m};
        with_m.insert(with_m.end(), tail.begin(), tail.end());
        ++result.cases_checked;
        if (s_member(alpha, FiniteSet(std::move(with_m)))) {
          result.holds = false;
          result.witness = Le5Witness{m, n, tail};
          return result;
        }
      }
    }
  }
  return result;
}

TransferResult check_transfer(const Ordinal& alpha, const Ordinal& beta, const IntStream& stream,
                              Index window, std::size_t max_size) {
  TransferResult result;
  const FamilySpec blocks =
      FamilySpec::convolution(FamilySpec::schreier(beta), FamilySpec::schreier(alpha));
  const Ordinal sum = add(alpha, beta);
  const FiniteSet ground = stream.up_to(window);
  for (const FiniteSet& f : subsets_of(ground)) {
    if (f.empty() || f.size() > max_size) continue;
    ++result.sets_checked;
    const FiniteSet rest = f.without_min();
    if (member(blocks, f) && !s_member(sum, rest)) {
      result.holds = false;
      result.failed_direction = 1;
      result.witness = f;
      return result;
    }
    if (s_member(sum, f) && !member(blocks, rest)) {
      result.holds = false;
      result.failed_direction = 2;
      result.witness = f;
      return result;
    }
  }
  return result;
}

}  // namespace skit
