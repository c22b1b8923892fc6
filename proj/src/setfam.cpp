#include "skit/setfam.hpp"

#include <algorithm>
#include <map>

#include "skit/error.hpp"
#include "skit/schreier.hpp"

namespace skit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Tries every split of set[pos..] into successive inner-members; minima are
// checked against outer once the split is complete.
bool convolution_backtrack(const FamilySpec& outer, const FamilySpec& inner, const FiniteSet& set,
                           std::size_t pos, std::vector<Index>& minima) {
  if (pos == set.size()) return member(outer, FiniteSet(minima));
  minima.push_back(set[pos]);
  for (std::size_t end = set.size(); end > pos; --end) {
    if (!member(inner, set.slice(pos, end))) continue;
    if (convolution_backtrack(outer, inner, set, end, minima)) {
      minima.pop_back();
      return true;
    }
  }
  minima.pop_back();
  return false;
}

bool convolution_member(const FamilySpec& outer, const FamilySpec& inner, const FiniteSet& set) {
  if (set.empty()) return true;
  // Greedy maximal initial segments first.
  std::vector<Index> minima;
  std::size_t pos = 0;
  bool greedy_ok = true;
  while (pos < set.size()) {
    std::size_t end = pos;
    while (end < set.size() && member(inner, set.slice(pos, end + 1))) ++end;
    if (end == pos) {
      greedy_ok = false;
      break;
    }
    minima.push_back(set[pos]);
    pos = end;
  }
  if (greedy_ok && member(outer, FiniteSet(minima))) return true;
  minima.clear();
  return convolution_backtrack(outer, inner, set, 0, minima);
}

}  // namespace

FamilySpec FamilySpec::singletons() { return FamilySpec(Singletons{}); }

FamilySpec FamilySpec::schreier(Ordinal xi) { return FamilySpec(Schreier{std::move(xi)}); }

FamilySpec FamilySpec::convolution(FamilySpec outer, FamilySpec inner) {
  return FamilySpec(Convolution{std::make_shared<const FamilySpec>(std::move(outer)),
                                std::make_shared<const FamilySpec>(std::move(inner))});
}

FamilySpec FamilySpec::plus(FamilySpec base) {
  return FamilySpec(Plus{std::make_shared<const FamilySpec>(std::move(base))});
}

FamilySpec FamilySpec::restrict(FamilySpec base, IntStream stream) {
  return FamilySpec(Restrict{std::make_shared<const FamilySpec>(std::move(base)), std::move(stream)});
}

FamilySpec FamilySpec::explicit_family(std::vector<FiniteSet> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return FamilySpec(Explicit{std::move(generators)});
}

std::string FamilySpec::to_string() const {
  return std::visit(
      Overloaded{
          [](const Singletons&) -> std::string { return "S_0"; },
          [](const Schreier& s) -> std::string { return "S_" + s.xi.to_string(); },
          [](const Convolution& c) -> std::string {
            return "(" + c.outer->to_string() + ")[" + c.inner->to_string() + "]";
          },
          [](const Plus& p) -> std::string { return "(" + p.base->to_string() + ")+"; },
          [](const Restrict& r) -> std::string {
            return "(" + r.base->to_string() + ")[" + r.stream.to_string() + "]";
          },
          [](const Explicit& e) -> std::string {
            std::string s = "Explicit{";
            for (std::size_t i = 0; i < e.generators.size(); ++i) {
              if (i) s += ",";
              s += e.generators[i].to_string();
            }
            return s + "}";
          },
      },
      *node_);
}

bool member(const FamilySpec& fam, const FiniteSet& set) {
  if (set.empty()) return true;
  return std::visit(
      Overloaded{
          [&](const FamilySpec::Singletons&) { return set.size() <= 1; },
          [&](const FamilySpec::Schreier& s) { return s_member(s.xi, set); },
          [&](const FamilySpec::Convolution& c) { return convolution_member(*c.outer, *c.inner, set); },
          [&](const FamilySpec::Plus& p) { return member(*p.base, set.without_min()); },
          [&](const FamilySpec::Restrict& r) {
            return std::all_of(set.begin(), set.end(), [&](Index x) { return r.stream.contains(x); }) &&
                   member(*r.base, set);
          },
          [&](const FamilySpec::Explicit& e) {
            return std::any_of(e.generators.begin(), e.generators.end(),
                               [&](const FiniteSet& g) { return set.is_subset_of(g); });
          },
      },
      fam.node());
}

bool is_maximal(const FamilySpec& fam, const FiniteSet& set) {
  if (set.empty()) throw DomainError("maximality of the empty set is undefined");
  if (!member(fam, set)) throw DomainError(set.to_string() + " is not a member of " + fam.to_string());
  return !member(fam, set.with_back(set.max() + 1));
}

WindowCertificate is_hereditary(const FamilySpec& fam, Index window, std::size_t max_size) {
  WindowCertificate cert{true, window, max_size, std::nullopt};
  // Removing one element at a time generates every subset.
  for (const FiniteSet& f : members_in_window(fam, window, max_size)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<Index> v = f.elements();
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      FiniteSet g(std::move(v));
      if (!member(fam, g)) {
        cert.holds = false;
        cert.witness = {f, g};
        return cert;
      }
    }
  }
  return cert;
}

WindowCertificate is_spreading(const FamilySpec& fam, Index window, std::size_t max_size) {
  WindowCertificate cert{true, window, max_size, std::nullopt};
  // Incrementing one coordinate by one, where the order is kept, generates
  // every spread inside the window.
  for (const FiniteSet& f : members_in_window(fam, window, max_size)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Index next = f[i] + 1;
      if (next > window || (i + 1 < f.size() && next == f[i + 1])) continue;
      std::vector<Index> v = f.elements();
      v[i] = next;
      FiniteSet g(std::move(v));
      if (!member(fam, g)) {
        cert.holds = false;
        cert.witness = {f, g};
        return cert;
      }
    }
  }
  return cert;
}

WindowCertificate contains_singletons(const FamilySpec& fam, Index window) {
  WindowCertificate cert{true, window, 1, std::nullopt};
  for (Index n = 1; n <= window; ++n) {
    if (!member(fam, FiniteSet{n})) {
      cert.holds = false;
      cert.witness = {FiniteSet{}, FiniteSet{n}};
      return cert;
    }
  }
  return cert;
}

Ordinal symbolic_order(const FamilySpec& fam) {
  return std::visit(
      Overloaded{
          [](const FamilySpec::Singletons&) { return Ordinal(1); },
          [](const FamilySpec::Schreier& s) { return Ordinal::omega_power(s.xi); },
          [](const FamilySpec::Convolution& c) {
            return multiply(symbolic_order(*c.inner), symbolic_order(*c.outer));
          },
          [](const FamilySpec::Plus& p) { return add(symbolic_order(*p.base), Ordinal(1)); },
          [](const FamilySpec::Restrict&) -> Ordinal {
            throw UnsupportedSpec("symbolic order is not defined for restricted families");
          },
          [](const FamilySpec::Explicit&) -> Ordinal {
            throw UnsupportedSpec("symbolic order is not defined for explicit families");
          },
      },
      fam.node());
}

namespace {

std::size_t rank_below(const FamilySpec& fam, const FiniteSet& set, Index window,
                       std::map<FiniteSet, std::size_t>& memo) {
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  std::size_t best = 0;
  const Index start = set.empty() ? 1 : set.max() + 1;
  for (Index x = start; x <= window; ++x) {
    FiniteSet next = set.with_back(x);
    if (member(fam, next)) best = std::max(best, 1 + rank_below(fam, next, window, memo));
  }
  memo.emplace(set, best);
  return best;
}

}  // namespace

std::size_t tree_rank(const FamilySpec& fam, Index window) {
  std::map<FiniteSet, std::size_t> memo;
  return rank_below(fam, FiniteSet{}, window, memo);
}

FamilySpec restrict(const FamilySpec& fam, const IntStream& stream) {
  return FamilySpec::restrict(fam, stream);
}

FiniteSet image(const IntStream& stream, const FiniteSet& indices) {
  std::vector<Index> out;
  out.reserve(indices.size());
  for (Index i : indices) out.push_back(stream.at(static_cast<std::size_t>(i)));
  return FiniteSet(std::move(out));
}

FiniteSet image(const FiniteSet& enumeration, const FiniteSet& indices) {
  std::vector<Index> out;
  out.reserve(indices.size());
  for (Index i : indices) {
    if (i > static_cast<Index>(enumeration.size())) {
      throw RangeError("index " + std::to_string(i) + " exceeds enumeration of size " +
                       std::to_string(enumeration.size()));
    }
    out.push_back(enumeration[static_cast<std::size_t>(i - 1)]);
  }
  return FiniteSet(std::move(out));
}

std::vector<FiniteSet> members_in_window(const FamilySpec& fam, Index window,
                                         std::size_t max_size) {
  // Initial segments of members are members of hereditary families, but the
  // window predicates must also work for non-hereditary families, so every
  // subset is tested.
  std::vector<FiniteSet> out;
  for (FiniteSet& f : subsets_of_window(window, max_size)) {
    if (member(fam, f)) out.push_back(std::move(f));
  }
  return out;
}

std::optional<std::size_t> greedy_part_count(const FamilySpec& fam, const FiniteSet& set) {
  std::size_t parts = 0;
  std::size_t pos = 0;
  while (pos < set.size()) {
    std::size_t end = pos;
    while (end < set.size() && member(fam, set.slice(pos, end + 1))) ++end;
    if (end == pos) return std::nullopt;
    ++parts;
    pos = end;
  }
  return parts;
}

}  // namespace skit
