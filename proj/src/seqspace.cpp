#include "skit/seqspace.hpp"

#include <algorithm>
#include <queue>

#include "skit/error.hpp"
#include "skit/random.hpp"
#include "skit/schreier.hpp"

namespace skit {

NormOracle NormOracle::sup() {
  NormOracle o;
  o.kind_ = Kind::sup;
  return o;
}

NormOracle NormOracle::ell1() {
  NormOracle o;
  o.kind_ = Kind::ell1;
  return o;
}

NormOracle NormOracle::schreier(FamilySpec fam) {
  NormOracle o;
  o.kind_ = Kind::schreier;
  o.fam_ = std::move(fam);
  return o;
}

NormOracle NormOracle::node_sup(std::shared_ptr<const NodeModel> model) {
  if (!model) throw DomainError("node_sup oracle needs a model");
  NormOracle o;
  o.kind_ = Kind::node_sup;
  o.model_ = std::move(model);
  return o;
}

NormOracle NormOracle::custom(std::string name, Custom fn) {
  NormOracle o;
  o.kind_ = Kind::custom;
  o.name_ = std::move(name);
  o.custom_ = std::move(fn);
  return o;
}

const FamilySpec& NormOracle::family() const {
  if (!fam_) throw DomainError("oracle " + to_string() + " has no family");
  return *fam_;
}

const NodeModel& NormOracle::model() const {
  if (!model_) throw DomainError("oracle " + to_string() + " has no node model");
  return *model_;
}

std::string NormOracle::to_string() const {
  switch (kind_) {
    case Kind::sup:
      return "sup";
    case Kind::ell1:
      return "ell1";
    case Kind::schreier:
      return "schreier(" + fam_->to_string() + ")";
    case Kind::node_sup:
      return "node_sup(" + model_->family().to_string() + "," + std::to_string(model_->window()) + ")";
    case Kind::custom:
      return "custom(" + name_ + ")";
  }
  return "";
}

Rational NormOracle::operator()(const Vector& v) const {
  switch (kind_) {
    case Kind::sup:
      return v.sup();
    case Kind::ell1:
      return v.ell1();
    case Kind::schreier:
      return family_norm(*fam_, v);
    case Kind::node_sup:
      return sup_norm(*model_, v);
    case Kind::custom:
      return custom_(v);
  }
  return 0;
}

Rational norm(const NormOracle& oracle, const Vector& v) { return oracle(v); }

namespace {

// |F| <= min F: for each candidate minimum m take |a_m| and the m-1 largest
// weights above it. Scanning right to left the candidate count m-1 only
// shrinks, so a min-heap of the current top weights suffices.
Rational schreier1_norm(const Vector& v) {
  using Item = std::pair<Rational, std::size_t>;
  auto lighter = [](const Item& x, const Item& y) { return x.first > y.first; };
  auto heavier = [](const Item& x, const Item& y) { return x.first < y.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(lighter)> top(lighter);
  std::priority_queue<Item, std::vector<Item>, decltype(heavier)> rest(heavier);
  Rational top_sum = 0;
  Rational best = 0;
  std::vector<std::pair<Index, Rational>> items;
  for (const auto& [i, a] : v.entries()) items.emplace_back(i, abs(a));
  for (std::size_t k = items.size(); k-- > 0;) {
    const Index m = items[k].first;
    const std::size_t room = static_cast<std::size_t>(std::min<Index>(m - 1, static_cast<Index>(items.size())));
    while (top.size() > room) {
      top_sum -= top.top().first;
      rest.push(top.top());
      top.pop();
    }
    while (top.size() < room && !rest.empty()) {
      top_sum += rest.top().first;
      top.push(rest.top());
      rest.pop();
    }
    while (!top.empty() && !rest.empty() && rest.top().first > top.top().first) {
      Item up = rest.top();
      Item down = top.top();
      rest.pop();
      top.pop();
      top_sum += up.first - down.first;
      top.push(up);
      rest.push(down);
    }
    const Rational total = items[k].second + top_sum;
    if (total > best) best = total;
    // items[k] becomes a candidate for the sets with smaller minima
    if (top.size() < room) {
      top_sum += items[k].second;
      top.push({items[k].second, k});
    } else {
      rest.push({items[k].second, k});
    }
  }
  return best;
}

struct Search {
  const FamilySpec& fam;
  std::vector<Index> indices;
  std::vector<Rational> weights;
  std::vector<Rational> suffix;
  Rational best = 0;

  void run(std::vector<Index>& current, std::size_t from, const Rational& sum) {
    if (sum > best) best = sum;
    for (std::size_t j = from; j < indices.size(); ++j) {
      if (sum + suffix[j] <= best) break;
      current.push_back(indices[j]);
      if (member(fam, FiniteSet(current))) run(current, j + 1, sum + weights[j]);
      current.pop_back();
    }
  }
};

bool is_schreier(const FamilySpec& fam, unsigned order) {
  if (order == 0 && fam.as<FamilySpec::Singletons>()) return true;
  const auto* s = fam.as<FamilySpec::Schreier>();
  return s && s->xi == Ordinal(order);
}

}  // namespace

Rational family_norm(const FamilySpec& fam, const Vector& v) {
  if (v.is_zero()) return 0;
  if (is_schreier(fam, 0)) return v.sup();
  if (is_schreier(fam, 1)) return schreier1_norm(v);
  Search search{fam, {}, {}, {}, 0};
  for (const auto& [i, a] : v.entries()) {
    search.indices.push_back(i);
    search.weights.push_back(abs(a));
  }
  search.suffix.assign(search.weights.size() + 1, Rational(0));
  for (std::size_t j = search.weights.size(); j-- > 0;) {
    search.suffix[j] = search.suffix[j + 1] + search.weights[j];
  }
  std::vector<Index> current;
  search.run(current, 0, 0);
  return search.best;
}

FiniteSet min_supports(const std::vector<Block>& blocks) {
  require_successive(blocks);
  std::vector<Index> mins;
  mins.reserve(blocks.size());
  for (const Block& b : blocks) mins.push_back(b.min_support());
  return FiniteSet(std::move(mins));
}

bool admissible(const FamilySpec& fam, const std::vector<Block>& blocks) {
  return member(fam, min_supports(blocks));
}

bool maximally_admissible(const FamilySpec& fam, const std::vector<Block>& blocks) {
  const FiniteSet mins = min_supports(blocks);
  return !mins.empty() && member(fam, mins) && is_maximal(fam, mins);
}

std::vector<FiniteSet> admissible_positions(const std::vector<Block>& blocks, const Ordinal& xi,
                                            std::size_t depth) {
  require_successive(blocks);
  const Index d = static_cast<Index>(std::min(depth, blocks.size()));
  std::vector<FiniteSet> out;
  for (const FiniteSet& positions : subsets_of_window(d, static_cast<std::size_t>(d))) {
    if (positions.empty()) continue;
    std::vector<Index> mins;
    for (Index p : positions) mins.push_back(blocks[static_cast<std::size_t>(p - 1)].min_support());
    if (s_member(xi, FiniteSet(std::move(mins)))) out.push_back(positions);
  }
  return out;
}

namespace {

Vector combine(const std::vector<Block>& blocks, const FiniteSet& positions,
               const std::vector<Rational>& coefficients) {
  Vector v;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    v += coefficients[k] * blocks[static_cast<std::size_t>(positions[k] - 1)];
  }
  return v;
}

// Signs with the first one fixed to +1; norms are symmetric.
std::vector<std::vector<Rational>> sign_vectors(std::size_t n) {
  std::vector<std::vector<Rational>> out;
  if (n == 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<Rational> s(n, Rational(1));
    for (std::size_t k = 1; k < n; ++k) {
      if (mask & (std::uint64_t{1} << (k - 1))) s[k] = -1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

C0Bound c0_constant_lower(const std::vector<Block>& blocks, const Ordinal& xi,
                          const NormOracle& oracle, std::size_t depth) {
  C0Bound bound{0, {}, {}};
  for (const FiniteSet& positions : admissible_positions(blocks, xi, depth)) {
    for (const auto& signs : sign_vectors(positions.size())) {
      Rational value = oracle(combine(blocks, positions, signs));
      if (value > bound.value) {
        bound.value = value;
        bound.positions = positions;
        bound.signs.clear();
        for (const Rational& s : signs) bound.signs.push_back(s > 0 ? 1 : -1);
      }
    }
  }
  return bound;
}

SpreadingResult l1_spreading_check(const std::vector<Block>& blocks, const Ordinal& xi,
                                   const Rational& delta, const NormOracle& oracle,
                                   std::size_t depth, std::size_t trials, std::uint64_t seed) {
  if (delta <= 0) throw DomainError("delta must be positive");
  SpreadingResult result;
  result.depth = depth;
  result.trials = trials;
  result.seed = seed;
  const std::vector<FiniteSet> candidates = admissible_positions(blocks, xi, depth);

  auto test = [&](const FiniteSet& positions, std::vector<Rational> a) {
    Rational mass = 0;
    for (const Rational& x : a) mass += abs(x);
    const Rational value = oracle(combine(blocks, positions, a));
    const Rational bound = delta * mass;
    if (value < bound) {
      result.pass = false;
      result.witness = SpreadingWitness{positions, std::move(a), value, bound};
      return false;
    }
    return true;
  };

  for (const FiniteSet& positions : candidates) {
    for (auto& signs : sign_vectors(positions.size())) {
      ++result.sign_cases;
      if (!test(positions, std::move(signs))) return result;
    }
  }
  if (candidates.empty()) return result;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const FiniteSet& positions =
        candidates[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1))];
    std::vector<Rational> a(positions.size());
    for (auto& x : a) x = random_rational(rng, 20, 20, true);
    if (!test(positions, std::move(a))) return result;
  }
  return result;
}

Rational unconditionality_ratio(const NormOracle& oracle, const Vector& v, const FiniteSet& indices) {
  const Rational whole = oracle(v);
  if (whole == 0) throw DomainError("unconditionality ratio of a zero-norm vector");
  return oracle(v.restricted(indices)) / whole;
}

std::vector<Block> unit_blocks(std::size_t n) {
  std::vector<Block> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Vector::unit(static_cast<Index>(i)));
  return out;
}

}  // namespace skit
