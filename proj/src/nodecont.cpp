#include "skit/nodecont.hpp"

#include <algorithm>
#include <set>

#include "skit/error.hpp"
#include "skit/random.hpp"

namespace skit {

bool antilex_less(const FiniteSet& a, const FiniteSet& b) {
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 && j > 0) {
    if (a[i - 1] != b[j - 1]) return a[i - 1] < b[j - 1];
    --i;
    --j;
  }
  return i == 0 && j > 0;
}

NodeModel::NodeModel(FamilySpec fam, Index window, std::size_t max_nodes)
    : fam_(std::move(fam)), window_(window) {
  std::vector<FiniteSet> stack{FiniteSet{}};
  while (!stack.empty()) {
    FiniteSet f = std::move(stack.back());
    stack.pop_back();
    const Index start = f.empty() ? 1 : f.max() + 1;
    for (Index x = start; x <= window_; ++x) {
      FiniteSet g = f.with_back(x);
      if (member(fam_, g)) stack.push_back(std::move(g));
    }
    nodes_.push_back(std::move(f));
    if (nodes_.size() > max_nodes) {
      throw BudgetExceeded("node model of " + fam_.to_string() + " on window " +
                           std::to_string(window_) + " exceeds " + std::to_string(max_nodes) +
                           " nodes");
    }
  }
  std::sort(nodes_.begin(), nodes_.end(), antilex_less);
  for (std::size_t j = 0; j < nodes_.size(); ++j) index_.emplace(nodes_[j], static_cast<Index>(j + 1));
  parents_.reserve(nodes_.size());
  for (const FiniteSet& f : nodes_) {
    parents_.push_back(f.empty() ? 0 : index_.at(f.without_max()));
  }
}

const FiniteSet& NodeModel::node(Index j) const {
  if (j < 1 || j > static_cast<Index>(nodes_.size())) {
    throw RangeError("node index " + std::to_string(j) + " outside 1.." + std::to_string(nodes_.size()));
  }
  return nodes_[static_cast<std::size_t>(j - 1)];
}

std::optional<Index> NodeModel::index_of(const FiniteSet& node) const {
  if (auto it = index_.find(node); it != index_.end()) return it->second;
  return std::nullopt;
}

Index NodeModel::parent(Index j) const {
  node(j);
  return parents_[static_cast<std::size_t>(j - 1)];
}

std::vector<FiniteSet> antilex_enumerate(const FamilySpec& fam, Index window) {
  return NodeModel(fam, window).nodes();
}

Rational evaluate_at_node(const NodeModel& model, const Vector& f, Index j) {
  Rational value = 0;
  for (Index k = j; k != 0; k = model.parent(k)) value += f.get(k);
  return value;
}

Rational evaluate(const NodeModel& model, const Vector& f, const FiniteSet& gamma) {
  if (!member(model.family(), gamma)) {
    throw DomainError(gamma.to_string() + " is not a point of " + model.family().to_string());
  }
  Rational value = 0;
  for (std::size_t k = 0; k <= gamma.size(); ++k) {
    if (auto j = model.index_of(gamma.slice(0, k))) value += f.get(*j);
  }
  return value;
}

std::vector<Index> evaluation_points(const Vector& f) { return evaluation_points({&f}); }

std::vector<Index> evaluation_points(const std::vector<const Vector*>& fs) {
  std::set<Index> points{1};
  for (const Vector* f : fs) {
    for (const auto& e : f->entries()) points.insert(e.first);
  }
  return {points.begin(), points.end()};
}

namespace {

void require_in_model(const NodeModel& model, const Vector& f) {
  if (!f.is_zero() && f.max_support() > static_cast<Index>(model.size())) {
    throw RangeError("coefficient at node " + std::to_string(f.max_support()) +
                     " beyond a model of " + std::to_string(model.size()) + " nodes");
  }
}

}  // namespace

Rational sup_norm(const NodeModel& model, const Vector& f) {
  require_in_model(model, f);
  Rational best = 0;
  for (Index j : evaluation_points(f)) {
    Rational v = abs(evaluate_at_node(model, f, j));
    if (v > best) best = v;
  }
  return best;
}

std::vector<std::size_t> select_indices(const NodeModel& model, const std::vector<Block>& blocks) {
  if (blocks.size() < 2) throw DomainError("selection needs at least two blocks");
  require_successive(blocks);
  for (const Block& b : blocks) require_in_model(model, b);
  std::vector<std::size_t> out{2};
  while (true) {
    const std::size_t n = out.back();
    Index top = 0;
    for (const auto& e : blocks[n - 1].entries()) {
      const FiniteSet& beta = model.node(e.first);
      if (!beta.empty()) top = std::max(top, beta.max());
    }
    const std::size_t next = std::max(n + 1, static_cast<std::size_t>(top) + 1);
    if (next > blocks.size()) break;
    out.push_back(next);
  }
  return out;
}

namespace {

// values[p][i] = u_{indices[i]} at points[p]
std::vector<std::vector<Rational>> value_table(const NodeModel& model, const std::vector<Block>& blocks,
                                               const std::vector<std::size_t>& indices,
                                               const std::vector<Index>& points) {
  std::vector<std::vector<Rational>> values(points.size(), std::vector<Rational>(indices.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      values[p][i] = evaluate_at_node(model, blocks[indices[i] - 1], points[p]);
    }
  }
  return values;
}

std::vector<Index> all_points(const NodeModel& model) {
  std::vector<Index> points(model.size());
  for (std::size_t j = 0; j < points.size(); ++j) points[j] = static_cast<Index>(j + 1);
  return points;
}

std::vector<std::size_t> checked_indices(const std::vector<Block>& blocks,
                                         const std::vector<std::size_t>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > blocks.size() || (i > 0 && indices[i] <= indices[i - 1])) {
      throw DomainError("block indices must be increasing positions in 1.." +
                        std::to_string(blocks.size()));
    }
  }
  return indices;
}

}  // namespace

std::optional<FiniteSet> selection_violation(const NodeModel& model, const std::vector<Block>& blocks,
                                             const std::vector<std::size_t>& indices) {
  checked_indices(blocks, indices);
  const FamilySpec plus = FamilySpec::plus(model.family());
  const std::vector<Index> points = all_points(model);
  const auto values = value_table(model, blocks, indices, points);
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<Index> nonzero;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (values[p][i] != 0) nonzero.push_back(static_cast<Index>(indices[i]));
    }
    if (!member(plus, FiniteSet(std::move(nonzero)))) return model.node(points[p]);
  }
  return std::nullopt;
}

FiniteSet select_subsequence(const NodeModel& model, const std::vector<Block>& blocks,
                             const std::vector<Rational>& eps) {
  const std::vector<std::size_t> indices = select_indices(model, blocks);
  if (eps.size() < indices.size()) {
    throw DomainError("need " + std::to_string(indices.size()) + " thresholds, got " +
                      std::to_string(eps.size()));
  }
  for (const Rational& e : eps) {
    if (e <= 0) throw DomainError("thresholds must be positive");
  }
  const FamilySpec plus = FamilySpec::plus(model.family());
  const std::vector<Index> points = all_points(model);
  const auto values = value_table(model, blocks, indices, points);
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<Index> large;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (abs(values[p][i]) >= eps[i]) large.push_back(static_cast<Index>(indices[i]));
    }
    FiniteSet set(std::move(large));
    if (!member(plus, set)) {
      throw InvariantError("large-value set " + set.to_string() + " at " +
                           model.node(points[p]).to_string() + " is not in " + plus.to_string());
    }
  }
  std::vector<Index> m(indices.begin(), indices.end());
  return FiniteSet(std::move(m));
}

UpperEstimateResult upper_estimate_check(const NodeModel& model, const std::vector<Block>& blocks,
                                         const FiniteSet& m, const FamilySpec& fam,
                                         const Rational& eps, std::size_t trials, std::uint64_t seed) {
  if (eps <= 0 || eps >= 1) throw DomainError("upper estimate needs 0 < eps < 1");
  if (m.size() > 16) throw BudgetExceeded("upper estimate enumerates subsets of at most 16 indices");
  std::vector<std::size_t> indices(m.begin(), m.end());
  checked_indices(blocks, indices);
  for (std::size_t i : indices) require_in_model(model, blocks[i - 1]);

  std::vector<const Vector*> used;
  for (std::size_t i : indices) used.push_back(&blocks[i - 1]);
  const std::vector<Index> points = evaluation_points(used);
  const auto values = value_table(model, blocks, indices, points);

  // Position sets F with (m_i)_{i∈F} ∈ fam.
  std::vector<std::vector<std::size_t>> admissible;
  const std::size_t k = indices.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Index> image;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        image.push_back(m[i]);
        positions.push_back(i);
      }
    }
    if (member(fam, FiniteSet(std::move(image)))) admissible.push_back(std::move(positions));
  }

  const Rational constant = Rational(2) / (Rational(1) - eps);
  UpperEstimateResult result;
  result.trials = trials;
  result.seed = seed;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> a(k);
    for (auto& x : a) x = random_rational(rng, 10, 10, false);
    Rational lhs = 0;
    Rational best = 0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      Rational total = 0;
      for (std::size_t i = 0; i < k; ++i) total += a[i] * values[p][i];
      lhs = std::max(lhs, abs(total));
      for (const auto& positions : admissible) {
        Rational part = 0;
        for (std::size_t i : positions) part += a[i] * values[p][i];
        best = std::max(best, abs(part));
      }
    }
    const Rational rhs = constant * best;
    if (lhs > rhs) {
      result.pass = false;
      result.witness = UpperEstimateWitness{std::move(a), lhs, rhs};
      return result;
    }
  }
  return result;
}

FamilySpec intersection_family(const NodeModel& model, const std::vector<Block>& blocks,
                               const std::vector<Rational>& thresholds) {
  if (thresholds.size() < blocks.size()) {
    throw DomainError("need one threshold per block");
  }
  for (const Block& b : blocks) require_in_model(model, b);
  std::vector<std::size_t> indices(blocks.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i + 1;
  const std::vector<Index> points = all_points(model);
  const auto values = value_table(model, blocks, indices, points);
  std::vector<FiniteSet> generators;
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<Index> large;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (abs(values[p][i]) >= thresholds[i]) large.push_back(static_cast<Index>(i + 1));
    }
    generators.emplace_back(std::move(large));
  }
  return FamilySpec::explicit_family(std::move(generators));
}

}  // namespace skit

namespace skit {

std::vector<Block> random_node_blocks(const NodeModel& model, Rng& rng, std::size_t max_length) {
  if (max_length == 0) throw DomainError("block length must be positive");
  const Index size = static_cast<Index>(model.size());
  std::vector<Block> out;
  for (Index lo = 1; lo <= size;) {
    const Index hi = std::min(size, lo + uniform_int(rng, 1, static_cast<std::int64_t>(max_length)) - 1);
    Block b;
    for (Index j = lo; j <= hi; ++j) {
      if (uniform_int(rng, 0, 1) == 1) b.set(j, random_rational(rng, 10, 10, true));
    }
    if (b.is_zero()) b.set(uniform_int(rng, lo, hi), random_rational(rng, 10, 10, true));
    b /= sup_norm(model, b);
    out.push_back(std::move(b));
    lo = hi + 1;
  }
  return out;
}

}  // namespace skit
