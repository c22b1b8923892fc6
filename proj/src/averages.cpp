#include "skit/averages.hpp"

#include "skit/error.hpp"
#include "skit/schreier.hpp"

namespace skit {

namespace {

class Builder {
 public:
  Builder(const FamilySpec& fam, const NormOracle& oracle, const AverageBudget& budget)
      : fam_(fam), oracle_(oracle), budget_(budget) {}

  std::size_t forced() const { return forced_; }

  AverageNode first(const Ordinal& alpha, const IntStream& stream) {
    if (alpha.is_zero()) return leaf(stream.min(), stream, 1);
    if (auto beta = predecessor(alpha)) return successor(alpha, *beta, stream);
    return limit(alpha, stream);
  }

  // alpha_1..alpha_n of the stream, each carrying its position.
  std::vector<AverageNode> sequence(const Ordinal& alpha, const IntStream& stream, std::size_t n) {
    std::vector<AverageNode> out;
    IntStream rest = stream;
    for (std::size_t i = 1; i <= n; ++i) {
      AverageNode node = first(alpha, rest);
      node.source = stream;
      node.index_n = i;
      if (i < n) rest = rest.after(node.vector.max_support());
      out.push_back(std::move(node));
    }
    return out;
  }

 private:
  AverageNode leaf(Index m, const IntStream& stream, std::size_t n) {
    if (++forced_ > budget_.max_forced) {
      throw BudgetExceeded("average construction forced more than " +
                           std::to_string(budget_.max_forced) + " basis vectors");
    }
    AverageNode node;
    node.source = stream;
    node.index_n = n;
    node.basis_index = m;
    node.vector = Vector::unit(m);
    return node;
  }

  void normalize(AverageNode& node, Vector u) {
    node.normalizer = oracle_(u);
    if (node.normalizer == 0) {
      throw InvariantError("zero norm while normalizing a " + node.ordinal.to_string() + "-average");
    }
    u /= node.normalizer;
    node.vector = std::move(u);
  }

  AverageNode successor(const Ordinal& alpha, const Ordinal& beta, const IntStream& stream) {
    AverageNode node;
    node.ordinal = alpha;
    node.source = stream;
    std::vector<Index> mins;
    Vector sum;
    IntStream rest = stream;
    for (std::size_t i = 1;; ++i) {
      AverageNode child = first(beta, rest);
      child.source = stream;
      child.index_n = i;
      mins.push_back(child.vector.min_support());
      const FiniteSet mins_set(mins);
      if (!member(fam_, mins_set)) {
        throw InvariantError("minima " + mins_set.to_string() + " left " + fam_.to_string() +
                             " before becoming maximal");
      }
      sum += child.vector;
      const Index top = child.vector.max_support();
      node.children.push_back(std::move(child));
      node.coefficients.emplace_back(1);
      if (is_maximal(fam_, mins_set)) break;
      rest = rest.after(top);
    }
    normalize(node, std::move(sum));
    return node;
  }

  AverageNode limit(const Ordinal& alpha, const IntStream& stream) {
    AverageNode node;
    node.ordinal = alpha;
    node.source = stream;
    const Index m = stream.min();
    node.children.push_back(leaf(m, stream, 1));
    if (m == 1) {
      node.coefficients.emplace_back(1);
      normalize(node, Vector::unit(1));
      return node;
    }
    const Rational weight(1, static_cast<unsigned long>(m));
    node.coefficients.push_back(weight);
    const IntStream rest = stream.after(m);
    AverageNode tail = first(associated_sequence(alpha, static_cast<std::uint64_t>(m)), rest);
    Vector u = weight * Vector::unit(m);
    u += tail.vector;
    node.children.push_back(std::move(tail));
    node.coefficients.emplace_back(1);
    normalize(node, std::move(u));
    return node;
  }

  const FamilySpec& fam_;
  const NormOracle& oracle_;
  const AverageBudget& budget_;
  std::size_t forced_ = 0;
};

}  // namespace

AverageNode average(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                    const IntStream& stream, std::size_t n, const AverageBudget& budget) {
  if (n == 0) throw DomainError("average positions start at 1");
  Builder builder(fam, oracle, budget);
  std::vector<AverageNode> seq = builder.sequence(alpha, stream, n);
  AverageNode node = std::move(seq.back());
  node.forced = builder.forced();
  return node;
}

std::vector<AverageNode> averages(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                                  const IntStream& stream, std::size_t n, const AverageBudget& budget) {
  Builder builder(fam, oracle, budget);
  std::vector<AverageNode> seq = builder.sequence(alpha, stream, n);
  if (!seq.empty()) seq.back().forced = builder.forced();
  return seq;
}

std::optional<std::string> average_violation(const AverageNode& node, const NormOracle& oracle) {
  const std::string where = node.ordinal.to_string() + "-average at " + node.vector.support().to_string();
  if (oracle(node.vector) != 1) return "norm of " + where + " is " + format_rational(oracle(node.vector));
  if (node.ordinal.is_zero()) {
    if (node.vector != Vector::unit(node.basis_index)) return where + " is not e_" + std::to_string(node.basis_index);
    return std::nullopt;
  }
  if (node.children.size() != node.coefficients.size()) return where + " has mismatched coefficients";
  Vector u;
  std::vector<Block> parts;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (auto bad = average_violation(node.children[i], oracle)) return bad;
    u += node.coefficients[i] * node.children[i].vector;
    parts.push_back(node.children[i].vector);
  }
  try {
    require_successive(parts);
  } catch (const DomainError& e) {
    return where + ": children " + e.what();
  }
  u /= node.normalizer;
  if (u != node.vector) return where + " differs from its normalized children";
  return std::nullopt;
}

bool check_support_schreier(const AverageNode& node, const FamilySpec& fam) {
  const auto* s = fam.as<FamilySpec::Schreier>();
  if (!s || s->xi != Ordinal(1)) {
    throw UnsupportedSpec("support check applies to averages over S_1, not " + fam.to_string());
  }
  return s_member(node.ordinal, node.vector.support());
}

IntStream stream_through(const FiniteSet& support, const IntStream& stream) {
  if (support.empty()) return stream;
  const IntStream rest = stream.after(support.max());
  std::vector<Index> prefix = support.elements();
  prefix.insert(prefix.end(), rest.prefix().begin(), rest.prefix().end());
  return IntStream(FiniteSet(std::move(prefix)), rest.tail_start(), rest.tail_step());
}

Reindexed reindex_as_first(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                           const IntStream& stream, std::size_t n, const AverageBudget& budget) {
  const AverageNode node = average(fam, oracle, alpha, stream, n, budget);
  IntStream through = stream_through(node.vector.support(), stream);
  AverageNode first = average(fam, oracle, alpha, through, 1, budget);
  if (first.vector != node.vector) {
    throw InvariantError("alpha_" + std::to_string(n) + " of " + stream.to_string() +
                         " differs from alpha_1 of " + through.to_string());
  }
  return {std::move(through), std::move(first)};
}

UniquenessResult check_uniqueness(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                                  const IntStream& stream,
                                  const std::vector<std::pair<IntStream, std::size_t>>& pieces,
                                  const AverageBudget& budget) {
  std::vector<Block> given;
  for (const auto& [l, k] : pieces) given.push_back(average(fam, oracle, alpha, l, k, budget).vector);
  require_successive(given);
  std::vector<Index> covered;
  for (const Block& b : given) {
    for (const auto& e : b.entries()) covered.push_back(e.first);
  }
  if (FiniteSet(covered) != stream.take(covered.size())) {
    throw DomainError("piece supports do not form an initial segment of " + stream.to_string());
  }
  const std::vector<AverageNode> own = averages(fam, oracle, alpha, stream, given.size(), budget);
  UniquenessResult result;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (own[i].vector != given[i]) {
      result.holds = false;
      result.mismatch = i + 1;
      break;
    }
  }
  return result;
}

PrefixNorm prefix_norm(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                       const Ordinal& gamma, const IntStream& stream, const AverageBudget& budget) {
  Builder builder(fam, oracle, budget);
  IntStream rest = stream;
  std::vector<Index> mins;
  Vector sum;
  PrefixNorm result;
  while (true) {
    AverageNode node = builder.first(alpha, rest);
    mins.push_back(node.vector.min_support());
    sum += node.vector;
    ++result.n;
    if (s_maximal(gamma, FiniteSet(mins))) break;
    rest = rest.after(node.vector.max_support());
  }
  result.value = oracle(sum);
  return result;
}

}  // namespace skit
