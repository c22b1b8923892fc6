#include "skit/largeness.hpp"

#include <algorithm>

#include "skit/error.hpp"
#include "skit/schreier.hpp"

namespace skit {

Rational Decomposition::weight() const {
  Rational w = 0;
  for (Index i : core) {
    const Rational& l = lambdas.at(static_cast<std::size_t>(i - 1));
    if (l > w) w = l;
  }
  return w;
}

namespace {

DecompositionCheck fail(std::string clause, std::string detail) {
  return {false, std::move(clause), std::move(detail)};
}

}  // namespace

DecompositionCheck verify_decomposition(const Decomposition& d, const FamilySpec& fam,
                                        const NormOracle& oracle, const AverageBudget& budget) {
  const std::size_t n = d.parts.size();
  if (n == 0 || d.lambdas.size() != n) return fail("shape", "need one positive scalar per part");
  if (!d.core.empty() && (d.core.min() < 1 || d.core.max() > static_cast<Index>(n))) {
    return fail("shape", "I = " + d.core.to_string() + " is not a subset of 1.." + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.lambdas[i] <= 0) return fail("positive", "lambda_" + std::to_string(i + 1) + " is not positive");
  }
  try {
    require_successive(d.parts);
  } catch (const DomainError& e) {
    return fail("successive", e.what());
  }
  if (oracle(d.parent) != 1) return fail("normalized", "the decomposed block is not normalized");
  for (std::size_t i = 0; i < n; ++i) {
    if (oracle(d.parts[i]) != 1) return fail("normalized", "u_" + std::to_string(i + 1) + " is not normalized");
  }
  Vector sum;
  for (std::size_t i = 0; i < n; ++i) sum += d.lambdas[i] * d.parts[i];
  if (sum != d.parent) return fail("sum", "sum of lambda_i u_i differs from the block");

  std::vector<Block> core_parts;
  for (Index i : d.core) core_parts.push_back(d.parts[static_cast<std::size_t>(i - 1)]);
  const FiniteSet mins = min_supports(core_parts);
  if (!s_member(d.beta, mins)) {
    return fail("(1) admissible", "minima " + mins.to_string() + " not in S_" + d.beta.to_string());
  }
  for (Index i : d.core) {
    const Block& part = d.parts[static_cast<std::size_t>(i - 1)];
    const IntStream candidate = stream_through(part.support(), IntStream::naturals());
    const AverageNode rebuilt = average(fam, oracle, d.alpha, candidate, 1, budget);
    if (rebuilt.vector != part) {
      return fail("(1) average", "u_" + std::to_string(i) + " is not an " + d.alpha.to_string() +
                                     "-average from any declared stream");
    }
  }
  Vector tail;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!d.core.contains(static_cast<Index>(i))) tail += d.lambdas[i - 1] * d.parts[i - 1];
  }
  if (!(tail.ell1() < d.eps)) {
    return fail("(1) tail", "ell1 mass outside I is " + format_rational(tail.ell1()) + ", not below " +
                                format_rational(d.eps));
  }
  if (!d.core.empty()) {
    Rational lo = d.lambdas[static_cast<std::size_t>(d.core.min() - 1)];
    Rational hi = lo;
    for (Index i : d.core) {
      lo = std::min(lo, d.lambdas[static_cast<std::size_t>(i - 1)]);
      hi = std::max(hi, d.lambdas[static_cast<std::size_t>(i - 1)]);
    }
    if (!(hi - lo < d.eps)) {
      return fail("(2)", "core scalars spread by " + format_rational(hi - lo) + ", not below " +
                             format_rational(d.eps));
    }
  }
  return {};
}

Decomposition build_successor_decomposition(const FamilySpec& fam, const NormOracle& oracle,
                                            const Ordinal& alpha, const IntStream& stream,
                                            const Rational& eps, const AverageBudget& budget) {
  if (eps <= 0) throw DomainError("eps must be positive");
  const Ordinal next = add(alpha, Ordinal(1));
  const AverageNode node = average(fam, oracle, next, stream, 1, budget);
  Decomposition d;
  d.parent = node.vector;
  d.eps = eps;
  d.alpha = alpha;
  d.beta = Ordinal(1);
  std::vector<Index> core;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    d.parts.push_back(node.children[i].vector);
    d.lambdas.push_back(node.coefficients[i] / node.normalizer);
    core.push_back(static_cast<Index>(i + 1));
  }
  d.core = FiniteSet(std::move(core));
  return d;
}

namespace {

// active[p] = positions k (into supp) with node supp[k] an initial segment of point p.
std::vector<std::vector<bool>> activity(const NodeModel& model, const std::vector<Index>& supp,
                                        const std::vector<Index>& points) {
  std::vector<std::vector<bool>> active(points.size(), std::vector<bool>(supp.size(), false));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (Index k = points[p]; k != 0; k = model.parent(k)) {
      auto it = std::lower_bound(supp.begin(), supp.end(), k);
      if (it != supp.end() && *it == k) active[p][static_cast<std::size_t>(it - supp.begin())] = true;
    }
  }
  return active;
}

}  // namespace

LargeResult is_large(const Vector& u, const NodeModel& model, const Ordinal& beta, std::size_t p,
                     const Rational& eps, std::size_t max_support) {
  for (const auto& [i, a] : u.entries()) {
    if (a < 0) throw DomainError("largeness needs nonnegative coefficients");
    model.node(i);
  }
  if (u.size() > max_support) {
    throw BudgetExceeded("support of " + std::to_string(u.size()) + " exceeds the enumeration bound " +
                         std::to_string(max_support));
  }
  const FiniteSet support = u.support();
  const std::vector<Index>& supp = support.elements();
  const std::vector<Index> points = evaluation_points(u);
  const auto active = activity(model, supp, points);
  std::vector<Rational> a;
  for (Index i : supp) a.push_back(u.get(i));
  const FamilySpec pieces = FamilySpec::schreier(beta);

  LargeResult result;
  for (const FiniteSet& indices : subsets_of(support)) {
    const auto parts = greedy_part_count(pieces, indices);
    if (!parts || *parts > p) continue;
    ++result.sets_checked;
    for (std::size_t q = 0; q < points.size(); ++q) {
      Rational inside = 0;
      Rational outside = 0;
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (!active[q][k]) continue;
        (indices.contains(supp[k]) ? inside : outside) += a[k];
      }
      if (inside > eps + outside) {
        result.large = false;
        result.witness = LargeWitness{indices, model.node(points[q])};
        return result;
      }
    }
  }
  return result;
}

std::string to_string(L21Status status) {
  switch (status) {
    case L21Status::holds:
      return "holds";
    case L21Status::fails:
      return "fails";
    case L21Status::not_applicable:
      return "not_applicable";
  }
  return "";
}

namespace {

L21Result not_applicable(std::string reason) {
  L21Result r;
  r.status = L21Status::not_applicable;
  r.reason = std::move(reason);
  return r;
}

// sum over s of coef(s) * f_s(point), restricted by `keep`.
template <typename Keep>
Rational partial_value(const NodeModel& model, const Vector& v, Index point, Keep keep, bool absolute) {
  Rational total = 0;
  for (Index k = point; k != 0; k = model.parent(k)) {
    if (!keep(k)) continue;
    const Rational c = v.get(k);
    total += absolute ? abs(c) : c;
  }
  return total;
}

}  // namespace

L21Result verify_L21(const NodeModel& model, const std::vector<Block>& blocks, const FamilySpec& g,
                     const Ordinal& alpha, const std::vector<Rational>& delta, const FiniteSet& j,
                     const std::vector<Rational>& b, const std::optional<FiniteSet>& point) {
  const std::size_t n = blocks.size();
  if (n == 0) throw DomainError("verify_L21 needs at least one block");
  if (delta.size() != n || b.size() != n) throw DomainError("need one delta and one b per block");
  for (const Rational& d : delta) {
    if (d < 0) throw DomainError("delta must be nonnegative");
  }
  require_successive(blocks);
  for (std::size_t i = 0; i < n; ++i) {
    if (sup_norm(model, blocks[i]) != 1) {
      return not_applicable("u_" + std::to_string(i + 1) + " is not normalized");
    }
  }
  const FamilySpec blocks_family = FamilySpec::convolution(g, FamilySpec::schreier(alpha));
  if (!member(blocks_family, j)) {
    return not_applicable("J = " + j.to_string() + " is not in " + blocks_family.to_string());
  }

  std::vector<const Vector*> all;
  for (const Block& u : blocks) all.push_back(&u);
  std::vector<Index> points;
  if (point) {
    auto idx = model.index_of(*point);
    if (!idx) throw DomainError(point->to_string() + " is not a point of the model");
    points.push_back(*idx);
  } else {
    points = evaluation_points(all);
  }
  const std::vector<Index> hypothesis_points = evaluation_points(all);
  auto in_j = [&](Index s) { return j.contains(s); };
  auto off_j = [&](Index s) { return !j.contains(s); };

  // alpha = 0 has no associated sequence, so the hypothesis never applies.
  if (!alpha.is_zero()) {
    for (std::size_t i = 2; i <= n; ++i) {
      const Index k_prev = blocks[i - 2].max_support();
      const FiniteSet local = set_intersection(j, blocks[i - 1].support());
      bool applies = false;
      // For a successor alpha every alpha_j is alpha - 1.
      const Index last = alpha.is_successor() ? 1 : k_prev;
      for (Index jj = 1; jj <= last && !applies; ++jj) {
        const FamilySpec piece =
            FamilySpec::schreier(associated_sequence(alpha, static_cast<std::uint64_t>(jj)));
        const auto parts = greedy_part_count(piece, local);
        applies = parts && *parts <= static_cast<std::size_t>(k_prev);
      }
      if (!applies) continue;
      for (Index t : hypothesis_points) {
        const Rational lhs = abs(partial_value(model, blocks[i - 1], t, in_j, false));
        const Rational rhs = delta[i - 1] + partial_value(model, blocks[i - 1], t, off_j, true);
        if (lhs > rhs) {
          return not_applicable("hypothesis fails for u_" + std::to_string(i) + " at " +
                                model.node(t).to_string());
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> admissible_sets{{}};
  const FamilySpec plus = FamilySpec::plus(g);
  if (n > 20) throw BudgetExceeded("verify_L21 enumerates subsets of at most 20 blocks");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> chosen;
    std::vector<Index> mins;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        chosen.push_back(i);
        mins.push_back(blocks[i].min_support());
      }
    }
    if (member(plus, FiniteSet(std::move(mins)))) admissible_sets.push_back(std::move(chosen));
  }
  Rational delta_sum = 0;
  Rational b_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    delta_sum += delta[i];
    b_max = std::max(b_max, abs(b[i]));
  }

  L21Result result;
  for (Index t : points) {
    Rational inner = 0;
    Rational outside = 0;
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      inner += b[i] * partial_value(model, blocks[i], t, in_j, false);
      outside += abs(b[i]) * partial_value(model, blocks[i], t, off_j, true);
      values[i] = evaluate_at_node(model, blocks[i], t);
    }
    Rational best = 0;
    for (const auto& chosen : admissible_sets) {
      Rational s = 0;
      for (std::size_t i : chosen) s += b[i] * values[i];
      best = std::max(best, abs(s));
    }
    const Rational lhs = abs(inner);
    const Rational rhs = best + delta_sum * b_max + outside;
    if (t == points.front() || lhs - rhs > result.lhs - result.rhs) {
      result.lhs = lhs;
      result.rhs = rhs;
    }
    if (lhs > rhs) {
      result.status = L21Status::fails;
      result.point = model.node(t);
      result.lhs = lhs;
      result.rhs = rhs;
      return result;
    }
  }
  return result;
}

}  // namespace skit
