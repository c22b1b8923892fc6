#pragma once

// (eps, alpha, beta)-decompositions, (beta, p, eps)-largeness over the node
// basis, and the admissibility inequality for blocks of the node basis.

#include <optional>
#include <string>
#include <vector>

#include "skit/averages.hpp"
#include "skit/nodecont.hpp"

namespace skit {

// parent = sum_i lambda_i u_i with u_1 < ... < u_n normalized, such that
//  (1) (u_i)_{i∈I} is S_beta-admissible, each u_i (i∈I) is an alpha-average,
//      and ||sum_{i∉I} lambda_i u_i||_{ell1} < eps;
//  (2) |lambda_i - lambda_j| < eps for i, j ∈ I.
struct Decomposition {
  Vector parent;
  std::vector<Block> parts;
  std::vector<Rational> lambdas;
  FiniteSet core;  // I, 1-based positions
  Rational eps;
  Ordinal alpha;
  Ordinal beta;

  // max_{i∈I} lambda_i; zero for an empty core.
  Rational weight() const;
};

struct DecompositionCheck {
  bool holds = true;
  std::string clause;  // first failed clause
  std::string detail;
};

// Every clause checked exactly. A core part counts as an alpha-average when
// it equals alpha_1^N for N = its support followed by every larger integer.
DecompositionCheck verify_decomposition(const Decomposition& d, const FamilySpec& fam,
                                        const NormOracle& oracle, const AverageBudget& budget = {});

// alpha_1^M for the ordinal alpha + 1, split into its alpha-average children
// with equal coefficients 1/normalizer and I = all children.
Decomposition build_successor_decomposition(const FamilySpec& fam, const NormOracle& oracle,
                                            const Ordinal& alpha, const IntStream& stream,
                                            const Rational& eps, const AverageBudget& budget = {});

struct LargeWitness {
  FiniteSet indices;  // I
  FiniteSet point;    // t
};

struct LargeResult {
  bool large = true;
  std::size_t sets_checked = 0;
  std::optional<LargeWitness> witness;
};

// u = sum_i a_i f_i over the node basis, a_i >= 0. For every I ⊆ supp u that
// is a union of at most p successive members of S_beta and every point t:
//   sum_{i∈I} a_i f_i(t) <= eps + sum_{i∉I} a_i f_i(t).
// BudgetExceeded when |supp u| > max_support.
LargeResult is_large(const Vector& u, const NodeModel& model, const Ordinal& beta, std::size_t p,
                     const Rational& eps, std::size_t max_support = 20);

enum class L21Status { holds, fails, not_applicable };

struct L21Result {
  L21Status status = L21Status::holds;
  std::string reason;
  std::optional<FiniteSet> point;  // where the estimate failed
  Rational lhs;
  Rational rhs;
};

// Checks the estimate
//   |sum_i b_i sum_{s∈J} a^i_s f_s(t)|
//     <= max{|sum_{i∈I} b_i u_i(t)| : (u_i)_{i∈I} G⁺-admissible}
//        + (sum_i delta_i) max_i |b_i| + sum_i |b_i| sum_{s∉J} |a^i_s| |f_s(t)|
// at `point` (every relevant point when absent), after confirming that the
// blocks are normalized, J ∈ G[S_alpha] and the hypothesis on delta holds.
// Otherwise the result is not_applicable with the reason.
L21Result verify_L21(const NodeModel& model, const std::vector<Block>& blocks, const FamilySpec& g,
                     const Ordinal& alpha, const std::vector<Rational>& delta, const FiniteSet& j,
                     const std::vector<Rational>& b, const std::optional<FiniteSet>& point = std::nullopt);

std::string to_string(L21Status status);

}  // namespace skit
