#pragma once

// The node basis of C(F) for a regular family F, truncated to {1..window}.
//
// Points of F are its members. The node basis vector e_j is the indicator of
// the cylinder G_{a_j} = {b ∈ F : a_j is an initial segment of b}, where
// (a_j) is the anti-lexicographic enumeration of F with a_1 = ∅:
//
//   F < G  iff  max F < max G, or max F = max G and F \ {max F} < G \ {max G}
//
// A function sum_j c_j e_j takes at a point g the value sum of c_j over the
// nodes a_j that are initial segments of g. Its value at g equals its value
// at the longest support node prefixing g (or at ∅), so the sup-norm is a
// maximum over ∅ and the support nodes.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "skit/random.hpp"
#include "skit/setfam.hpp"
#include "skit/vector.hpp"

namespace skit {

inline constexpr std::string_view kNodeEnumeration = "antilex-v1";

// True iff a precedes b in the anti-lexicographic order.
bool antilex_less(const FiniteSet& a, const FiniteSet& b);

class NodeModel {
 public:
  // Members of fam inside {1..window}, grown by end-extension (fam must be
  // hereditary). BudgetExceeded beyond max_nodes.
  NodeModel(FamilySpec fam, Index window, std::size_t max_nodes = 1u << 20);

  const FamilySpec& family() const { return fam_; }
  Index window() const { return window_; }
  std::size_t size() const { return nodes_.size(); }

  // 1-based; RangeError outside 1..size().
  const FiniteSet& node(Index j) const;
  std::optional<Index> index_of(const FiniteSet& node) const;
  // Index of node j with its maximum removed; 0 for ∅.
  Index parent(Index j) const;

  const std::vector<FiniteSet>& nodes() const { return nodes_; }

 private:
  FamilySpec fam_;
  Index window_;
  std::vector<FiniteSet> nodes_;
  std::vector<Index> parents_;
  std::map<FiniteSet, Index> index_;
};

struct NodeFunction {
  std::shared_ptr<const NodeModel> model;
  Vector coefficients;  // keyed by node index
};

std::vector<FiniteSet> antilex_enumerate(const FamilySpec& fam, Index window);

// Value at gamma; DomainError when gamma ∉ fam.
Rational evaluate(const NodeModel& model, const Vector& f, const FiniteSet& gamma);
inline Rational evaluate(const NodeFunction& f, const FiniteSet& gamma) {
  return evaluate(*f.model, f.coefficients, gamma);
}

// Value at node j of the model.
Rational evaluate_at_node(const NodeModel& model, const Vector& f, Index j);

// Node indices where the sup-norm of f (or of anything supported inside
// supp f) is attained: 1 (∅) and supp f.
std::vector<Index> evaluation_points(const Vector& f);
std::vector<Index> evaluation_points(const std::vector<const Vector*>& fs);

// RangeError when f has a coefficient beyond the model.
Rational sup_norm(const NodeModel& model, const Vector& f);
inline Rational sup_norm(const NodeFunction& f) { return sup_norm(*f.model, f.coefficients); }

// Greedy 2 = n_1 < n_2 < ... with max b < n_{i+1} for every node b in the
// support of u_{n_i}, as long as n_i <= blocks.size(). Indices are 1-based
// positions in `blocks`. DomainError for fewer than two blocks or blocks that
// are not successive.
std::vector<std::size_t> select_indices(const NodeModel& model, const std::vector<Block>& blocks);

// First node g of the model (if any) for which
// {n_i : u_{n_i}(g) != 0} ∉ fam⁺.
std::optional<FiniteSet> selection_violation(const NodeModel& model, const std::vector<Block>& blocks,
                                             const std::vector<std::size_t>& indices);

// M = (m_i) from select_indices such that for every point g of the model
// {m_i : |u_{m_i}(g)| >= eps_i} ∈ fam⁺; the property is re-verified and a
// failure is an InvariantError. eps must cover every selected index.
FiniteSet select_subsequence(const NodeModel& model, const std::vector<Block>& blocks,
                             const std::vector<Rational>& eps);

struct UpperEstimateWitness {
  std::vector<Rational> coefficients;
  Rational lhs;
  Rational rhs;
};

struct UpperEstimateResult {
  bool pass = true;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<UpperEstimateWitness> witness;
};

// For random coefficient vectors a:
//   ||sum_i a_i u_{m_i}|| <= 2/(1-eps) * max{ ||sum_{i∈F} a_i u_{m_i}|| : {m_i : i∈F} ∈ fam }.
// Requires 0 < eps < 1 and at most 16 selected indices.
UpperEstimateResult upper_estimate_check(const NodeModel& model, const std::vector<Block>& blocks,
                                         const FiniteSet& m, const FamilySpec& fam,
                                         const Rational& eps, std::size_t trials, std::uint64_t seed);

// Successive blocks covering node indices 1..size(), each of length at most
// max_length with random nonzero rational coefficients on a random nonempty
// part of its range, normalized in the sup-norm.
std::vector<Block> random_node_blocks(const NodeModel& model, Rng& rng, std::size_t max_length);

// Hereditary family of block-index sets F for which some point g has
// |u_n(g)| >= thresholds_n for all n ∈ F.
FamilySpec intersection_family(const NodeModel& model, const std::vector<Block>& blocks,
                               const std::vector<Rational>& thresholds);

}  // namespace skit
