#pragma once

// Normalized transfinite averages alpha_n^M of the unit vector basis (e_n)
// with respect to a regular, stable family F and a norm oracle.
//
//   alpha = 0:      alpha_n^M = e_{m_n}
//   alpha = b + 1:  alpha_1^M = sum_{i<=k} b_i^M / ||.||, with
//                   {min supp b_i^M : i <= k} maximal in F
//   alpha limit:    alpha_1^M = e_1 if min M = 1, otherwise
//                   u / ||u||, u = (1/m) e_m + [alpha_m]_1^{M \ {m}}, m = min M
//
// and alpha_{n+1}^M = alpha_1^{M_{n+1}}, M_{n+1} = {m ∈ M : m > max supp alpha_n^M}.
// [alpha_m] uses the canonical associated sequence of the limit alpha.

#include <optional>
#include <utility>
#include <vector>

#include "skit/ordinal.hpp"
#include "skit/seqspace.hpp"
#include "skit/setfam.hpp"

namespace skit {

struct AverageNode {
  Ordinal ordinal;
  IntStream source = IntStream::naturals();
  std::size_t index_n = 1;
  Index basis_index = 0;  // e_{basis_index} when ordinal is 0
  std::vector<AverageNode> children;
  std::vector<Rational> coefficients;  // one per child
  Rational normalizer = 1;
  Vector vector;
  // Basis vectors materialized to produce this node, including the averages
  // alpha_1..alpha_{n-1} that locate it.
  std::size_t forced = 0;
};

struct AverageBudget {
  std::size_t max_forced = 1u << 16;
};

AverageNode average(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                    const IntStream& stream, std::size_t n, const AverageBudget& budget = {});

// The first n averages alpha_1^M < ... < alpha_n^M.
std::vector<AverageNode> averages(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                                  const IntStream& stream, std::size_t n, const AverageBudget& budget = {});

// Structural invariants of a computed node: unit norm, children successive
// with supports covering the support. Returns a description of the first
// violation.
std::optional<std::string> average_violation(const AverageNode& node, const NormOracle& oracle);

// supp vector ∈ S_alpha; UnsupportedSpec unless fam is S_1.
bool check_support_schreier(const AverageNode& node, const FamilySpec& fam);

struct Reindexed {
  IntStream stream;  // N with alpha_n^M = alpha_1^N
  AverageNode first;
};

// N = supp alpha_n^M followed by the part of M above it; the identity
// alpha_n^M = alpha_1^N is recomputed and a mismatch is an InvariantError.
Reindexed reindex_as_first(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                           const IntStream& stream, std::size_t n, const AverageBudget& budget = {});

struct UniquenessResult {
  bool holds = true;
  std::size_t mismatch = 0;  // 1-based piece index on failure
};

// alpha_i^M = alpha_{k_i}^{L_i} for each piece (L_i, k_i). DomainError unless
// the pieces are successive and their supports union to an initial segment
// of M.
UniquenessResult check_uniqueness(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                                  const IntStream& stream,
                                  const std::vector<std::pair<IntStream, std::size_t>>& pieces,
                                  const AverageBudget& budget = {});

struct PrefixNorm {
  std::size_t n = 0;
  Rational value;
};

// n_L: least n with {min supp alpha_i^L : i <= n} maximal in S_gamma;
// value = ||sum_{i<=n_L} alpha_i^L||.
PrefixNorm prefix_norm(const FamilySpec& fam, const NormOracle& oracle, const Ordinal& alpha,
                       const Ordinal& gamma, const IntStream& stream, const AverageBudget& budget = {});

// supp followed by the part of the stream above max supp.
IntStream stream_through(const FiniteSet& support, const IntStream& stream);

}  // namespace skit
