#pragma once

// Decision procedures for the Schreier families S_xi:
//
//   S_0         = {∅} ∪ singletons
//   S_{z+1}     = S_1[S_z]
//   S_xi (limit) = ∪_n {F ∈ S_{xi_n + 1} : n <= min F} ∪ {∅}
//
// where xi_n is the canonical associated sequence (see ordinal.hpp).

#include <optional>
#include <vector>

#include "skit/ordinal.hpp"
#include "skit/sets.hpp"

namespace skit {

bool s_member(const Ordinal& xi, const FiniteSet& set);

// F ∪ {max F + 1} ∉ S_xi. DomainError when F is empty or not in S_xi.
bool s_maximal(const Ordinal& xi, const FiniteSet& set);

// The first `count` parts of the decomposition of `stream` into successive
// maximal members of S_xi.
std::vector<FiniteSet> s_decompose(const Ordinal& xi, const IntStream& stream, std::size_t count);

struct ThresholdCertificate {
  Index threshold = 0;
  Index window = 0;
  std::size_t max_size = 0;
  // A set of S_alpha \ S_beta with minimum threshold-1, when threshold > 1.
  std::optional<FiniteSet> counterexample_below;
};

// Least n <= search_bound such that every F ∈ S_alpha with F ⊆ {n..n+window}
// and |F| <= max_size lies in S_beta. NotFound when none passes;
// DomainError unless alpha < beta.
ThresholdCertificate s_threshold(const Ordinal& alpha, const Ordinal& beta, Index search_bound,
                                 Index window, std::size_t max_size);

struct Le5Witness {
  Index m = 0;
  Index n = 0;
  FiniteSet tail;  // F, with {n} ∪ F maximal in S_alpha and {m} ∪ F ∈ S_alpha
};

struct Le5Result {
  bool holds = true;
  Index window = 0;
  std::size_t cases_checked = 0;
  std::optional<Le5Witness> witness;
};

// For all m < n <= window and nonempty F ⊆ {n+1..window} with {n} ∪ F maximal
// in S_alpha, checks {m} ∪ F ∉ S_alpha.
Le5Result check_le5(const Ordinal& alpha, Index window);

struct TransferResult {
  bool holds = true;
  // 1: F ∈ S_beta[S_alpha][M] but F \ {min F} ∉ S_{alpha+beta}
  // 2: F ∈ S_{alpha+beta}[M] but F \ {min F} ∉ S_beta[S_alpha]
  int failed_direction = 0;
  std::optional<FiniteSet> witness;
  std::size_t sets_checked = 0;
};

// Both inclusions of the transfer between S_beta[S_alpha] and S_{alpha+beta},
// for all F ⊆ M ∩ {1..window} with |F| <= max_size.
TransferResult check_transfer(const Ordinal& alpha, const Ordinal& beta, const IntStream& stream,
                              Index window, std::size_t max_size);

// Drops the per-thread membership cache.
void clear_schreier_cache();

}  // namespace skit
