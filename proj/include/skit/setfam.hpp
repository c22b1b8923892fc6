#pragma once

// Symbolic families of finite subsets of N with decidable membership.
//
// A FamilySpec is an immutable expression tree:
//   Singletons              S_0 = {∅} ∪ {{n}}
//   Schreier(xi)            S_xi
//   Convolution(F2, F1)     F2[F1]: unions G1 < ... < Gn of F1-sets whose minima form an F2-set
//   Plus(F)                 F+ = {G : G \ {min G} ∈ F}
//   Restrict(F, M)          F[M] = F ∩ [M]^{<∞}
//   Explicit(generators)    hereditary closure of a finite list
//
// Predicates over infinite families (hereditary, spreading) are decided on a
// finite window {1..W} only; results are window certificates, not theorems.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skit/ordinal.hpp"
#include "skit/sets.hpp"

namespace skit {

class FamilySpec {
 public:
  struct Singletons {};
  struct Schreier {
    Ordinal xi;
  };
  struct Convolution {
    std::shared_ptr<const FamilySpec> outer;
    std::shared_ptr<const FamilySpec> inner;
  };
  struct Plus {
    std::shared_ptr<const FamilySpec> base;
  };
  struct Restrict {
    std::shared_ptr<const FamilySpec> base;
    IntStream stream;
  };
  struct Explicit {
    std::vector<FiniteSet> generators;
  };
  using Node = std::variant<Singletons, Schreier, Convolution, Plus, Restrict, Explicit>;

  static FamilySpec singletons();
  static FamilySpec schreier(Ordinal xi);
  static FamilySpec convolution(FamilySpec outer, FamilySpec inner);
  static FamilySpec plus(FamilySpec base);
  static FamilySpec restrict(FamilySpec base, IntStream stream);
  static FamilySpec explicit_family(std::vector<FiniteSet> generators);

  const Node& node() const { return *node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }

  // Compact human-readable form, e.g. "S_w[S_1]" or "(S_1)+".
  std::string to_string() const;

 private:
  explicit FamilySpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
};

bool member(const FamilySpec& fam, const FiniteSet& set);

// Single-point maximality test: set ∪ {max set + 1} ∉ fam. Exact for stable
// families (every Schreier family, and everything built from them by
// convolution and plus). DomainError for the empty set or non-members.
bool is_maximal(const FamilySpec& fam, const FiniteSet& set);

struct WindowCertificate {
  bool holds = true;
  Index window = 0;
  std::size_t max_size = 0;
  // On failure: a member and a non-member derived from it.
  std::optional<std::pair<FiniteSet, FiniteSet>> witness;
};

WindowCertificate is_hereditary(const FamilySpec& fam, Index window, std::size_t max_size);
WindowCertificate is_spreading(const FamilySpec& fam, Index window, std::size_t max_size);
// ∅ and every singleton {n}, n <= window, are members.
WindowCertificate contains_singletons(const FamilySpec& fam, Index window);

// Order of the family as a Cantor–Bendixson index: w^xi for S_xi, 1 for S_0,
// xi1*xi2 for F2[F1] with F1 of order xi1, xi+1 for F+.
// UnsupportedSpec for Restrict and Explicit.
Ordinal symbolic_order(const FamilySpec& fam);

// Longest chain ∅ ⊊ F1 ⊊ ... ⊊ Fk of end-extensions inside {1..window};
// returns k. Assumes fam is hereditary.
std::size_t tree_rank(const FamilySpec& fam, Index window);

FamilySpec restrict(const FamilySpec& fam, const IntStream& stream);

// {m_i : i ∈ indices} for the increasing enumeration (m_i) of the stream.
FiniteSet image(const IntStream& stream, const FiniteSet& indices);
// Same for a finite enumeration; RangeError when an index exceeds its size.
FiniteSet image(const FiniteSet& enumeration, const FiniteSet& indices);

// Members of fam contained in {1..window} with at most max_size elements.
std::vector<FiniteSet> members_in_window(const FamilySpec& fam, Index window,
                                         std::size_t max_size);

// Minimal number of successive pieces G1 < ... < Gk, each in fam, that
// partition `set` by greedy maximal initial segments. Exact for hereditary
// fam. nullopt if some singleton of `set` is not a member.
std::optional<std::size_t> greedy_part_count(const FamilySpec& fam, const FiniteSet& set);

}  // namespace skit
