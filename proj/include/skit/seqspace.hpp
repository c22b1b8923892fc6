#pragma once

// Norms on c00 and the spreading-model constants of block sequences.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skit/nodecont.hpp"
#include "skit/ordinal.hpp"
#include "skit/setfam.hpp"
#include "skit/vector.hpp"

namespace skit {

class NormOracle {
 public:
  enum class Kind { sup, ell1, schreier, node_sup, custom };
  using Custom = std::function<Rational(const Vector&)>;

  static NormOracle sup();
  static NormOracle ell1();
  // ||v||_F = max { sum_{i∈F} |a_i| : F ∈ fam }; fam must be hereditary.
  static NormOracle schreier(FamilySpec fam);
  // e_j is the j-th node basis vector of the model.
  static NormOracle node_sup(std::shared_ptr<const NodeModel> model);
  // Arbitrary norm supplied by the caller; `name` identifies it in output.
  static NormOracle custom(std::string name, Custom fn);

  Kind kind() const { return kind_; }
  const FamilySpec& family() const;
  const NodeModel& model() const;
  std::shared_ptr<const NodeModel> model_ptr() const { return model_; }
  std::string to_string() const;

  Rational operator()(const Vector& v) const;

 private:
  NormOracle() = default;

  Kind kind_ = Kind::sup;
  std::optional<FamilySpec> fam_;
  std::shared_ptr<const NodeModel> model_;
  std::string name_;
  Custom custom_;
};

Rational norm(const NormOracle& oracle, const Vector& v);

// Schreier-kind norm by depth-first search over the end-extension tree of
// fam inside supp v, pruned by the remaining absolute mass.
Rational family_norm(const FamilySpec& fam, const Vector& v);

// Minimum supports of the blocks; DomainError unless successive.
FiniteSet min_supports(const std::vector<Block>& blocks);
bool admissible(const FamilySpec& fam, const std::vector<Block>& blocks);
bool maximally_admissible(const FamilySpec& fam, const std::vector<Block>& blocks);

// Nonempty sets of block positions within the first `depth` blocks whose
// blocks are S_xi-admissible, in lexicographic order.
std::vector<FiniteSet> admissible_positions(const std::vector<Block>& blocks, const Ordinal& xi,
                                            std::size_t depth);

struct C0Bound {
  Rational value;
  FiniteSet positions;
  std::vector<int> signs;
};

// max over S_xi-admissible F within the first `depth` blocks and signs s of
// ||sum_{i∈F} s_i u_i||. The norm is convex in the coefficients, so its
// maximum over the box [-1,1]^F sits at a vertex.
C0Bound c0_constant_lower(const std::vector<Block>& blocks, const Ordinal& xi,
                          const NormOracle& oracle, std::size_t depth);

struct SpreadingWitness {
  FiniteSet positions;
  std::vector<Rational> coefficients;
  Rational norm;
  Rational bound;  // delta * sum |a_i|
};

struct SpreadingResult {
  bool pass = true;
  std::size_t depth = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t sign_cases = 0;
  std::optional<SpreadingWitness> witness;
};

// Looks for ||sum_{i∈F} a_i u_i|| < delta * sum |a_i| with F S_xi-admissible
// within `depth` blocks: all sign vectors, then `trials` random rational
// coefficient vectors. A pass only reports the search budget.
SpreadingResult l1_spreading_check(const std::vector<Block>& blocks, const Ordinal& xi,
                                   const Rational& delta, const NormOracle& oracle,
                                   std::size_t depth, std::size_t trials, std::uint64_t seed);

// ||v restricted to I|| / ||v||; DomainError when ||v|| = 0.
Rational unconditionality_ratio(const NormOracle& oracle, const Vector& v, const FiniteSet& indices);

// The first n unit vectors e_1..e_n as blocks.
std::vector<Block> unit_blocks(std::size_t n);

}  // namespace skit
