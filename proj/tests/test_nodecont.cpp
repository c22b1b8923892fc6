#include <doctest.h>

#include "oracles.hpp"
#include "skit/error.hpp"
#include "skit/nodecont.hpp"
#include "skit/random.hpp"

using namespace skit;

namespace {
FamilySpec S(const char* xi) { return FamilySpec::schreier(Ordinal::parse(xi)); }
Rational Q(const char* s) { return parse_rational(s); }

Vector random_node_vector(Rng& rng, const NodeModel& model, std::size_t k) {
  Vector v;
  for (std::size_t i = 0; i < k; ++i) {
    v.set(uniform_int(rng, 1, static_cast<std::int64_t>(model.size())), random_rational(rng, 9, 9, true));
  }
  return v;
}
}  // namespace

TEST_CASE("anti-lexicographic enumeration") {
  CHECK(antilex_enumerate(S("1"), 3) ==
        std::vector<FiniteSet>{FiniteSet{}, FiniteSet{1}, FiniteSet{2}, FiniteSet{3}, FiniteSet{2, 3}});
  CHECK(antilex_enumerate(S("0"), 3) == std::vector<FiniteSet>{FiniteSet{}, FiniteSet{1}, FiniteSet{2}, FiniteSet{3}});
  CHECK(antilex_enumerate(S("1"), 2) == std::vector<FiniteSet>{FiniteSet{}, FiniteSet{1}, FiniteSet{2}});
  CHECK(antilex_less(FiniteSet{}, FiniteSet{1}));
  CHECK(antilex_less(FiniteSet{3}, FiniteSet{2, 3}));
  CHECK(antilex_less(FiniteSet{2, 3}, FiniteSet{4}));
  CHECK(antilex_less(FiniteSet{2, 4}, FiniteSet{3, 4}));
}

TEST_CASE("enumeration is compatible with initial segments") {
  for (const char* xi : {"1", "2", "w"}) {
    const NodeModel m(S(xi), 8);
    CHECK(m.node(1).empty());
    for (std::size_t j = 2; j <= m.size(); ++j) {
      const Index p = m.parent(static_cast<Index>(j));
      CHECK(p < static_cast<Index>(j));
      CHECK(m.node(p) == m.node(static_cast<Index>(j)).without_max());
      CHECK(m.index_of(m.node(static_cast<Index>(j))) == static_cast<Index>(j));
      CHECK(antilex_less(m.node(static_cast<Index>(j - 1)), m.node(static_cast<Index>(j))));
    }
  }
  CHECK_THROWS_AS(NodeModel(S("1"), 4).node(99), RangeError);
}

TEST_CASE("evaluation examples") {
  auto model = std::make_shared<const NodeModel>(S("1"), 4);
  const Index one = *model->index_of(FiniteSet{1});
  const Index two = *model->index_of(FiniteSet{2});
  const Index two_three = *model->index_of(FiniteSet{2, 3});
  CHECK(evaluate(*model, Vector::unit(1), FiniteSet{2, 4}) == 1);
  Vector f = Vector::unit(two) + Vector::unit(two_three);
  CHECK(evaluate(*model, f, FiniteSet{2, 3}) == 2);
  Vector g = Vector::unit(two) - Vector::unit(two_three);
  CHECK(sup_norm(*model, g) == 1);
  CHECK(evaluate(*model, g, FiniteSet{2, 3}) == 0);
  CHECK(evaluate(NodeFunction{model, Vector::unit(one)}, FiniteSet{1}) == 1);
  CHECK_THROWS_AS(evaluate(*model, f, FiniteSet{1, 2}), DomainError);
  CHECK_THROWS_AS(sup_norm(*model, Vector::unit(100)), RangeError);
}

TEST_CASE("evaluation agrees with brute force") {
  Rng rng(17);
  for (const char* xi : {"1", "2"}) {
    for (Index w = 3; w <= 8; ++w) {
      const NodeModel model(S(xi), w);
      for (int t = 0; t < 6; ++t) {
        const Vector f = random_node_vector(rng, model, 5);
        for (const FiniteSet& g : model.nodes()) CHECK(evaluate(model, f, g) == oracle::node_value(model, f, g));
        CHECK(sup_norm(model, f) == oracle::node_sup(model, f));
      }
    }
  }
}

TEST_CASE("basis projections are contractive") {
  Rng rng(23);
  const NodeModel model(S("1"), 7);
  for (int t = 0; t < 30; ++t) {
    const Vector f = random_node_vector(rng, model, 6);
    const Rational whole = sup_norm(model, f);
    for (Index k = 1; k <= static_cast<Index>(model.size()); ++k) {
      CHECK(sup_norm(model, f.restricted(FiniteSet::interval(1, k))) <= whole);
    }
  }
}

TEST_CASE("index selection") {
  const NodeModel model(S("1"), 6);
  std::vector<Block> units;
  for (std::size_t j = 1; j <= model.size(); ++j) units.push_back(Vector::unit(static_cast<Index>(j)));
  const auto idx = select_indices(model, units);
  REQUIRE(!idx.empty());
  CHECK(idx.front() == 2);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const Index need = model.node(static_cast<Index>(idx[i - 1])).empty()
                           ? 0
                           : model.node(static_cast<Index>(idx[i - 1])).max();
    CHECK(static_cast<Index>(idx[i]) == std::max<Index>(static_cast<Index>(idx[i - 1]) + 1, need + 1));
  }
  CHECK_FALSE(selection_violation(model, units, idx).has_value());
  CHECK_THROWS_AS(select_indices(model, {Vector::unit(1)}), DomainError);
}

TEST_CASE("selection satisfies the plus condition on random bases") {
  for (const char* xi : {"1", "2"}) {
    const NodeModel model(S(xi), 7);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Rng rng(seed);
      const auto blocks = random_node_blocks(model, rng, 3);
      require_successive(blocks);
      for (const Block& b : blocks) CHECK(sup_norm(model, b) == 1);
      const auto idx = select_indices(model, blocks);
      CHECK_FALSE(selection_violation(model, blocks, idx).has_value());
      const FiniteSet m = select_subsequence(model, blocks, std::vector<Rational>(blocks.size(), Q("1/3")));
      CHECK(m.size() == idx.size());
    }
  }
}

TEST_CASE("upper estimate") {
  const NodeModel model(S("1"), 6);
  Rng rng(4);
  const auto blocks = random_node_blocks(model, rng, 2);
  FiniteSet m = select_subsequence(model, blocks, std::vector<Rational>(blocks.size(), Q("1/2")));
  m = m.slice(0, std::min<std::size_t>(m.size(), 8));
  const auto r = upper_estimate_check(model, blocks, m, S("1"), Q("1/2"), 30, 9);
  CHECK(r.pass);
  CHECK(r.trials == 30);
  CHECK_THROWS_AS(upper_estimate_check(model, blocks, m, S("1"), 1, 3, 9), DomainError);

  // disjoint cylinders {1}, {2}, {3}: every point meets at most one of them
  std::vector<Block> disjoint = {Vector::unit(1), Vector::unit(2), Vector::unit(3), Vector::unit(4)};
  CHECK(upper_estimate_check(model, disjoint, FiniteSet{2, 3, 4}, S("0"), Q("1/2"), 20, 1).pass);
}

TEST_CASE("intersection family") {
  const NodeModel model(S("1"), 5);
  const Index a = *model.index_of(FiniteSet{1});
  const Index b = *model.index_of(FiniteSet{2});
  const Index c = *model.index_of(FiniteSet{3});
  const std::vector<Block> disjoint = {Vector::unit(a), Vector::unit(b), Vector::unit(c)};
  const FamilySpec g = intersection_family(model, disjoint, {1, 1, 1});
  CHECK(member(g, FiniteSet{2}));
  CHECK_FALSE(member(g, FiniteSet{1, 2}));
  CHECK_FALSE(member(g, FiniteSet{2, 3}));
  CHECK(member(intersection_family(model, disjoint, {2, 2, 2}), FiniteSet{}));
  CHECK_FALSE(member(intersection_family(model, disjoint, {2, 2, 2}), FiniteSet{1}));

  const NodeModel m2(S("1"), 4);
  const std::vector<Block> nested = {Vector::unit(*m2.index_of(FiniteSet{2})), Vector::unit(*m2.index_of(FiniteSet{2, 3}))};
  CHECK(member(intersection_family(m2, nested, {1, 1}), FiniteSet{1, 2}));
  CHECK(is_hereditary(intersection_family(m2, nested, {1, 1}), 4, 3).holds);
}
