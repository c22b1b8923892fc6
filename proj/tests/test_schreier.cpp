#include <doctest.h>

#include "oracles.hpp"
#include "skit/error.hpp"
#include "skit/schreier.hpp"
#include "skit/setfam.hpp"

using namespace skit;

namespace {
Ordinal O(const char* s) { return Ordinal::parse(s); }
}  // namespace

TEST_CASE("membership examples") {
  CHECK(s_member(O("1"), FiniteSet{3, 4, 5}));
  CHECK_FALSE(s_member(O("1"), FiniteSet{2, 3, 4}));
  CHECK(s_member(O("2"), FiniteSet{3, 4, 5}));
  CHECK(s_member(O("0"), FiniteSet{7}));
  CHECK_FALSE(s_member(O("0"), FiniteSet{7, 8}));
  CHECK(s_member(O("w"), FiniteSet{}));
  // S_w: {n} ∪ ... in S_{n+1} with n <= min
  CHECK(s_member(O("w"), FiniteSet{2, 3, 4, 5, 6, 7}));
  CHECK_FALSE(s_member(O("w"), FiniteSet{1, 2}));
}

TEST_CASE("S_1 closed form") {
  for (const FiniteSet& f : subsets_of_window(12, 12)) {
    CHECK(s_member(O("1"), f) == (f.empty() || static_cast<Index>(f.size()) <= f.min()));
  }
}

TEST_CASE("hierarchy agrees with unfolded definition") {
  for (const char* xi : {"0", "1", "2", "3", "w", "w+1", "w*2"}) {
    const Ordinal a = O(xi);
    for (const FiniteSet& f : subsets_of_window(9, 6)) {
      CAPTURE(xi);
      CAPTURE(f.to_string());
      CHECK(s_member(a, f) == oracle::schreier(a, f));
    }
  }
}

TEST_CASE("maximality examples") {
  CHECK(s_maximal(O("1"), FiniteSet{2, 3}));
  CHECK_FALSE(s_maximal(O("1"), FiniteSet{3, 4}));
  const FiniteSet f{2, 3, 4, 6, 7, 8};
  auto pred = [](const FiniteSet& g) { return oracle::schreier(O("2"), g); };
  REQUIRE(s_member(O("2"), f));
  CHECK(s_maximal(O("2"), f) == oracle::maximal_in_window(pred, f, 12));
  CHECK_THROWS_AS(s_maximal(O("1"), FiniteSet{}), DomainError);
}

TEST_CASE("decomposition into maximal members") {
  auto parts = s_decompose(O("1"), IntStream::naturals(), 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == FiniteSet{1});
  CHECK(parts[1] == FiniteSet{2, 3});
  CHECK(parts[2] == FiniteSet{4, 5, 6, 7});
  parts = s_decompose(O("0"), IntStream::naturals(), 2);
  CHECK(parts == std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{2}});
  parts = s_decompose(O("1"), IntStream::odds(), 2);
  CHECK(parts == std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{3, 5, 7}});
  // part sizes grow like towers of two beyond these counts
  for (const auto& [xi, count] : {std::pair{"1", 4}, std::pair{"2", 2}}) {
    Index last = 0;
    for (const FiniteSet& p : s_decompose(O(xi), IntStream::tail_from(2), count)) {
      CHECK(p.min() > last);
      CHECK(s_maximal(O(xi), p));
      last = p.max();
    }
  }
}

TEST_CASE("thresholds") {
  CHECK(s_threshold(O("1"), O("2"), 10, 10, 6).threshold == 1);
  CHECK(s_threshold(O("0"), O("1"), 10, 10, 6).threshold == 1);
  // S_2 ⊆ S_{1+1} with 1 <= min F, so the limit family contains S_2 outright
  CHECK(s_threshold(O("2"), O("w"), 10, 8, 5).threshold == 1);
  // S_w ⊄ S_3 below 3: {2,...} pieces of S_3 need min F >= 3
  const ThresholdCertificate t = s_threshold(O("w"), O("w+1"), 10, 8, 5);
  CHECK(t.threshold >= 1);
  CHECK_THROWS_AS(s_threshold(O("2"), O("1"), 10, 8, 5), DomainError);
}

TEST_CASE("threshold certificate witnesses a failure below") {
  const ThresholdCertificate t = s_threshold(O("3"), O("w"), 10, 8, 6);
  if (t.threshold > 1) {
    REQUIRE(t.counterexample_below.has_value());
    CHECK(s_member(O("3"), *t.counterexample_below));
    CHECK_FALSE(s_member(O("w"), *t.counterexample_below));
  }
}

TEST_CASE("lemma on maximal sets") {
  for (const char* a : {"0", "1", "2"}) {
    const Le5Result r = check_le5(O(a), 10);
    CAPTURE(a);
    CHECK(r.holds);
  }
  CHECK(check_le5(O("1"), 12).holds);
  CHECK(check_le5(O("1"), 12).cases_checked > 0);
}

TEST_CASE("transfer") {
  CHECK(check_transfer(O("1"), O("1"), IntStream::tail_from(4), 10, 5).holds);
  CHECK(check_transfer(O("0"), O("2"), IntStream::naturals(), 9, 5).holds);
  CHECK(check_transfer(O("2"), O("0"), IntStream::odds(), 12, 5).holds);
  CHECK(check_transfer(O("1"), O("2"), IntStream::naturals(), 9, 5).sets_checked > 0);
}
