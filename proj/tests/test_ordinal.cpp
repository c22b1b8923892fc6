#include <doctest.h>

#include "skit/error.hpp"
#include "skit/ordinal.hpp"

using namespace skit;

namespace {
Ordinal O(const char* s) { return Ordinal::parse(s); }
}  // namespace

TEST_CASE("ordinal comparison") {
  CHECK(compare(O("0"), O("0")) == OrdinalOrder::equal);
  CHECK(compare(O("2"), O("w")) == OrdinalOrder::less);
  CHECK(compare(O("w*3+1"), O("w^2")) == OrdinalOrder::less);
  CHECK(compare(O("w^w"), O("w^5*7")) == OrdinalOrder::greater);
  CHECK(O("w^(w+1)") > O("w^w*100"));
}

TEST_CASE("ordinal arithmetic") {
  CHECK(add(O("1"), O("w")) == O("w"));
  CHECK(add(O("w"), O("1")) == O("w+1"));
  CHECK(multiply(O("w"), O("w")) == O("w^2"));
  CHECK(add(O("w^2"), O("w*2")) == O("w^2+w*2"));
  CHECK(add(O("w*2+3"), O("w")) == O("w*3"));
  CHECK(multiply(O("2"), O("w")) == O("w"));
  CHECK(multiply(O("w"), O("2")) == O("w*2"));
  CHECK(multiply(O("w+1"), O("w^2")) == O("w^3"));
  CHECK(multiply(O("w+1"), O("2")) == O("w*2+1"));
  CHECK(Ordinal::omega_power(O("w")) == O("w^w"));
}

TEST_CASE("predecessor") {
  CHECK(predecessor(O("w+1")) == O("w"));
  CHECK_FALSE(predecessor(O("w")).has_value());
  CHECK(predecessor(O("5")) == O("4"));
  CHECK_FALSE(predecessor(O("0")).has_value());
}

TEST_CASE("associated sequence") {
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(associated_sequence(O("w^2+4"), n) == O("w^2+3"));
  CHECK(associated_sequence(O("w"), 3) == O("3"));
  CHECK(associated_sequence(O("w^2"), 2) == O("w*2"));
  CHECK(associated_sequence(O("w^w"), 3) == O("w^3"));
  CHECK(associated_sequence(O("w^2*2"), 1) == O("w^2+w"));
  CHECK_THROWS_AS(associated_sequence(O("0"), 1), DomainError);
}

TEST_CASE("fundamental sequences increase to their limit") {
  const char* limits[] = {"w", "w*2", "w*5", "w^2", "w^2+w", "w^2*3", "w^3", "w^2*2+w*4"};
  for (const char* text : limits) {
    const Ordinal a = O(text);
    CAPTURE(text);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const Ordinal lo = associated_sequence(a, n) + Ordinal(1);
      const Ordinal hi = associated_sequence(a, n + 1) + Ordinal(1);
      CHECK(lo < hi);
      CHECK(hi < a);
    }
  }
  // every smaller ordinal in a sample is eventually passed
  const char* below[] = {"0", "7", "w", "w*9+3", "w^2*2+w*8", "w^2*2+w*3+100"};
  for (const char* text : below) {
    const Ordinal b = O(text);
    bool passed = false;
    for (std::uint64_t n = 1; n <= 200 && !passed; ++n) passed = b < associated_sequence(O("w^3"), n) + Ordinal(1);
    CHECK(passed);
  }
}

TEST_CASE("parse and print round trip") {
  const char* texts[] = {"0", "3", "w", "w+1", "w*2", "w^2*3+w+1", "w^w", "w^(w+1)", "w^(w^2*2)+w^3+7"};
  for (const char* t : texts) CHECK(O(t).to_string() == t);
  CHECK(O("1+w").to_string() == "w");
  CHECK(O("w+w").to_string() == "w*2");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(O(""), ParseError);
  CHECK_THROWS_AS(O("w^"), ParseError);
  CHECK_THROWS_AS(O("x"), ParseError);
  CHECK_THROWS_AS(O("w*"), ParseError);
  CHECK_THROWS_AS(O("(w"), ParseError);
}

TEST_CASE("classification") {
  CHECK(O("0").is_zero());
  CHECK(O("4").is_finite());
  CHECK(O("4").finite_value() == 4);
  CHECK(O("w+2").is_successor());
  CHECK(O("w^2").is_limit());
  CHECK_FALSE(O("0").is_limit());
  CHECK_THROWS_AS(O("w").finite_value(), DomainError);
}
