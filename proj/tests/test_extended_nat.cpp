#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gforge/extended_nat.hpp"
#include "gforge/errors.hpp"

using gforge::BigInt;
using gforge::ExtendedNat;
using gforge::TowerOverflow;

TEST_CASE("small values stay exact") {
  ExtendedNat z;
  CHECK(z.is_zero());
  CHECK(z.is_exact());
  CHECK(ExtendedNat(65536).to_u64() == 65536);
  CHECK(ExtendedNat(65536).str() == "65536");
}

TEST_CASE("tower values materialize while each exponent fits the threshold") {
  ExtendedNat p1 = ExtendedNat::tower(4, BigInt(1));
  CHECK(p1.is_exact());
  CHECK(p1 == ExtendedNat(65536));

  ExtendedNat p2 = ExtendedNat::tower(4, BigInt(2));
  CHECK(p2.is_exact());
  CHECK(p2 == ExtendedNat(BigInt(1) << 65536));
  CHECK(p2.str() == "2^^(1;65536)");

  ExtendedNat p3 = ExtendedNat::tower(4, BigInt(3));
  CHECK(p3.is_tower());
  CHECK(p3.tower_height() == 4);
  CHECK(p3.tower_top() == 3);
  CHECK(p3.str() == "2^^(4;3)");

  ExtendedNat p4 = ExtendedNat::tower(4, BigInt(4));
  CHECK(p4.is_tower());
  CHECK(p4.tower_height() == 5);
  CHECK(p4.tower_top() == 2);
  CHECK(p4.str() == "2^^(5;2)");
}

TEST_CASE("over-threshold exact powers of two normalize to tower form") {
  ExtendedNat v = ExtendedNat::two_pow(ExtendedNat(BigInt(1) << 21));
  CHECK(v.is_tower());
  CHECK(v.tower_height() == 2);
  CHECK(v.tower_top() == 21);
  CHECK(v == ExtendedNat::tower(2, BigInt(21)));
}

TEST_CASE("ordering crosses representations") {
  ExtendedNat p1 = ExtendedNat::tower(4, BigInt(1));
  ExtendedNat p2 = ExtendedNat::tower(4, BigInt(2));
  ExtendedNat p3 = ExtendedNat::tower(4, BigInt(3));
  ExtendedNat p4 = ExtendedNat::tower(4, BigInt(4));
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  CHECK(p3 < p4);
  CHECK(ExtendedNat(BigInt(1) << 70000) < p3);
  CHECK(p3 < ExtendedNat::tower(4, BigInt(5)));
  CHECK(p2 < p2 + ExtendedNat(1));
  CHECK(ExtendedNat(5) < ExtendedNat(6));
}

TEST_CASE("checked arithmetic") {
  ExtendedNat p2 = ExtendedNat::tower(4, BigInt(2));
  ExtendedNat s = p2 + ExtendedNat(131076);
  CHECK(s.str() == "2^^(1;65536)+131076");
  CHECK(s.sub(ExtendedNat(131076)) == p2);
  CHECK(s.sub(s).is_zero());
  CHECK(ExtendedNat(6).doubled() == ExtendedNat(12));
  CHECK(p2.doubled() == ExtendedNat::two_pow(ExtendedNat(65537)));

  ExtendedNat p3 = ExtendedNat::tower(4, BigInt(3));
  CHECK_THROWS_AS(p3 + ExtendedNat(1), TowerOverflow);
  CHECK_THROWS_AS(p3.sub(ExtendedNat(1)), TowerOverflow);
  CHECK_THROWS_AS(ExtendedNat(1).sub(ExtendedNat(2)), std::invalid_argument);
  CHECK((p3 + ExtendedNat(0)) == p3);
  CHECK(p3.doubled().is_tower());
  CHECK(p3 < p3.doubled());
}

TEST_CASE("parse round trips") {
  auto rt = [](const std::string& s) {
    return ExtendedNat::parse(s).str() == s;
  };
  CHECK(rt("0"));
  CHECK(rt("65536"));
  CHECK(rt("2^^(1;65536)"));
  CHECK(rt("2^^(4;3)"));
  CHECK(rt("2^^(1;65536)+131076"));
  CHECK(ExtendedNat::parse("2^^(2;2^^(2;2))") ==
        ExtendedNat::tower(4, BigInt(2)));
  CHECK(ExtendedNat::parse("2^^(1;16)") == ExtendedNat(65536));
  CHECK_THROWS_AS(ExtendedNat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedNat::parse("2^^(4;3)junk"), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedNat::parse(""), std::invalid_argument);
}

TEST_CASE("log2 helpers") {
  CHECK(ExtendedNat(1).log2_floor() == ExtendedNat(0));
  CHECK(ExtendedNat(65536).log2_floor() == ExtendedNat(16));
  CHECK(ExtendedNat(65537).log2_floor() == ExtendedNat(16));
  ExtendedNat p3 = ExtendedNat::tower(4, BigInt(3));
  CHECK(p3.log2_floor() == ExtendedNat(BigInt(1) << 256));
  CHECK(p3.is_power_of_two());
  CHECK(!ExtendedNat(12).is_power_of_two());
}

TEST_CASE("hash distinguishes representative samples") {
  ExtendedNat a(65536), b = ExtendedNat::tower(4, BigInt(3));
  CHECK(a.hash() != b.hash());
  CHECK(a.hash() == ExtendedNat(65536).hash());
}
