#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gforge/algebra.hpp"
#include "gforge/field.hpp"
#include "gforge/universe.hpp"

using namespace gforge;

namespace {

Algebra make_geo2(Field f = Field::rationals()) {
  auto eng = std::make_shared<VInfinity>(RunSequenceSpec::geometric(2));
  return Algebra(std::move(f), std::make_shared<FactorUniverse>(eng));
}

std::string brute_word(int k) {
  std::string s = "x";
  std::uint64_t q = 1;
  for (int m = 1; m < k; ++m) {
    q *= 2;
    std::string head = s;
    s.append(q, 'y');
    s.append(head);
  }
  return s;
}

} // namespace

TEST_CASE("rational field") {
  Field f = Field::rationals();
  CHECK(f.add(Scalar(1) / 2, Scalar(1) / 3) == Scalar(5) / 6);
  CHECK(f.inv(Scalar(3) / 2) == Scalar(2) / 3);
  CHECK(f.str() == "rationals");
  CHECK_THROWS_AS(f.inv(Scalar(0)), std::invalid_argument);
}

TEST_CASE("prime field") {
  Field f = Field::prime(7);
  CHECK(f.norm(Scalar(10)) == Scalar(3));
  CHECK(f.norm(Scalar(-1)) == Scalar(6));
  CHECK(f.norm(Scalar(1) / 2) == Scalar(4));
  CHECK(f.mul(Scalar(3), Scalar(5)) == Scalar(1));
  CHECK(f.inv(Scalar(3)) == Scalar(5));
  CHECK(Field::parse("gf:7") == f);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("gf:abc"), std::invalid_argument);
  CHECK_THROWS_AS(f.norm(Scalar(1) / 7), std::invalid_argument);
}

TEST_CASE("products respect the factor universe") {
  Algebra alg = make_geo2();
  AlgebraElement x = alg.from_word("x");
  AlgebraElement y = alg.from_word("y");
  CHECK(alg.multiply(x, y) == alg.from_word("xy"));
  CHECK(alg.multiply(x, x).is_zero());
  CHECK(alg.multiply(alg.add(x, y), x) == alg.from_word("yx"));
  CHECK(alg.from_word("xx").is_zero());
  CHECK(alg.multiply(alg.one(), y) == y);
  AlgebraElement yy = alg.multiply(y, y);
  CHECK(alg.multiply(yy, alg.multiply(yy, y)).is_zero() == false);
}

TEST_CASE("other universes") {
  Algebra ystar(Field::rationals(), std::make_shared<YStarX>());
  CHECK(ystar.multiply(ystar.from_word("x"), ystar.from_word("y")).is_zero());
  CHECK(ystar.multiply(ystar.from_word("y"), ystar.from_word("x")) ==
        ystar.from_word("yx"));
  CHECK(ystar.multiply(ystar.from_word("yx"), ystar.from_word("x")).is_zero());
  CHECK(ystar.from_word("yyx") == ystar.parse("y^2*x"));

  Algebra free(Field::rationals(), std::make_shared<FreeUniverse>());
  CHECK(free.multiply(free.from_word("x"), free.from_word("x")) ==
        free.from_word("xx"));
}

TEST_CASE("characteristic two") {
  Algebra alg = make_geo2(Field::prime(2));
  AlgebraElement x = alg.from_word("x");
  CHECK(alg.add(x, x).is_zero());
  CHECK(alg.str(alg.add(alg.from_word("y"), x)) == "y + x");
}

TEST_CASE("parse and print round trips") {
  Algebra alg = make_geo2();
  const char* exprs[] = {"3*x*y^2 + y", "y - x", "-x + 1/2*y", "1", "0",
                         "2*y^3 - 1/3*x*y"};
  for (const char* e : exprs) {
    AlgebraElement v = alg.parse(e);
    CHECK(alg.parse(alg.str(v)) == v);
  }
  CHECK(alg.str(alg.parse("3*x*y^2 + y")) == "3*x*y^2 + y");
  CHECK(alg.str(alg.parse("y + 2 - 2")) == "y");
  CHECK(alg.parse("x*x").is_zero());
  CHECK(alg.parse("e") == alg.one());
  CHECK(alg.parse("xy^2") == alg.parse("x*y^2"));
  CHECK_THROWS_AS(alg.parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(alg.parse("z"), std::invalid_argument);
  CHECK_THROWS_AS(alg.parse("x^0"), std::invalid_argument);
  CHECK_THROWS_AS(alg.parse("3/0*x"), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  std::string big = brute_word(8);
  std::mt19937_64 rng(99);
  auto random_elem = [&](const Algebra& alg) {
    AlgebraElement acc = alg.zero();
    std::size_t terms = rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      std::size_t len = rng() % 7;
      std::string w;
      if (len > 0) {
        std::size_t at = rng() % (big.size() - len);
        w = big.substr(at, len);
      }
      long long c = static_cast<long long>(rng() % 7) - 3;
      acc = alg.add(acc, alg.from_term(w, alg.field().from_int(c)));
    }
    return acc;
  };
  Algebra algs[] = {make_geo2(), make_geo2(Field::prime(5)),
                    Algebra(Field::rationals(), std::make_shared<YStarX>())};
  for (Algebra& alg : algs) {
    for (int trial = 0; trial < 300; ++trial) {
      AlgebraElement a = random_elem(alg), b = random_elem(alg),
                     c = random_elem(alg);
      CHECK(alg.multiply(alg.multiply(a, b), c) ==
            alg.multiply(a, alg.multiply(b, c)));
      CHECK(alg.multiply(a, alg.add(b, c)) ==
            alg.add(alg.multiply(a, b), alg.multiply(a, c)));
      CHECK(alg.multiply(alg.add(a, b), c) ==
            alg.add(alg.multiply(a, c), alg.multiply(b, c)));
    }
  }
}

TEST_CASE("deglex order") {
  DegLex lt;
  CHECK(lt("", "x"));
  CHECK(lt("x", "y"));
  CHECK(lt("y", "xx"));
  CHECK(lt("xy", "yx"));
  CHECK(!lt("yx", "xy"));
  CHECK(word_str("xyyx") == "x*y^2*x");
  CHECK(word_str("") == "1");
}
