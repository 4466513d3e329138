#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vgl/json_io.hpp"
#include "vgl/poly.hpp"

using namespace vgl;

namespace {

SparsePoly P(const char* text, std::size_t dim = 0) { return parse_poly(text, dim); }

SparsePoly random_poly(std::mt19937_64& rng, std::size_t dim, int max_terms = 4, int max_exp = 3) {
  SparsePoly p(dim);
  std::uniform_int_distribution<int> terms(1, max_terms), exps(0, max_exp), num(1, 9), den(1, 4);
  int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    ExponentVector e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = exps(rng);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 5);
  std::vector<Rational> r;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    r.push_back(v);
  }
  return r;
}

}  // namespace

TEST_CASE("add") {
  CHECK(P("1 + x1") + P("x1") == P("1 + 2*x1"));
  SparsePoly p = P("3/2*x1^2*x2 + x2 + 1");
  CHECK(p + SparsePoly::zero(2) == p);
  CHECK(P("x1*x2") + P("x1*x2") == P("2*x1*x2"));
  CHECK_THROWS_AS(P("x1") + P("x1", 2), DimensionMismatch);
}

TEST_CASE("mul") {
  CHECK(P("1 + x1") * P("1 + x1") == P("1 + 2*x1 + x1^2"));
  SparsePoly p = P("3/2*x1^2*x2 + x2 + 1");
  CHECK(p * SparsePoly::one(2) == p);
  CHECK((p * SparsePoly::zero(2)).is_zero());
  CHECK_THROWS_AS(P("x1") * P("x2"), DimensionMismatch);
}

TEST_CASE("pow") {
  CHECK(pow(P("1 + x1"), 2) == P("1 + 2*x1 + x1^2"));
  CHECK(pow(P("3*x1 + x2"), 0) == SparsePoly::one(2));
  CHECK(pow(P("2*x1"), 3) == P("8*x1^3"));
  SparsePoly p = P("1 + x1 + 2*x2");
  SparsePoly slow = SparsePoly::one(2);
  for (int i = 0; i < 7; ++i) slow = slow * p;
  CHECK(pow(p, 7) == slow);
}

TEST_CASE("eval") {
  Rational two = 2;
  CHECK(eval(P("1 + x1"), std::vector<Rational>{two}) == 3);
  SparsePoly p = P("3/2*x1^2*x2 + x2 + 1");
  CHECK(eval(p, std::vector<Rational>{1, 1}) == mass(p));
  CHECK(eval(P("2*x1*x2^2"), std::vector<Rational>{Rational(1, 2), 2}) == 4);
  CHECK(eval(P("1 + x1"), std::vector<double>{2.5}) == doctest::Approx(3.5));
  CHECK_THROWS(eval(P("1 + x1"), std::vector<Rational>{0}));
  CHECK_THROWS(eval(P("1 + x1"), std::vector<Rational>{1, 2}));
}

TEST_CASE("gradient_at_one") {
  CHECK(gradient_at_one(P("x1^2")) == std::vector<Rational>{2});
  CHECK(gradient_at_one(P("5", 3)) == std::vector<Rational>{0, 0, 0});
  CHECK(gradient_at_one(P("1 + x1 + 3*x1*x2")) == std::vector<Rational>{4, 3});
}

TEST_CASE("newton_support") {
  auto s = newton_support(P("2*x1*x2^2 + 3"));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == ExponentVector{0, 0});
  CHECK(s[1] == ExponentVector{1, 2});
  CHECK(newton_support(P("7*x1^3*x2")).size() == 1);
  auto t = newton_support(pow(P("1 + x1"), 2));
  CHECK(t == std::vector<ExponentVector>{ExponentVector{0}, ExponentVector{1}, ExponentVector{2}});
  CHECK_THROWS_AS(newton_support(SparsePoly::zero(1)), ZeroPolynomialError);
}

TEST_CASE("mass") {
  CHECK(mass(P("1 + 2*x1")) == 3);
  CHECK(mass(SparsePoly::zero(2)) == 0);
  CHECK(mass(pow(P("1 + x1"), 3)) == 8);
}

TEST_CASE("parse and serialize") {
  SparsePoly p = P("1 + x1");
  CHECK(p.coeff(ExponentVector{0}) == 1);
  CHECK(p.coeff(ExponentVector{1}) == 1);
  SparsePoly q = P("3/2*x1^2*x2");
  CHECK(q.dim() == 2);
  CHECK(q.size() == 1);
  CHECK(q.coeff(ExponentVector{2, 1}) == Rational(3, 2));
  CHECK(to_string(P("1 + x2 + 3/2*x1^2*x2")) == "3/2*x1^2*x2 + x2 + 1");
  CHECK(to_string(SparsePoly::zero(1)) == "0");
  CHECK(P("6/4*x1") == P("3/2*x1"));
  CHECK(P("x1*x1") == P("x1^2"));
  CHECK_THROWS_AS(P("2*3*x1"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("x1 - 1"), ParseError);
  CHECK_THROWS_AS(P("x1^-2"), ParseError);
  CHECK_THROWS_AS(P("-3*x1"), ParseError);
  CHECK_THROWS_AS(P("x0"), ParseError);
  CHECK_THROWS_AS(P("1 +"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("y1"), ParseError);
  CHECK_THROWS_AS(P("x3", 2), ParseError);
  try {
    P("x1 + 2 $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("coefficients stay nonnegative") {
  SparsePoly p = P("1 + x1");
  CHECK_THROWS(p.add_term(ExponentVector{0}, -2));
  p.add_term(ExponentVector{0}, -1);
  CHECK(p == P("x1"));
}

TEST_CASE("ring laws and homomorphisms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dim = 1 + trial % 3;
    SparsePoly a = random_poly(rng, dim), b = random_poly(rng, dim), c = random_poly(rng, dim);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    auto r = random_point(rng, dim);
    CHECK(eval(a * b, r) == eval(a, r) * eval(b, r));
    CHECK(eval(a + b, r) == eval(a, r) + eval(b, r));
    auto gab = gradient_at_one(a * b), ga = gradient_at_one(a), gb = gradient_at_one(b);
    for (std::size_t i = 0; i < dim; ++i) CHECK(gab[i] == mass(a) * gb[i] + mass(b) * ga[i]);
    // Support of a product lies in the Minkowski sum of supports.
    for (const auto& e : newton_support(a * b)) {
      bool found = false;
      for (const auto& s : newton_support(a))
        for (const auto& t : newton_support(b)) found = found || s + t == e;
      CHECK(found);
    }
  }
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dim = 1 + trial % 3;
    SparsePoly p = random_poly(rng, dim);
    CHECK(parse_poly(to_string(p), dim) == p);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
  }
  Json doc = Json::parse(R"({"vars": 2, "terms": [{"coeff": "3/2", "exp": [2, 1]}, {"coeff": 1, "exp": [0, 0]}]})");
  CHECK(poly_from_json(doc) == P("3/2*x1^2*x2 + 1"));
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars": 1, "terms": [{"coeff": "-1", "exp": [0]}]})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars": 1, "terms": [{"coeff": "1", "exp": [-1]}]})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars": 2, "terms": [{"coeff": "1", "exp": [1]}]})")), ParseError);
  CHECK(embed(P("x1"), 3) == P("x1", 3));
}
