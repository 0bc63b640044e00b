#include <doctest.h>

#include <random>
#include <string>

#include "generators.hpp"
#include "sdepth/io.hpp"

using namespace sdepth;
using sdepth::testing::rand_int;
using sdepth::testing::random_monomial;
using sdepth::testing::random_proper_ideal;

TEST_CASE("monomial grammar") {
  CHECK(parse_monomial("x1^2*x2", 2) == Monomial({2, 1}));
  CHECK(parse_monomial("x2", 3) == Monomial({0, 1, 0}));
  CHECK(parse_monomial("1", 4) == Monomial({0, 0, 0, 0}));
  CHECK(parse_monomial(" x1 ^ 2 * x2 ", 2) == Monomial({2, 1}));
  CHECK(parse_monomial("x1*x1", 1) == Monomial({2}));
  CHECK(format_monomial(Monomial({2, 1})) == "x1^2*x2");
  CHECK(format_monomial(Monomial({0, 0})) == "1");
  CHECK_THROWS_AS(parse_monomial("x3", 2), Error);
  CHECK_THROWS_AS(parse_monomial("x0", 2), Error);
  CHECK_THROWS_AS(parse_monomial("y1", 2), Error);
  CHECK_THROWS_AS(parse_monomial("x1^", 2), Error);
  CHECK_THROWS_AS(parse_monomial("x1 x2", 2), Error);
}

TEST_CASE("ideal document grammar") {
  const MonomialIdeal I = parse_ideal("vars: 2\nideal: x1^2*x2, x2^3\n");
  CHECK(I.ambient() == 2);
  CHECK(I.generators() == std::vector<Monomial>{Monomial({0, 3}), Monomial({2, 1})});

  CHECK(parse_ideal("vars: 3\nideal:\n") == MonomialIdeal::zero(3));
  CHECK(parse_ideal("vars: 3\nideal:") == MonomialIdeal::zero(3));
  CHECK_THROWS_AS(parse_ideal("vars: 2\nideal: x3\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ideal: x1\n"), Error);
  CHECK_THROWS_AS(parse_ideal("vars: 2\n"), Error);

  // parse errors carry a position
  try {
    parse_ideal("vars: 2\nideal: x1, x9\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == "parse-error");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("space and step grammar") {
  const StanleySpace s = parse_space("x1^2 K[x1,x3]", 3);
  CHECK(s.root == Monomial({2, 0, 0}));
  CHECK(s.vars == std::vector<int>{1, 3});
  CHECK(format_space(s) == "x1^2 K[x1,x3]");
  CHECK(parse_space("1 K[]", 2).vars.empty());

  const PrimeFiltration::Step st = parse_step("x1 : x1,x2", 2);
  CHECK(st.z == Monomial({1, 0}));
  CHECK(st.prime == MonomialPrime(2, {1, 2}));
  CHECK(format_step(st) == "x1 : x1,x2");
  CHECK(parse_step("1 : 0", 2).prime.is_zero());
  CHECK(format_step({Monomial::unit(2), MonomialPrime::zero(2)}) == "1 : 0");
  CHECK_THROWS_AS(parse_space("x1 K[x1", 2), Error);
  CHECK_THROWS_AS(parse_step("x1 x1,x2", 2), Error);
}

TEST_CASE("problem documents round-trip") {
  const std::string text =
      "vars: 3\n"
      "ideal: x1*x2, x2^2*x3\n"
      "u: x3^2\n"
      "decomposition:\n"
      "  1 K[x2,x3]\n"
      "  x1 K[x1]\n"
      "filtration:\n"
      "  x1 : x1,x2\n"
      "  1 : 0\n";
  const ProblemFile p = parse_problem(text);
  CHECK(p.ambient == 3);
  CHECK(p.ideal_generators.size() == 2);
  REQUIRE(p.u.has_value());
  CHECK(*p.u == Monomial({0, 0, 2}));
  REQUIRE(p.decomposition.has_value());
  CHECK(p.decomposition->size() == 2);
  REQUIRE(p.filtration.has_value());
  CHECK(p.filtration->size() == 2);
  CHECK(format_problem(p) == text);
  CHECK(parse_problem(format_problem(p)).ambient == p.ambient);

  CHECK_THROWS_AS(parse_problem("vars: 2\nnonsense: 1\n"), Error);
  CHECK_THROWS_AS(parse_problem("vars: 2\nx1 K[x1]\n"), Error);
}

TEST_CASE("parse inverts format on random values") {
  std::mt19937_64 rng(1771);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rand_int(rng, 1, 5);
    const Monomial m = random_monomial(rng, n, 4);
    CHECK(parse_monomial(format_monomial(m), n) == m);

    const MonomialIdeal I = random_proper_ideal(rng, n, 3, n + 2);
    CHECK(parse_ideal(format_ideal(I)) == I);

    StanleySpace s;
    s.root = random_monomial(rng, n, 3);
    for (int v = 1; v <= n; ++v)
      if (rand_int(rng, 0, 1)) s.vars.push_back(v);
    CHECK(parse_space(format_space(s), n) == s);

    PrimeFiltration::Step st;
    st.z = random_monomial(rng, n, 3);
    std::vector<int> vars;
    for (int v = 1; v <= n; ++v)
      if (rand_int(rng, 0, 1)) vars.push_back(v);
    st.prime = MonomialPrime(n, vars);
    CHECK(parse_step(format_step(st), n) == st);
  }
}
