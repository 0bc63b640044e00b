#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "sdepth/filtrations.hpp"
#include "sdepth/io.hpp"
#include "sdepth/spectrum.hpp"
#include "sdepth/stanley.hpp"

using namespace sdepth;
using sdepth::testing::box_verify_decomposition;
using sdepth::testing::rand_int;
using sdepth::testing::random_proper_ideal;

namespace {

MonomialIdeal ideal(int n, const char* gens) {
  return parse_ideal("vars: " + std::to_string(n) + "\nideal: " + gens + "\n");
}

StanleyDecomposition decomp(int n, const char* gens,
                            std::initializer_list<const char*> spaces) {
  StanleyDecomposition d;
  d.ideal = ideal(n, gens);
  for (const char* s : spaces) d.spaces.push_back(parse_space(s, n));
  return d;
}

MonomialIdeal permuted(const MonomialIdeal& I, const std::vector<int>& perm) {
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators()) {
    Monomial m = Monomial::unit(I.ambient());
    for (int i = 0; i < I.ambient(); ++i)
      m.e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = g.e[static_cast<size_t>(i)];
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::normalize(I.ambient(), std::move(gens));
}

}  // namespace

TEST_CASE("sdepth of a decomposition is the minimal dimension") {
  CHECK(sdepth_of(decomp(2, "x1*x2", {"1 K[x2]", "x1 K[x1]"})) == 1);
  CHECK(sdepth_of(decomp(3, "", {"1 K[x1,x2,x3]"})) == 3);
  CHECK(sdepth_of(decomp(2, "x1*x2", {"1 K[]", "x1 K[x1]"})) == 0);
  CHECK_THROWS_AS(sdepth_of(decomp(2, "x1", {})), Error);
  CHECK(sdepth_of(StanleyDecomposition{MonomialIdeal::unit_ideal(2), {}}) == 2);
}

TEST_CASE("decomposition verifier accepts and refutes") {
  CHECK(bool(verify_decomposition(decomp(2, "x1*x2", {"1 K[x2]", "x1 K[x1]"}))));

  const auto overlap = verify_decomposition(decomp(2, "x1*x2", {"1 K[x1,x2]"}));
  CHECK_FALSE(bool(overlap));
  REQUIRE(overlap.witness.has_value());
  CHECK(contains(ideal(2, "x1*x2"), *overlap.witness));

  const auto uncovered = verify_decomposition(decomp(2, "x1*x2", {"1 K[x1]"}));
  CHECK_FALSE(bool(uncovered));
  REQUIRE(uncovered.witness.has_value());
  CHECK(*uncovered.witness == Monomial({0, 1}));

  const auto bad_root = verify_decomposition(decomp(2, "x1", {"x1 K[x1,x2]"}));
  CHECK_FALSE(bool(bad_root));
}

TEST_CASE("grid verification agrees with full-box verification") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 220; ++trial) {
    const int n = rand_int(rng, 1, 3);
    const MonomialIdeal I = random_proper_ideal(rng, n, 2, n + 1);
    StanleyDecomposition d;
    d.ideal = I;
    // half the trials: an honest certificate; half: random spaces
    if (trial % 2 == 0) {
      d = stanley_depth(I).witness;
      if (rand_int(rng, 0, 3) == 0 && !d.spaces.empty())
        d.spaces.pop_back();  // break it sometimes
    } else {
      const int count = rand_int(rng, 0, 4);
      for (int i = 0; i < count; ++i) {
        StanleySpace s;
        s.root = sdepth::testing::random_monomial(rng, n, 2);
        for (int v = 1; v <= n; ++v)
          if (rand_int(rng, 0, 1)) s.vars.push_back(v);
        if (!contains(I, s.root)) d.spaces.push_back(std::move(s));
      }
    }
    ++checked;
    CHECK(bool(verify_decomposition(d)) == box_verify_decomposition(d));
  }
  CHECK(checked >= 220);
}

TEST_CASE("exact Stanley depth of reference ideals") {
  const SdepthCertificate zero = stanley_depth(MonomialIdeal::zero(3));
  CHECK(zero.value == 3);
  CHECK(zero.witness.spaces.size() == 1);
  CHECK(zero.witness.spaces[0].vars == std::vector<int>{1, 2, 3});
  CHECK(zero.search_exhausted);

  CHECK(stanley_depth(ideal(2, "x1*x2")).value == 1);
  CHECK(stanley_depth(ideal(3, "x1*x2, x1*x3, x2*x3")).value == 1);
  CHECK(stanley_depth(ideal(1, "x1^2")).value == 0);
  CHECK(stanley_depth(ideal(3, "x1")).value == 2);
  CHECK_THROWS_AS(stanley_depth(MonomialIdeal::unit_ideal(2)), Error);
}

TEST_CASE("sdepth certificates verify and report their bound") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rand_int(rng, 1, 3);
    const MonomialIdeal I = random_proper_ideal(rng, n, 2, n + 1);
    const SdepthCertificate cert = stanley_depth(I);
    CHECK(cert.search_exhausted);
    CHECK(cert.poset_bound == lcm_exponent(I));
    CHECK(bool(verify_decomposition(cert.witness)));
    if (!cert.witness.spaces.empty()) CHECK(sdepth_of(cert.witness) == cert.value);
    CHECK(cert.value >= 0);
    CHECK((cert.value == n) == I.is_zero());
  }
}

TEST_CASE("sdepth does not depend on the bound vector beyond the lcm") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rand_int(rng, 1, 3);
    const MonomialIdeal I = random_proper_ideal(rng, n, 2, n);
    Monomial wider = lcm_exponent(I);
    for (size_t i = 0; i < wider.e.size(); ++i) ++wider.e[i];
    CHECK(stanley_depth(I, wider).value == stanley_depth(I).value);
  }
}

TEST_CASE("sdepth is invariant under variable permutations") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rand_int(rng, 2, 3);
    const MonomialIdeal I = random_proper_ideal(rng, n, 2, n + 1);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rand_int(rng, 0, i))]);
    CHECK(stanley_depth(permuted(I, perm)).value == stanley_depth(I).value);
  }
}

TEST_CASE("decomposition induced by a prime filtration") {
  PrimeFiltration f;
  f.ideal = ideal(2, "x1^2, x1*x2");
  f.steps = {{parse_monomial("x1", 2), MonomialPrime(2, {1, 2})},
             {parse_monomial("1", 2), MonomialPrime(2, {1})}};
  REQUIRE(bool(verify_filtration(f)));
  const StanleyDecomposition d = decomposition_from_filtration(f);
  REQUIRE(d.spaces.size() == 2);
  CHECK(d.spaces[0] == parse_space("x1 K[]", 2));
  CHECK(d.spaces[1] == parse_space("1 K[x2]", 2));
  CHECK(bool(verify_decomposition(d)));

  PrimeFiltration trivial{MonomialIdeal::zero(1),
                          {{Monomial::unit(1), MonomialPrime::zero(1)}}};
  CHECK(decomposition_from_filtration(trivial).spaces ==
        std::vector<StanleySpace>{parse_space("1 K[x1]", 1)});

  PrimeFiltration one_step{ideal(2, "x1"),
                           {{Monomial::unit(2), MonomialPrime(2, {1})}}};
  CHECK(decomposition_from_filtration(one_step).spaces ==
        std::vector<StanleySpace>{parse_space("1 K[x2]", 2)});

  PrimeFiltration bad{ideal(2, "x1*x2"),
                      {{Monomial::unit(2), MonomialPrime(2, {1})}}};
  CHECK_THROWS_AS(decomposition_from_filtration(bad), Error);
}

TEST_CASE("sdepth dominates any filtration-induced decomposition") {
  std::mt19937_64 rng(404);
  int exercised = 0;
  for (int trial = 0; trial < 200 && exercised < 60; ++trial) {
    const int n = rand_int(rng, 1, 3);
    const MonomialIdeal I = random_proper_ideal(rng, n, 2, n + 1);
    const auto f = find_pretty_clean(I);
    if (!f) continue;
    ++exercised;
    const StanleyDecomposition d = decomposition_from_filtration(*f);
    const SdepthCertificate cert = stanley_depth(I);
    CHECK(cert.value >= sdepth_of(d));
    CHECK(cert.value >= depth(I));
  }
  CHECK(exercised >= 60);
}
