#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "sdepth/exact_rank.hpp"
#include "sdepth/monomial.hpp"

namespace sdepth {

// An irreducible monomial ideal (x_i^{e_i} : i in key set), e_i >= 1. Its
// radical is the monomial prime on the key set.
struct IrreducibleComponent {
  int n = 0;
  std::vector<std::pair<int, int>> pure_powers;  // (variable, exponent), sorted

  MonomialIdeal to_ideal() const;
  MonomialPrime radical() const;

  auto operator<=>(const IrreducibleComponent&) const = default;
};

// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

// Associated primes of S/I; {(0)} for I = 0. Sorted.
std::vector<MonomialPrime> ass(const MonomialIdeal& I);

// Inclusion-minimal elements of ass(I).
std::vector<MonomialPrime> min_primes(const MonomialIdeal& I);

// depth(S/I) = n - max{ i : H_i(x_1..x_n; S/I) != 0 }, computed one
// multidegree at a time as exact linear algebra over k. Koszul homology of a
// monomial quotient vanishes in multidegrees outside the box bounded by
// lcm_exponent(I) (multigraded Betti degrees divide the lcm of the
// generators), so only that box is enumerated.
int depth(const MonomialIdeal& I, CoefficientField k = CoefficientField::rationals());

// Same computation with an explicit box bound; exposed so the test suite can
// validate the lcm bound against a strictly larger box.
int depth_with_bound(const MonomialIdeal& I, const Monomial& bound, CoefficientField k);

}  // namespace sdepth
