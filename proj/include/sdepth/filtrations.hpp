#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdepth/monomial.hpp"

namespace sdepth {

// A prime filtration I = I_0 c I_1 c ... c I_r = S recorded by its step
// monomials: I_j = (I_{j-1}, z_j) with z_j not in I_{j-1} and
// I_{j-1} : z_j = P_j prime, so I_j/I_{j-1} = S/P_j shifted by the exponent
// vector of z_j.
struct PrimeFiltration {
  struct Step {
    Monomial z;
    MonomialPrime prime;
    bool operator==(const Step&) const = default;
  };

  MonomialIdeal ideal = MonomialIdeal::zero(0);
  std::vector<Step> steps;

  int ambient() const { return ideal.ambient(); }
  // I_0, I_1, ..., I_r
  std::vector<MonomialIdeal> chain() const;

  bool operator==(const PrimeFiltration&) const = default;
};

struct FiltrationCheck {
  bool ok = true;
  int failing_step = -1;  // 1-based; -1 when ok
  std::string reason;

  explicit operator bool() const { return ok; }
};

FiltrationCheck verify_filtration(const PrimeFiltration& f);

struct FiltrationReport {
  std::vector<MonomialPrime> support;  // sorted set
  bool pretty_clean = false;
  bool clean = false;
  bool ass_equals_support = false;
};

// Computes the support and the pretty clean / clean predicates; requires a
// filtration that verifies.
FiltrationReport classify(const PrimeFiltration& f);

// Bounded backtracking search for a pretty clean filtration. Step monomials
// range over the box lcm_exponent(I) + 1; completeness of that bound is an
// empirical assumption of the search, not a theorem (see README).
std::optional<PrimeFiltration> find_pretty_clean(const MonomialIdeal& I);

// The clean filtration of S/(u): peel one variable at a time off the divisor
// chain u > u/x_k > ... > 1, largest variable index first. Support is
// {(x_i) : x_i | u}.
PrimeFiltration clean_filtration_principal(const Monomial& u);

// Pretty clean filtration of S/(I,u) refined from a pretty clean filtration
// of S/I, for u regular on S/I: each coarse step (I_{j-1},u) c (I_j,u) is
// refined by the clean filtration of the principal quotient by u, with
// primes (P_j, x_k) for x_k | u.
PrimeFiltration descend_modulo_regular(const PrimeFiltration& f, const Monomial& u);

// Pretty clean filtration of S/I contracted from a pretty clean filtration
// of S/(I,u): keep exactly the steps whose monomial avoids supp(u) and
// restrict their primes to the inner variables.
PrimeFiltration ascend_modulo_regular(const PrimeFiltration& fprime,
                                      const MonomialIdeal& I, const Monomial& u);

// Pretty clean filtration of (u_1,...,u_k) for pairwise coprime nonunit
// monomials (a monomial regular sequence), by iterated descent from the
// trivial filtration of S.
PrimeFiltration pretty_clean_regular_sequence(const std::vector<Monomial>& us, int ambient);

}  // namespace sdepth
