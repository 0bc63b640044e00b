#pragma once

#include <vector>

#include "sdepth/monomial.hpp"
#include "sdepth/stanley.hpp"

namespace sdepth {

// Decompositions over a subring quotient T/L are represented in the full
// ambient ring as decompositions of S/(L, x_k): same variable indices, the
// missing variable appears as a degree-one generator. adjoin_variable and
// restrict_drop_variable convert between the two presentations.

// From a decomposition of S/(L, x_k) to one of S/L: x_k joins every space.
// Accepts k = ambient + 1, which first appends a fresh trailing variable.
// Every space gains exactly one dimension.
StanleyDecomposition adjoin_variable(const StanleyDecomposition& d, int k);

// From a decomposition of S/I (generators free of x_k) to one of S/(I, x_k):
// keep the spaces whose root x_k does not divide and delete x_k from their
// spans. Each kept space loses at most one dimension.
StanleyDecomposition restrict_drop_variable(const StanleyDecomposition& d, int k);

// Ascending chain of monomial ideals recorded by its start and the monomial
// adjoined at each step; the last step must reach the unit ideal.
struct IdealChain {
  MonomialIdeal start = MonomialIdeal::zero(0);
  std::vector<Monomial> step_monomials;

  std::vector<MonomialIdeal> ideals() const;
};

// Glue decompositions of the cyclic quotients S/L_j (L_j the annihilator
// I_{j-1} : x^{a_j}) into one of S/I_0 by translating part j by x^{a_j}.
// sdepth of the result is at least the min over the parts.
StanleyDecomposition assemble_from_chain(const IdealChain& chain,
                                         const std::vector<StanleyDecomposition>& parts);

struct ChainReduction {
  IdealChain chain;                // from (I,u) up to S
  StanleyDecomposition decomposition;  // of S/(I,u)
};

// Constructive direction of the sdepth reduction: build the chain from (I,u)
// to S that lowers one exponent of u at a time (ascending variable order)
// and assemble a decomposition of S/(I,u) with sdepth >= stanley_depth(S/I) - 1
// from one optimal decomposition of S/I.
ChainReduction chain_modulo_regular(const MonomialIdeal& I, const Monomial& u);

// Contracting direction: from a decomposition of S/(I,u) keep the spaces
// rooted inside the subring carrying I and widen them by all of supp(u);
// every kept space strictly gains dimension, so sdepth rises by at least 1.
StanleyDecomposition lift_modulo_regular(const StanleyDecomposition& dprime,
                                         const MonomialIdeal& I, const Monomial& u);

struct SdepthDropCheck {
  SdepthCertificate base;     // S/I
  SdepthCertificate reduced;  // S/(I,u)
  bool holds = false;         // reduced.value == base.value - 1
};

// Certify stanley_depth(S/(I,u)) = stanley_depth(S/I) - 1 for u regular on S/I by running
// the exact search on both sides. A report with holds = false is a
// counterexample to the identity and should never occur.
SdepthDropCheck check_sdepth_drop(const MonomialIdeal& I, const Monomial& u);

}  // namespace sdepth
