#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdepth/filtrations.hpp"
#include "sdepth/monomial.hpp"

namespace sdepth {

// The Stanley space u K[Z]: all monomials u v with supp(v) inside Z.
struct StanleySpace {
  Monomial root;
  std::vector<int> vars;  // sorted, 1-based

  int dimension() const { return static_cast<int>(vars.size()); }
  bool contains(const Monomial& m) const;

  auto operator<=>(const StanleySpace&) const = default;
};

// A claimed partition of the monomials outside the ideal into Stanley
// spaces. Constructors in this library always verify what they build.
struct StanleyDecomposition {
  MonomialIdeal ideal = MonomialIdeal::zero(0);
  std::vector<StanleySpace> spaces;

  int ambient() const { return ideal.ambient(); }
  bool operator==(const StanleyDecomposition&) const = default;
};

// min dimension over spaces; a malformed (empty) decomposition of a proper
// ideal is an error.
int sdepth_of(const StanleyDecomposition& d);

struct DecompositionCheck {
  bool ok = true;
  std::string reason;
  std::optional<Monomial> witness;  // violating exponent vector, if any

  explicit operator bool() const { return ok; }
};

// Exact partition check on the critical grid: per coordinate the tested
// values are V_i = {0} u {exponents of x_i over generators and roots} plus
// each value + 1. Every membership predicate involved is constant between
// consecutive tested values, so grid correctness implies correctness on all
// of Z^n_{>=0}.
DecompositionCheck verify_decomposition(const StanleyDecomposition& d);

struct SdepthCertificate {
  int value = 0;
  StanleyDecomposition witness;
  Monomial poset_bound;          // the g vector of the characteristic poset
  bool search_exhausted = false;  // all partitions with larger sdepth ruled out
};

// Exact Stanley depth of S/I by branch-and-bound interval partitioning of
// the characteristic poset {a : 0 <= a <= g, x^a not in I}; the interval
// [a,b] realizes the Stanley space x^a K[{i : b_i = g_i}]. g defaults to
// lcm_exponent(I), which suffices for exactness; any larger g gives the same
// value and is accepted for cross-checks.
SdepthCertificate stanley_depth(const MonomialIdeal& I,
                         std::optional<Monomial> g = std::nullopt);

// The Stanley decomposition a prime filtration induces: one space per step,
// rooted at the step monomial, spanning the complement of the step prime.
StanleyDecomposition decomposition_from_filtration(const PrimeFiltration& f);

}  // namespace sdepth
