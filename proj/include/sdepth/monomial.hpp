#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sdepth/error.hpp"

namespace sdepth {

// A monomial in K[x_1..x_n] is its exponent vector. Variables are addressed
// 1-based everywhere in the public API; the unit monomial is all zeros.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  static Monomial unit(int ambient);
  static Monomial variable(int ambient, int var, int power = 1);

  int ambient() const { return static_cast<int>(e.size()); }
  int exponent(int var) const { return e[static_cast<size_t>(var) - 1]; }
  int degree() const;
  bool is_unit() const;
  std::vector<int> support() const;

  auto operator<=>(const Monomial&) const = default;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial times(const Monomial& a, const Monomial& b);  // overflow is a hard error
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// a / b, exponentwise max(a_i - b_i, 0); this is the generator map of (a) : b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);
// exact division; requires divides(b, a)
Monomial divide(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// A monomial prime is generated by a subset of the variables; the empty
// subset is the zero prime (0), which legitimately occurs as a filtration
// quotient of S itself.
struct MonomialPrime {
  int n = 0;
  std::vector<int> vars;  // sorted, 1-based

  MonomialPrime() = default;
  MonomialPrime(int ambient, std::vector<int> variables);

  static MonomialPrime zero(int ambient) { return MonomialPrime(ambient, {}); }

  int ambient() const { return n; }
  int height() const { return static_cast<int>(vars.size()); }
  bool is_zero() const { return vars.empty(); }
  bool contains_var(int var) const;
  std::vector<int> complement() const;

  auto operator<=>(const MonomialPrime&) const = default;
};

bool subset(const MonomialPrime& p, const MonomialPrime& q);

// Minimal monomial generators in lexicographic order; equality of ideals is
// structural equality of this canonical form. The zero ideal has no
// generators, the unit ideal is generated by 1.
class MonomialIdeal {
public:
  static MonomialIdeal normalize(int ambient, std::vector<Monomial> gens);
  static MonomialIdeal zero(int ambient);
  static MonomialIdeal unit_ideal(int ambient);

  int ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  MonomialIdeal(int ambient, std::vector<Monomial> gens)
      : n_(ambient), gens_(std::move(gens)) {}

  int n_ = 0;
  std::vector<Monomial> gens_;
};

bool contains(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& w);
MonomialIdeal add(const MonomialIdeal& I, const std::vector<Monomial>& ms);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
bool subset(const MonomialIdeal& I, const MonomialIdeal& J);

// The variable subset if I is prime (zero ideal gives the zero prime),
// absent otherwise.
std::optional<MonomialPrime> is_monomial_prime(const MonomialIdeal& I);

// u is regular on S/I iff I : u = I. Undefined for the unit ideal.
bool is_regular(const Monomial& u, const MonomialIdeal& I);

// Componentwise max of the generator exponents; the box bound used by the
// spectrum and sdepth computations.
Monomial lcm_exponent(const MonomialIdeal& I);

MonomialIdeal to_ideal(const MonomialPrime& p);

// Partition of the variables into the subring carrying I (inner) and the
// variables carrying u (outer = supp u). Requires every generator of I to
// have support disjoint from supp(u); no relabeling is performed.
struct AmbientSplit {
  int ambient = 0;
  std::vector<int> inner;
  std::vector<int> outer;
};

AmbientSplit split(const MonomialIdeal& I, const Monomial& u);

// Append fresh trailing variables (no relabeling of existing ones).
Monomial embed(const Monomial& m, int new_ambient);
MonomialIdeal embed(const MonomialIdeal& I, int new_ambient);
MonomialPrime embed(const MonomialPrime& p, int new_ambient);

void require_ambient(int have, int want, const char* what);

}  // namespace sdepth
