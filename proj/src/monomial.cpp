#include "sdepth/monomial.hpp"

#include <algorithm>
#include <limits>

namespace sdepth {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
  for (int v : e)
    if (v < 0) fail("malformed-input", "negative exponent in monomial");
}

Monomial Monomial::unit(int ambient) {
  if (ambient < 0) fail("malformed-input", "negative ambient dimension");
  return Monomial(std::vector<int>(static_cast<size_t>(ambient), 0));
}

Monomial Monomial::variable(int ambient, int var, int power) {
  if (var < 1 || var > ambient)
    fail("malformed-input", "variable index out of range");
  if (power < 0) fail("malformed-input", "negative exponent");
  Monomial m = unit(ambient);
  m.e[static_cast<size_t>(var) - 1] = power;
  return m;
}

int Monomial::degree() const {
  long long d = 0;
  for (int v : e) d += v;
  if (d > std::numeric_limits<int>::max()) fail("overflow", "monomial degree overflow");
  return static_cast<int>(d);
}

bool Monomial::is_unit() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (e[static_cast<size_t>(i)] > 0) s.push_back(i + 1);
  return s;
}

void require_ambient(int have, int want, const char* what) {
  if (have != want)
    fail("ambient-mismatch", std::string(what) + ": ambient " +
                                 std::to_string(have) + " vs " + std::to_string(want));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_ambient(a.ambient(), b.ambient(), "divides");
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial times(const Monomial& a, const Monomial& b) {
  require_ambient(a.ambient(), b.ambient(), "times");
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) {
    if (r.e[i] > std::numeric_limits<int>::max() - b.e[i])
      fail("overflow", "exponent overflow in monomial product");
    r.e[i] += b.e[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_ambient(a.ambient(), b.ambient(), "gcd");
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_ambient(a.ambient(), b.ambient(), "lcm");
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  require_ambient(a.ambient(), b.ambient(), "colon_quotient");
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i] - b.e[i], 0);
  return r;
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) fail("malformed-input", "non-exact monomial division");
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  return gcd(a, b).is_unit();
}

MonomialPrime::MonomialPrime(int ambient, std::vector<int> variables)
    : n(ambient), vars(std::move(variables)) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    if (v < 1 || v > n) fail("malformed-input", "prime variable index out of range");
}

bool MonomialPrime::contains_var(int var) const {
  return std::binary_search(vars.begin(), vars.end(), var);
}

std::vector<int> MonomialPrime::complement() const {
  std::vector<int> c;
  for (int i = 1; i <= n; ++i)
    if (!contains_var(i)) c.push_back(i);
  return c;
}

bool subset(const MonomialPrime& p, const MonomialPrime& q) {
  require_ambient(p.n, q.n, "prime subset");
  return std::includes(q.vars.begin(), q.vars.end(), p.vars.begin(), p.vars.end());
}

MonomialIdeal MonomialIdeal::normalize(int ambient, std::vector<Monomial> gens) {
  if (ambient < 0) fail("malformed-input", "negative ambient dimension");
  for (const Monomial& g : gens)
    require_ambient(g.ambient(), ambient, "normalize");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal(ambient, std::move(minimal));
}

MonomialIdeal MonomialIdeal::zero(int ambient) {
  return MonomialIdeal(ambient, {});
}

MonomialIdeal MonomialIdeal::unit_ideal(int ambient) {
  return MonomialIdeal(ambient, {Monomial::unit(ambient)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_unit();
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  require_ambient(m.ambient(), I.ambient(), "contains");
  for (const Monomial& g : I.generators())
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& w) {
  require_ambient(w.ambient(), I.ambient(), "colon");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(colon_quotient(g, w));
  return MonomialIdeal::normalize(I.ambient(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& I, const std::vector<Monomial>& ms) {
  std::vector<Monomial> gens = I.generators();
  for (const Monomial& m : ms) {
    require_ambient(m.ambient(), I.ambient(), "add");
    gens.push_back(m);
  }
  return MonomialIdeal::normalize(I.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_ambient(J.ambient(), I.ambient(), "intersect");
  std::vector<Monomial> gens;
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(lcm(a, b));
  return MonomialIdeal::normalize(I.ambient(), std::move(gens));
}

bool subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  for (const Monomial& g : I.generators())
    if (!contains(J, g)) return false;
  return true;
}

std::optional<MonomialPrime> is_monomial_prime(const MonomialIdeal& I) {
  std::vector<int> vars;
  for (const Monomial& g : I.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.support().front());
  }
  return MonomialPrime(I.ambient(), std::move(vars));
}

bool is_regular(const Monomial& u, const MonomialIdeal& I) {
  if (I.is_unit()) fail("undefined", "regularity is undefined on the zero module S/S");
  return colon(I, u) == I;
}

Monomial lcm_exponent(const MonomialIdeal& I) {
  Monomial g = Monomial::unit(I.ambient());
  for (const Monomial& m : I.generators()) g = lcm(g, m);
  return g;
}

MonomialIdeal to_ideal(const MonomialPrime& p) {
  std::vector<Monomial> gens;
  gens.reserve(p.vars.size());
  for (int v : p.vars) gens.push_back(Monomial::variable(p.n, v));
  return MonomialIdeal::normalize(p.n, std::move(gens));
}

AmbientSplit split(const MonomialIdeal& I, const Monomial& u) {
  require_ambient(u.ambient(), I.ambient(), "split");
  AmbientSplit s;
  s.ambient = I.ambient();
  s.outer = u.support();
  for (const Monomial& g : I.generators())
    for (int v : s.outer)
      if (g.exponent(v) > 0)
        fail("not-split", "generator shares variable x" + std::to_string(v) +
                              " with the reduction monomial");
  for (int i = 1; i <= s.ambient; ++i)
    if (u.exponent(i) == 0) s.inner.push_back(i);
  return s;
}

Monomial embed(const Monomial& m, int new_ambient) {
  if (new_ambient < m.ambient())
    fail("malformed-input", "embed cannot shrink the ambient ring");
  Monomial r = m;
  r.e.resize(static_cast<size_t>(new_ambient), 0);
  return r;
}

MonomialIdeal embed(const MonomialIdeal& I, int new_ambient) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(embed(g, new_ambient));
  return MonomialIdeal::normalize(new_ambient, std::move(gens));
}

MonomialPrime embed(const MonomialPrime& p, int new_ambient) {
  if (new_ambient < p.n) fail("malformed-input", "embed cannot shrink the ambient ring");
  return MonomialPrime(new_ambient, p.vars);
}

}  // namespace sdepth
