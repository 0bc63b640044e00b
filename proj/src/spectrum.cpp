#include "sdepth/spectrum.hpp"

#include <algorithm>
#include <map>

#include "sdepth/budget.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

// Walk every exponent vector a with 0 <= a <= bound.
template <typename F>
void for_each_in_box(const Monomial& bound, F&& body) {
  Monomial a = Monomial::unit(bound.ambient());
  while (true) {
    body(a);
    int i = 0;
    for (; i < a.ambient(); ++i) {
      if (a.e[static_cast<size_t>(i)] < bound.e[static_cast<size_t>(i)]) {
        ++a.e[static_cast<size_t>(i)];
        break;
      }
      a.e[static_cast<size_t>(i)] = 0;
    }
    if (i == a.ambient()) return;
  }
}

void decompose_rec(const MonomialIdeal& I, std::vector<IrreducibleComponent>& out) {
  budget::checkpoint();
  // find a generator that is not a pure power
  for (const Monomial& g : I.generators()) {
    std::vector<int> supp = g.support();
    if (supp.size() < 2) continue;
    const int v = supp.front();
    Monomial p = Monomial::variable(I.ambient(), v, g.exponent(v));
    Monomial q = divide(g, p);
    // (J, pq) = (J, p) meet (J, q) for coprime p, q
    std::vector<Monomial> rest;
    for (const Monomial& h : I.generators())
      if (!(h == g)) rest.push_back(h);
    MonomialIdeal base = MonomialIdeal::normalize(I.ambient(), rest);
    decompose_rec(add(base, {p}), out);
    decompose_rec(add(base, {q}), out);
    return;
  }
  IrreducibleComponent c;
  c.n = I.ambient();
  for (const Monomial& g : I.generators()) {
    const int v = g.support().front();
    c.pure_powers.emplace_back(v, g.exponent(v));
  }
  std::sort(c.pure_powers.begin(), c.pure_powers.end());
  out.push_back(std::move(c));
}

// Critical-grid membership check that the components really intersect to I.
void check_decomposition(const MonomialIdeal& I,
                         const std::vector<IrreducibleComponent>& comps) {
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(comps.size());
  for (const auto& c : comps) ideals.push_back(c.to_ideal());
  Monomial bound = lcm_exponent(I);
  for (const auto& J : ideals) bound = lcm(bound, lcm_exponent(J));
  for (size_t i = 0; i < bound.e.size(); ++i) ++bound.e[i];
  for_each_in_box(bound, [&](const Monomial& a) {
    bool in_all = true;
    for (const auto& J : ideals)
      if (!contains(J, a)) {
        in_all = false;
        break;
      }
    if (in_all != contains(I, a))
      fail_internal("irreducible decomposition does not intersect to the ideal");
  });
}

}  // namespace

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(pure_powers.size());
  for (auto [v, e] : pure_powers) gens.push_back(Monomial::variable(n, v, e));
  return MonomialIdeal::normalize(n, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<int> vars;
  vars.reserve(pure_powers.size());
  for (auto [v, e] : pure_powers) vars.push_back(v);
  return MonomialPrime(n, std::move(vars));
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    fail("undefined", "irreducible decomposition needs a proper nonzero ideal");
  std::vector<IrreducibleComponent> comps;
  decompose_rec(I, comps);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  // drop components containing the intersection of the others
  for (size_t i = 0; i < comps.size();) {
    MonomialIdeal rest = MonomialIdeal::unit_ideal(I.ambient());
    for (size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest = intersect(rest, comps[j].to_ideal());
    if (comps.size() > 1 && subset(rest, comps[i].to_ideal()))
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  check_decomposition(I, comps);
  return comps;
}

std::vector<MonomialPrime> ass(const MonomialIdeal& I) {
  if (I.is_unit()) fail("undefined", "Ass is undefined for the unit ideal");
  if (I.is_zero()) return {MonomialPrime::zero(I.ambient())};
  std::vector<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(I)) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<MonomialPrime> min_primes(const MonomialIdeal& I) {
  std::vector<MonomialPrime> primes = ass(I);
  std::vector<MonomialPrime> minimal;
  for (const auto& p : primes) {
    bool is_min = true;
    for (const auto& q : primes)
      if (!(q == p) && subset(q, p)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

int depth(const MonomialIdeal& I, CoefficientField k) {
  return depth_with_bound(I, lcm_exponent(I), k);
}

int depth_with_bound(const MonomialIdeal& I, const Monomial& bound, CoefficientField k) {
  if (I.is_unit()) fail("undefined", "depth is undefined for the zero module S/S");
  require_ambient(bound.ambient(), I.ambient(), "depth bound");
  const int n = I.ambient();

  // subsets of {1..n} grouped by cardinality, each with its exponent vector
  std::vector<std::vector<unsigned>> by_card(static_cast<size_t>(n) + 1);
  for (unsigned t = 0; t < (1u << n); ++t)
    by_card[static_cast<size_t>(__builtin_popcount(t))].push_back(t);

  int top_nonvanishing = 0;  // H_0 = K at multidegree 0 always survives
  for_each_in_box(bound, [&](const Monomial& a) {
    budget::checkpoint();
    // basis of the Koszul complex on S/I in multidegree a: subsets T with
    // a - e_T >= 0 and x^(a - e_T) outside I
    std::vector<std::map<unsigned, int>> index(static_cast<size_t>(n) + 1);
    std::vector<int> dim(static_cast<size_t>(n) + 1, 0);
    auto monomial_of = [&](const Monomial& deg, unsigned t, Monomial& out) {
      out = deg;
      for (int i = 0; i < n; ++i)
        if (t & (1u << i)) {
          if (out.e[static_cast<size_t>(i)] == 0) return false;
          --out.e[static_cast<size_t>(i)];
        }
      return true;
    };
    Monomial scratch;
    for (int card = 0; card <= n; ++card)
      for (unsigned t : by_card[static_cast<size_t>(card)])
        if (monomial_of(a, t, scratch) && !contains(I, scratch))
          index[static_cast<size_t>(card)][t] = dim[static_cast<size_t>(card)]++;

    // differential d_i maps card-i basis elements into card-(i-1)
    std::vector<int> rank_d(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) {
      if (dim[static_cast<size_t>(i)] == 0 || dim[static_cast<size_t>(i) - 1] == 0) continue;
      IntMatrix mat(dim[static_cast<size_t>(i) - 1], dim[static_cast<size_t>(i)]);
      for (auto [t, col] : index[static_cast<size_t>(i)]) {
        int sign = 1;
        for (int v = 0; v < n; ++v) {
          if (!(t & (1u << v))) continue;
          unsigned s = t & ~(1u << v);
          auto it = index[static_cast<size_t>(i) - 1].find(s);
          if (it != index[static_cast<size_t>(i) - 1].end())
            mat.at(it->second, col) = sign;
          sign = -sign;
        }
      }
      rank_d[static_cast<size_t>(i)] = rank(std::move(mat), k);
    }
    for (int i = std::max(top_nonvanishing + 1, 1); i <= n; ++i) {
      const int homology = dim[static_cast<size_t>(i)] - rank_d[static_cast<size_t>(i)] -
                           rank_d[static_cast<size_t>(i) + 1];
      if (homology > 0) top_nonvanishing = std::max(top_nonvanishing, i);
    }
  });
  return n - top_nonvanishing;
}

}  // namespace sdepth
