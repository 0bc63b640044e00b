#include "sdepth/filtrations.hpp"

#include <algorithm>
#include <set>

#include "sdepth/budget.hpp"
#include "sdepth/error.hpp"
#include "sdepth/spectrum.hpp"

namespace sdepth {

namespace {

std::vector<MonomialPrime> support_of(const PrimeFiltration& f) {
  std::vector<MonomialPrime> s;
  s.reserve(f.steps.size());
  for (const auto& st : f.steps) s.push_back(st.prime);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool pretty_clean_order(const std::vector<PrimeFiltration::Step>& steps) {
  for (size_t i = 0; i < steps.size(); ++i)
    for (size_t j = i + 1; j < steps.size(); ++j)
      if (subset(steps[i].prime, steps[j].prime) && !(steps[i].prime == steps[j].prime))
        return false;
  return true;
}

// All monomials m with m <= bound componentwise, in (degree, lex) order.
std::vector<Monomial> box_monomials(const Monomial& bound) {
  std::vector<Monomial> out;
  Monomial a = Monomial::unit(bound.ambient());
  while (true) {
    out.push_back(a);
    int i = 0;
    for (; i < a.ambient(); ++i) {
      if (a.e[static_cast<size_t>(i)] < bound.e[static_cast<size_t>(i)]) {
        ++a.e[static_cast<size_t>(i)];
        break;
      }
      a.e[static_cast<size_t>(i)] = 0;
    }
    if (i == a.ambient()) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x < y;
  });
  return out;
}

// Backtracking for a pretty clean chain. Three exact prunes keep it fast:
// every step prime of a pretty clean filtration lies in Ass(S/I_0) (the
// support equals Ass); every step monomial avoids the variables outside the
// union of the Ass primes (such a variable stays regular along the chain, so
// a step it divides would already lie in the previous ideal); and the
// feasibility of the remaining search depends only on the current ideal plus
// the set of Ass-primes banned by the pretty clean order, so failed states
// are memoized.
struct PrettyCleanSearch {
  std::vector<Monomial> candidates;
  std::vector<MonomialPrime> primes;  // Ass(S/I_0), tall primes first
  std::vector<PrimeFiltration::Step> steps;
  std::set<std::pair<MonomialIdeal, unsigned long long>> dead;

  explicit PrettyCleanSearch(const MonomialIdeal& I) {
    primes = ass(I);
    if (primes.size() > 64)
      fail("malformed-input", "too many associated primes for the pretty clean search");
    std::vector<char> in_ass(static_cast<size_t>(I.ambient()) + 1, 0);
    for (const MonomialPrime& p : primes)
      for (int v : p.vars) in_ass[static_cast<size_t>(v)] = 1;
    Monomial bound = lcm_exponent(I);
    for (size_t i = 0; i < bound.e.size(); ++i)
      bound.e[i] = in_ass[i + 1] ? bound.e[i] + 1 : 0;
    candidates = box_monomials(bound);
    std::stable_sort(primes.begin(), primes.end(),
                     [](const MonomialPrime& p, const MonomialPrime& q) {
                       return p.height() > q.height();
                     });
  }

  unsigned long long ban_after(unsigned long long banned, const MonomialPrime& p) const {
    for (size_t i = 0; i < primes.size(); ++i)
      if (!(primes[i] == p) && subset(p, primes[i])) banned |= 1ull << i;
    return banned;
  }

  bool run(const MonomialIdeal& current, unsigned long long banned) {
    budget::checkpoint();
    if (current.is_unit()) return true;
    const auto key = std::make_pair(current, banned);
    if (dead.count(key)) return false;
    // suffix feasibility: the rest of the chain is a pretty clean filtration
    // of S/current, so its support is exactly Ass(S/current); every one of
    // those primes must still be playable
    for (const MonomialPrime& p : ass(current)) {
      bool playable = false;
      for (size_t i = 0; i < primes.size(); ++i)
        if (primes[i] == p) {
          playable = !(banned & (1ull << i));
          break;
        }
      if (!playable) {
        dead.insert(key);
        return false;
      }
    }
    struct Move {
      size_t prime_index;
      Monomial z;
    };
    std::vector<Move> moves;
    for (const Monomial& z : candidates) {
      if (contains(current, z)) continue;
      const auto prime = is_monomial_prime(colon(current, z));
      if (!prime) continue;
      for (size_t i = 0; i < primes.size(); ++i) {
        if (!(primes[i] == *prime)) continue;
        if (!(banned & (1ull << i))) moves.push_back({i, z});
        break;
      }
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return a.prime_index < b.prime_index;  // tall primes first; ties stay (degree, lex)
    });
    for (const Move& m : moves) {
      steps.push_back({m.z, primes[m.prime_index]});
      if (run(add(current, {m.z}), ban_after(banned, primes[m.prime_index]))) return true;
      steps.pop_back();
    }
    dead.insert(key);
    return false;
  }
};

}  // namespace

std::vector<MonomialIdeal> PrimeFiltration::chain() const {
  std::vector<MonomialIdeal> c{ideal};
  for (const auto& st : steps) c.push_back(add(c.back(), {st.z}));
  return c;
}

FiltrationCheck verify_filtration(const PrimeFiltration& f) {
  MonomialIdeal current = f.ideal;
  for (size_t j = 0; j < f.steps.size(); ++j) {
    const auto& st = f.steps[j];
    const int stepno = static_cast<int>(j) + 1;
    if (st.z.ambient() != f.ambient() || st.prime.ambient() != f.ambient())
      return {false, stepno, "step ambient differs from the filtration ambient"};
    if (contains(current, st.z))
      return {false, stepno, "step monomial already lies in the current ideal"};
    if (!(colon(current, st.z) == to_ideal(st.prime)))
      return {false, stepno, "colon of the step monomial is not the recorded prime"};
    current = add(current, {st.z});
  }
  if (!current.is_unit())
    return {false, static_cast<int>(f.steps.size()), "filtration does not end at S"};
  return {};
}

FiltrationReport classify(const PrimeFiltration& f) {
  if (f.ideal.is_unit()) fail("undefined", "no filtration of the zero module S/S");
  if (auto check = verify_filtration(f); !check)
    fail("invalid-filtration",
         "classify requires a verified filtration (step " +
             std::to_string(check.failing_step) + ": " + check.reason + ")");
  FiltrationReport r;
  r.support = support_of(f);
  r.pretty_clean = pretty_clean_order(f.steps);
  const std::vector<MonomialPrime> mins = min_primes(f.ideal);
  r.clean = r.support == mins;
  const std::vector<MonomialPrime> associated = ass(f.ideal);
  r.ass_equals_support = r.support == associated;
  // Herzog-Popescu: a pretty clean filtration has Supp = Ass. If our data
  // disagrees with the theorem, the computation is wrong somewhere.
  if (r.pretty_clean && !r.ass_equals_support)
    fail_internal("pretty clean filtration with Supp != Ass");
  return r;
}

std::optional<PrimeFiltration> find_pretty_clean(const MonomialIdeal& I) {
  if (I.is_unit()) fail("undefined", "no filtration of the zero module S/S");
  PrettyCleanSearch search(I);
  if (!search.run(I, 0)) return std::nullopt;
  PrimeFiltration f{I, std::move(search.steps)};
  if (auto check = verify_filtration(f); !check)
    fail_internal("pretty clean search produced an invalid filtration");
  return f;
}

PrimeFiltration clean_filtration_principal(const Monomial& u) {
  if (u.is_unit()) fail("undefined", "S/(1) has no prime filtration");
  const int n = u.ambient();
  PrimeFiltration f{MonomialIdeal::normalize(n, {u}), {}};
  Monomial d = u;
  while (!d.is_unit()) {
    const int k = d.support().back();
    d = divide(d, Monomial::variable(n, k));
    f.steps.push_back({d, MonomialPrime(n, {k})});
  }
  if (auto check = verify_filtration(f); !check) {
    // fallback: backtracking search; for a principal ideal any pretty clean
    // filtration has support Min((u)), hence is clean
    PrettyCleanSearch search(f.ideal);
    if (!search.run(f.ideal, 0))
      fail_internal("no clean filtration found for a principal monomial ideal");
    f.steps = std::move(search.steps);
  }
  if (!classify(f).clean)
    fail_internal("principal quotient filtration is not clean");
  return f;
}

PrimeFiltration descend_modulo_regular(const PrimeFiltration& f, const Monomial& u) {
  require_ambient(u.ambient(), f.ambient(), "descend");
  if (u.is_unit()) fail("undefined", "reduction by the unit monomial is undefined");
  if (auto check = verify_filtration(f); !check)
    fail("invalid-filtration", "descend requires a verified filtration: " + check.reason);
  if (!classify(f).pretty_clean)
    fail("invalid-filtration", "descend requires a pretty clean filtration");
  if (!is_regular(u, f.ideal))
    fail("not-regular", "monomial is not regular on S/I");
  for (const auto& st : f.steps)
    if (!coprime(u, st.z))
      fail("invalid-filtration",
           "step monomial shares variables with the regular monomial");

  const PrimeFiltration principal = clean_filtration_principal(u);
  PrimeFiltration g{add(f.ideal, {u}), {}};
  for (const auto& st : f.steps) {
    // refine (I_{j-1},u) c (I_j,u) by the clean filtration of S/(u),
    // translated by z_j; quotient primes are (P_j, x_k) for x_k | u
    for (const auto& fine : principal.steps) {
      std::vector<int> vars = st.prime.vars;
      vars.push_back(fine.prime.vars.front());
      g.steps.push_back({times(st.z, fine.z), MonomialPrime(f.ambient(), std::move(vars))});
    }
  }
  if (auto check = verify_filtration(g); !check)
    fail_internal("descent produced an invalid filtration (step " +
                  std::to_string(check.failing_step) + ": " + check.reason + ")");
  if (!classify(g).pretty_clean)
    fail_internal("descent produced a filtration that is not pretty clean");
  return g;
}

PrimeFiltration ascend_modulo_regular(const PrimeFiltration& fprime,
                                      const MonomialIdeal& I, const Monomial& u) {
  require_ambient(u.ambient(), I.ambient(), "ascend");
  require_ambient(fprime.ambient(), I.ambient(), "ascend");
  if (u.is_unit()) fail("undefined", "reduction by the unit monomial is undefined");
  if (!(fprime.ideal == add(I, {u})))
    fail("invalid-filtration", "filtration is not a filtration of S/(I,u)");
  if (auto check = verify_filtration(fprime); !check)
    fail("invalid-filtration", "ascend requires a verified filtration: " + check.reason);
  if (!classify(fprime).pretty_clean)
    fail("invalid-filtration", "ascend requires a pretty clean filtration");
  if (!is_regular(u, I)) fail("not-regular", "monomial is not regular on S/I");
  const AmbientSplit sp = split(I, u);

  PrimeFiltration f{I, {}};
  MonomialIdeal current = I;
  for (const auto& st : fprime.steps) {
    std::vector<int> supp = st.z.support();
    const bool inner_step = std::includes(sp.inner.begin(), sp.inner.end(),
                                          supp.begin(), supp.end());
    if (!inner_step) continue;  // the chain does not move inside the subring
    std::vector<int> contracted;
    for (int v : st.prime.vars)
      if (std::binary_search(sp.inner.begin(), sp.inner.end(), v))
        contracted.push_back(v);
    MonomialPrime prime(I.ambient(), std::move(contracted));
    if (!(colon(current, st.z) == to_ideal(prime)))
      fail_internal("kept step's colon is not the predicted contracted prime");
    f.steps.push_back({st.z, prime});
    current = add(current, {st.z});
  }
  if (auto check = verify_filtration(f); !check)
    fail_internal("ascent produced an invalid filtration (step " +
                  std::to_string(check.failing_step) + ": " + check.reason + ")");
  if (!classify(f).pretty_clean)
    fail_internal("ascent produced a filtration that is not pretty clean");
  return f;
}

PrimeFiltration pretty_clean_regular_sequence(const std::vector<Monomial>& us, int ambient) {
  for (const Monomial& m : us) {
    require_ambient(m.ambient(), ambient, "regular sequence");
    if (m.is_unit())
      fail("not-regular-sequence", "unit monomial in a regular sequence");
  }
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = i + 1; j < us.size(); ++j)
      if (!coprime(us[i], us[j]))
        fail("not-regular-sequence",
             "monomials " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " share a variable");
  PrimeFiltration f{MonomialIdeal::zero(ambient),
                    {{Monomial::unit(ambient), MonomialPrime::zero(ambient)}}};
  for (const Monomial& m : us) f = descend_modulo_regular(f, m);
  return f;
}

}  // namespace sdepth
