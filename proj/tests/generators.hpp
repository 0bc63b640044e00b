#pragma once

// Seeded random instances for property tests. Raw mt19937_64 with modulo
// draws keeps the streams identical across standard libraries.

#include <random>
#include <vector>

#include "sdepth/monomial.hpp"
#include "sdepth/spectrum.hpp"

namespace sdepth::testing {

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp,
                                bool allow_unit = true) {
  while (true) {
    Monomial m = Monomial::unit(n);
    for (int i = 0; i < n; ++i) m.e[static_cast<size_t>(i)] = rand_int(rng, 0, max_exp);
    if (allow_unit || !m.is_unit()) return m;
  }
}

inline MonomialIdeal random_proper_ideal(std::mt19937_64& rng, int n, int max_exp,
                                         int max_gens) {
  std::vector<Monomial> gens;
  const int count = rand_int(rng, 0, max_gens);
  for (int i = 0; i < count; ++i) {
    Monomial m = random_monomial(rng, n, max_exp);
    if (!m.is_unit()) gens.push_back(std::move(m));
  }
  return MonomialIdeal::normalize(n, std::move(gens));
}

// A monomial regular on S/I with bounded exponents, if any exists: its
// support must avoid every associated prime.
inline std::optional<Monomial> random_regular_monomial(std::mt19937_64& rng,
                                                       const MonomialIdeal& I,
                                                       int max_exp) {
  const int n = I.ambient();
  std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
  for (const MonomialPrime& p : ass(I))
    for (int v : p.vars) blocked[static_cast<size_t>(v)] = 1;
  std::vector<int> free_vars;
  for (int v = 1; v <= n; ++v)
    if (!blocked[static_cast<size_t>(v)]) free_vars.push_back(v);
  if (free_vars.empty()) return std::nullopt;
  Monomial u = Monomial::unit(n);
  for (int v : free_vars) u.e[static_cast<size_t>(v) - 1] = rand_int(rng, 0, max_exp);
  if (u.is_unit()) {
    const int v = free_vars[static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(free_vars.size()) - 1))];
    u.e[static_cast<size_t>(v) - 1] = rand_int(rng, 1, max_exp);
  }
  return u;
}

}  // namespace sdepth::testing
