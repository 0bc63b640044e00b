#include "sdepth/stanley.hpp"

#include <algorithm>

#include "sdepth/budget.hpp"
#include "sdepth/error.hpp"

namespace sdepth {

namespace {

// Cartesian product walk over per-coordinate value lists.
template <typename F>
void for_each_grid_point(const std::vector<std::vector<int>>& values, F&& body) {
  const int n = static_cast<int>(values.size());
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  Monomial a = Monomial::unit(n);
  while (true) {
    for (int i = 0; i < n; ++i)
      a.e[static_cast<size_t>(i)] = values[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    body(a);
    int i = 0;
    for (; i < n; ++i) {
      if (++idx[static_cast<size_t>(i)] < values[static_cast<size_t>(i)].size()) break;
      idx[static_cast<size_t>(i)] = 0;
    }
    if (i == n) return;
  }
}

std::vector<std::vector<int>> critical_grid(const StanleyDecomposition& d) {
  const int n = d.ambient();
  std::vector<std::vector<int>> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int>& v = values[static_cast<size_t>(i)];
    v.push_back(0);
    for (const Monomial& g : d.ideal.generators()) v.push_back(g.e[static_cast<size_t>(i)]);
    for (const StanleySpace& s : d.spaces) v.push_back(s.root.e[static_cast<size_t>(i)]);
    const size_t base = v.size();
    for (size_t j = 0; j < base; ++j) v.push_back(v[j] + 1);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return values;
}

struct PosetSearch {
  int n = 0;
  Monomial g;
  const MonomialIdeal* ideal = nullptr;
  std::vector<Monomial> elems;          // linear extension: degree then lex
  std::vector<int> elem_index;          // mixed-radix rank in box -> index in elems, -1 if in I
  std::vector<long long> radix;
  std::vector<char> covered;
  std::vector<std::pair<Monomial, Monomial>> intervals;

  long long rank_of(const Monomial& a) const {
    long long r = 0;
    for (int i = 0; i < n; ++i) r += radix[static_cast<size_t>(i)] * a.e[static_cast<size_t>(i)];
    return r;
  }

  int tight_coords(const Monomial& b) const {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (b.e[static_cast<size_t>(i)] == g.e[static_cast<size_t>(i)]) ++c;
    return c;
  }

  bool interval_free(const Monomial& lo, const Monomial& hi) const {
    bool free = true;
    walk_interval(lo, hi, [&](long long r) {
      if (covered[static_cast<size_t>(elem_index[static_cast<size_t>(r)])]) free = false;
    });
    return free;
  }

  template <typename F>
  void walk_interval(const Monomial& lo, const Monomial& hi, F&& body) const {
    Monomial a = lo;
    while (true) {
      body(rank_of(a));
      int i = 0;
      for (; i < n; ++i) {
        if (a.e[static_cast<size_t>(i)] < hi.e[static_cast<size_t>(i)]) {
          ++a.e[static_cast<size_t>(i)];
          break;
        }
        a.e[static_cast<size_t>(i)] = lo.e[static_cast<size_t>(i)];
      }
      if (i == n) return;
    }
  }

  void mark(const Monomial& lo, const Monomial& hi, char value) {
    walk_interval(lo, hi, [&](long long r) {
      covered[static_cast<size_t>(elem_index[static_cast<size_t>(r)])] = value;
    });
  }

  // Partition the not-yet-covered poset into intervals whose top touches the
  // bound in at least k coordinates. An interval [a,b] equals the monomial
  // set of its Stanley space x^a K[{i : b_i = g_i}] exactly when every
  // coordinate of b is either a_i or g_i, so only such tops are admissible.
  // Tops are tried largest interval first, ties broken lexicographically,
  // which makes certificates deterministic.
  bool cover(int k, size_t from) {
    budget::checkpoint();
    while (from < elems.size() && covered[from]) ++from;
    if (from == elems.size()) return true;
    const Monomial& root = elems[from];
    struct Candidate {
      long long size;
      Monomial top;
    };
    std::vector<Candidate> cands;
    std::vector<int> loose;  // coordinates the top may raise to the bound
    for (int i = 0; i < n; ++i)
      if (root.e[static_cast<size_t>(i)] < g.e[static_cast<size_t>(i)]) loose.push_back(i);
    for (unsigned mask = 0; mask < (1u << loose.size()); ++mask) {
      Monomial b = root;
      long long size = 1;
      for (size_t j = 0; j < loose.size(); ++j)
        if (mask & (1u << j)) {
          const size_t i = static_cast<size_t>(loose[j]);
          b.e[i] = g.e[i];
          size *= g.e[i] - root.e[i] + 1;
        }
      if (tight_coords(b) >= k && !contains(*ideal, b)) cands.push_back({size, std::move(b)});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
      if (x.size != y.size) return x.size > y.size;
      return x.top < y.top;
    });
    for (const Candidate& c : cands) {
      if (!interval_free(root, c.top)) continue;
      mark(root, c.top, 1);
      intervals.emplace_back(root, c.top);
      if (cover(k, from + 1)) return true;
      intervals.pop_back();
      mark(root, c.top, 0);
    }
    return false;
  }
};

}  // namespace

bool StanleySpace::contains(const Monomial& m) const {
  require_ambient(m.ambient(), root.ambient(), "space membership");
  for (int i = 1; i <= root.ambient(); ++i) {
    const int have = m.exponent(i), want = root.exponent(i);
    if (have < want) return false;
    if (have > want && !std::binary_search(vars.begin(), vars.end(), i)) return false;
  }
  return true;
}

int sdepth_of(const StanleyDecomposition& d) {
  if (d.spaces.empty()) {
    if (d.ideal.is_unit()) return d.ambient();  // empty module, nothing to cover
    fail("malformed-input", "decomposition of a proper ideal has no spaces");
  }
  int m = d.spaces.front().dimension();
  for (const StanleySpace& s : d.spaces) m = std::min(m, s.dimension());
  return m;
}

DecompositionCheck verify_decomposition(const StanleyDecomposition& d) {
  for (const StanleySpace& s : d.spaces) {
    if (s.root.ambient() != d.ambient())
      return {false, "space root has a different ambient", s.root};
    for (int v : s.vars)
      if (v < 1 || v > d.ambient())
        return {false, "space variable index out of range", s.root};
    if (contains(d.ideal, s.root))
      return {false, "space root lies inside the ideal", s.root};
  }
  DecompositionCheck result;
  for_each_grid_point(critical_grid(d), [&](const Monomial& a) {
    if (!result.ok) return;
    int covering = 0;
    for (const StanleySpace& s : d.spaces)
      if (s.contains(a)) ++covering;
    const bool inside = contains(d.ideal, a);
    if (inside && covering > 0)
      result = {false, "monomial inside the ideal is covered by a space", a};
    else if (!inside && covering == 0)
      result = {false, "monomial outside the ideal is uncovered", a};
    else if (!inside && covering > 1)
      result = {false, "monomial outside the ideal is covered more than once", a};
  });
  return result;
}

SdepthCertificate stanley_depth(const MonomialIdeal& I, std::optional<Monomial> g) {
  if (I.is_unit()) fail("undefined", "Stanley depth of the zero module S/S is undefined");
  const int n = I.ambient();
  PosetSearch search;
  search.n = n;
  search.g = g.value_or(lcm_exponent(I));
  require_ambient(search.g.ambient(), n, "sdepth bound");
  if (!divides(lcm_exponent(I), search.g))
    fail("malformed-input", "sdepth bound must dominate the generator lcm");
  search.ideal = &I;

  search.radix.assign(static_cast<size_t>(n), 1);
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    search.radix[static_cast<size_t>(i)] = total;
    total *= search.g.e[static_cast<size_t>(i)] + 1;
  }
  search.elem_index.assign(static_cast<size_t>(total), -1);
  {
    Monomial a = Monomial::unit(n);
    while (true) {
      if (!contains(I, a)) search.elems.push_back(a);
      int i = 0;
      for (; i < n; ++i) {
        if (a.e[static_cast<size_t>(i)] < search.g.e[static_cast<size_t>(i)]) {
          ++a.e[static_cast<size_t>(i)];
          break;
        }
        a.e[static_cast<size_t>(i)] = 0;
      }
      if (i == n) break;
    }
  }
  std::sort(search.elems.begin(), search.elems.end(),
            [](const Monomial& x, const Monomial& y) {
              if (x.degree() != y.degree()) return x.degree() < y.degree();
              return x < y;
            });
  for (size_t i = 0; i < search.elems.size(); ++i)
    search.elem_index[static_cast<size_t>(search.rank_of(search.elems[i]))] =
        static_cast<int>(i);

  int upper = 0;
  for (const Monomial& b : search.elems) upper = std::max(upper, search.tight_coords(b));

  SdepthCertificate cert;
  cert.poset_bound = search.g;
  for (int k = upper; k >= 0; --k) {
    search.covered.assign(search.elems.size(), 0);
    search.intervals.clear();
    if (!search.cover(k, 0)) continue;
    cert.value = k;
    cert.search_exhausted = true;
    cert.witness.ideal = I;
    for (const auto& [lo, hi] : search.intervals) {
      StanleySpace s;
      s.root = lo;
      for (int i = 1; i <= n; ++i)
        if (hi.exponent(i) == search.g.exponent(i)) s.vars.push_back(i);
      cert.witness.spaces.push_back(std::move(s));
    }
    break;
  }
  if (!cert.search_exhausted)
    fail_internal("interval partition search failed even for sdepth 0");
  if (auto check = verify_decomposition(cert.witness); !check)
    fail_internal("sdepth witness fails verification: " + check.reason);
  if (!cert.witness.spaces.empty() && sdepth_of(cert.witness) != cert.value)
    fail_internal("sdepth witness value mismatch");
  return cert;
}

StanleyDecomposition decomposition_from_filtration(const PrimeFiltration& f) {
  if (auto check = verify_filtration(f); !check)
    fail("invalid-filtration",
         "decomposition requires a verified filtration (step " +
             std::to_string(check.failing_step) + ": " + check.reason + ")");
  StanleyDecomposition d;
  d.ideal = f.ideal;
  for (const auto& st : f.steps)
    d.spaces.push_back({st.z, st.prime.complement()});
  if (auto check = verify_decomposition(d); !check)
    fail_internal("filtration-induced decomposition fails verification: " + check.reason);
  return d;
}

}  // namespace sdepth
