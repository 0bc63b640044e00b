#include "sdepth/transforms.hpp"

#include <algorithm>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

bool var_in(const std::vector<int>& vars, int k) {
  return std::binary_search(vars.begin(), vars.end(), k);
}

}  // namespace

StanleyDecomposition adjoin_variable(const StanleyDecomposition& d, int k) {
  StanleyDecomposition in = d;
  if (k == d.ambient() + 1) {
    in.ideal = embed(in.ideal, k);
    for (StanleySpace& s : in.spaces) s.root = embed(s.root, k);
  } else if (k < 1 || k > d.ambient()) {
    fail("malformed-input", "adjoined variable index out of range");
  }
  const Monomial xk = Monomial::variable(in.ambient(), k);
  std::vector<Monomial> gens;
  for (const Monomial& g : in.ideal.generators()) {
    if (g == xk) continue;  // drop the presentation generator of the missing variable
    if (g.exponent(k) > 0)
      fail("malformed-input", "ideal generator involves the adjoined variable");
    gens.push_back(g);
  }
  StanleyDecomposition out;
  out.ideal = MonomialIdeal::normalize(in.ambient(), std::move(gens));
  for (const StanleySpace& s : in.spaces) {
    if (s.root.exponent(k) > 0)
      fail("malformed-input", "space root involves the adjoined variable");
    if (var_in(s.vars, k))
      fail("malformed-input", "space already spans the adjoined variable");
    StanleySpace t = s;
    t.vars.insert(std::upper_bound(t.vars.begin(), t.vars.end(), k), k);
    out.spaces.push_back(std::move(t));
  }
  if (auto check = verify_decomposition(out); !check)
    fail("invalid-decomposition",
         "input is not a decomposition modulo the adjoined variable: " + check.reason);
  return out;
}

StanleyDecomposition restrict_drop_variable(const StanleyDecomposition& d, int k) {
  if (k < 1 || k > d.ambient())
    fail("malformed-input", "dropped variable index out of range");
  for (const Monomial& g : d.ideal.generators())
    if (g.exponent(k) > 0)
      fail("malformed-input", "ideal generator involves the dropped variable");
  StanleyDecomposition out;
  out.ideal = add(d.ideal, {Monomial::variable(d.ambient(), k)});
  for (const StanleySpace& s : d.spaces) {
    if (s.root.exponent(k) > 0) continue;
    StanleySpace t = s;
    t.vars.erase(std::remove(t.vars.begin(), t.vars.end(), k), t.vars.end());
    out.spaces.push_back(std::move(t));
  }
  if (auto check = verify_decomposition(out); !check)
    fail("invalid-decomposition",
         "restriction does not decompose modulo the dropped variable: " + check.reason);
  return out;
}

std::vector<MonomialIdeal> IdealChain::ideals() const {
  std::vector<MonomialIdeal> c{start};
  for (const Monomial& m : step_monomials) c.push_back(add(c.back(), {m}));
  return c;
}

StanleyDecomposition assemble_from_chain(const IdealChain& chain,
                                         const std::vector<StanleyDecomposition>& parts) {
  if (parts.size() != chain.step_monomials.size())
    fail("malformed-input", "one decomposition is needed per chain step");
  const std::vector<MonomialIdeal> ideals = chain.ideals();
  if (!ideals.back().is_unit())
    fail("malformed-input", "chain does not end at S");
  StanleyDecomposition out;
  out.ideal = chain.start;
  for (size_t j = 0; j < parts.size(); ++j) {
    const Monomial& w = chain.step_monomials[j];
    if (contains(ideals[j], w))
      fail("malformed-input", "chain step " + std::to_string(j + 1) +
                                  " adjoins a monomial already in the ideal");
    const MonomialIdeal annihilator = colon(ideals[j], w);
    if (!(parts[j].ideal == annihilator))
      fail("invalid-decomposition",
           "part " + std::to_string(j + 1) + " does not decompose the step annihilator");
    if (auto check = verify_decomposition(parts[j]); !check)
      fail("invalid-decomposition",
           "part " + std::to_string(j + 1) + " fails verification: " + check.reason);
    for (const StanleySpace& s : parts[j].spaces)
      out.spaces.push_back({times(s.root, w), s.vars});
  }
  if (auto check = verify_decomposition(out); !check)
    fail_internal("assembled decomposition fails verification: " + check.reason);
  return out;
}

ChainReduction chain_modulo_regular(const MonomialIdeal& I, const Monomial& u) {
  if (u.is_unit()) fail("undefined", "reduction by the unit monomial is undefined");
  if (!is_regular(u, I)) fail("not-regular", "monomial is not regular on S/I");
  split(I, u);  // normal-form check: generators avoid supp(u)

  // chain from (I,u) to S: lower the exponent of the smallest u-variable to
  // zero, then the next, one unit per step
  ChainReduction r;
  r.chain.start = add(I, {u});
  Monomial v = u;
  std::vector<int> step_var;
  while (!v.is_unit()) {
    const int k = v.support().front();
    v = divide(v, Monomial::variable(u.ambient(), k));
    r.chain.step_monomials.push_back(v);
    step_var.push_back(k);
  }

  // one optimal decomposition of S/I serves every step: the annihilator of
  // step j is (I, x_k), and restricting drops exactly the u-variable k
  const SdepthCertificate base = stanley_depth(I);
  std::vector<StanleyDecomposition> parts;
  parts.reserve(step_var.size());
  for (int k : step_var) parts.push_back(restrict_drop_variable(base.witness, k));
  r.decomposition = assemble_from_chain(r.chain, parts);
  if (sdepth_of(r.decomposition) < base.value - 1)
    fail_internal("chain decomposition lost more than one dimension");
  return r;
}

StanleyDecomposition lift_modulo_regular(const StanleyDecomposition& dprime,
                                         const MonomialIdeal& I, const Monomial& u) {
  require_ambient(dprime.ambient(), I.ambient(), "lift");
  if (u.is_unit()) fail("undefined", "reduction by the unit monomial is undefined");
  if (!is_regular(u, I)) fail("not-regular", "monomial is not regular on S/I");
  const AmbientSplit sp = split(I, u);
  if (!(dprime.ideal == add(I, {u})))
    fail("invalid-decomposition", "input does not decompose S/(I,u)");
  if (auto check = verify_decomposition(dprime); !check)
    fail("invalid-decomposition", "input fails verification: " + check.reason);

  StanleyDecomposition out;
  out.ideal = I;
  for (const StanleySpace& s : dprime.spaces) {
    std::vector<int> supp = s.root.support();
    const bool rooted_inner =
        std::includes(sp.inner.begin(), sp.inner.end(), supp.begin(), supp.end());
    if (!rooted_inner) {
      // dropped spaces must owe their exclusion to an outer variable
      bool outer_divides = false;
      for (int v : sp.outer)
        if (s.root.exponent(v) > 0) outer_divides = true;
      if (!outer_divides)
        fail_internal("dropped space root not divisible by any outer variable");
      continue;
    }
    // a kept space cannot span all of supp(u), else it would meet (u)
    bool spans_outer = true;
    for (int v : sp.outer)
      if (!var_in(s.vars, v)) spans_outer = false;
    if (spans_outer)
      fail_internal("kept space spans all outer variables yet avoids (u)");
    StanleySpace t;
    t.root = s.root;
    for (int v : s.vars)
      if (std::binary_search(sp.inner.begin(), sp.inner.end(), v)) t.vars.push_back(v);
    t.vars.insert(t.vars.end(), sp.outer.begin(), sp.outer.end());
    std::sort(t.vars.begin(), t.vars.end());
    if (t.dimension() <= s.dimension())
      fail_internal("lifted space did not strictly gain dimension");
    out.spaces.push_back(std::move(t));
  }
  if (auto check = verify_decomposition(out); !check)
    fail_internal("lifted decomposition fails verification: " + check.reason);
  return out;
}

SdepthDropCheck check_sdepth_drop(const MonomialIdeal& I, const Monomial& u) {
  if (u.is_unit()) fail("undefined", "reduction by the unit monomial is undefined");
  if (!is_regular(u, I)) fail("not-regular", "monomial is not regular on S/I");
  SdepthDropCheck r{stanley_depth(I), stanley_depth(add(I, {u})), false};
  r.holds = r.reduced.value == r.base.value - 1;
  return r;
}

}  // namespace sdepth
