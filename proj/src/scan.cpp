#include "sdepth/scan.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sdepth/budget.hpp"
#include "sdepth/error.hpp"
#include "sdepth/filtrations.hpp"
#include "sdepth/io.hpp"
#include "sdepth/spectrum.hpp"
#include "sdepth/stanley.hpp"
#include "sdepth/transforms.hpp"

namespace sdepth {

namespace {

// uniform in [lo, hi] via modulo; distribution objects are not portable
// across standard libraries, a fixed seed must replay identically everywhere
int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::string describe(const MonomialIdeal& I, const Monomial& u) {
  ProblemFile p;
  p.ambient = I.ambient();
  p.has_ideal = true;
  p.ideal_generators = I.generators();
  p.u = u;
  return format_problem(p);
}

struct InstanceRunner {
  const ScanConfig& cfg;
  ScanReport& report;

  void check(const std::string& name, bool passed, const std::string& instance,
             const std::string& detail) {
    ++report.checks[name];
    if (!passed) report.failures.push_back({name, instance, detail});
  }

  void run(const MonomialIdeal& I, const Monomial& u) {
    ++report.instances;
    const std::string instance = describe(I, u);
    budget::Scope budget_scope(cfg.timeout_ms > 0
                                   ? std::optional<long long>(cfg.timeout_ms)
                                   : std::nullopt);
    try {
      const MonomialIdeal Iu = add(I, {u});

      const SdepthCertificate base = stanley_depth(I);
      const SdepthCertificate reduced = stanley_depth(Iu);
      check("sdepth-identity", reduced.value == base.value - 1, instance,
            "stanley_depth(S/(I,u)) = " + std::to_string(reduced.value) + ", stanley_depth(S/I) = " +
                std::to_string(base.value));

      const int d0 = depth(I, cfg.field);
      const int d1 = depth(Iu, cfg.field);
      check("depth-identity", d1 == d0 - 1, instance,
            "depth(S/(I,u)) = " + std::to_string(d1) + ", depth(S/I) = " +
                std::to_string(d0));

      auto f0 = find_pretty_clean(I);
      auto f1 = find_pretty_clean(Iu);
      check("pretty-clean-biconditional", f0.has_value() == f1.has_value(), instance,
            std::string("S/I ") + (f0 ? "pretty clean" : "not pretty clean") +
                ", S/(I,u) " + (f1 ? "pretty clean" : "not pretty clean"));

      for (const auto* found : {&f0, &f1}) {
        if (!found->has_value()) continue;
        const PrimeFiltration& f = **found;
        const FiltrationReport rep = classify(f);
        check("found-filtration-pretty-clean", rep.pretty_clean, instance,
              "search returned a filtration that is not pretty clean");
        check("supp-equals-ass", rep.ass_equals_support, instance,
              "pretty clean filtration with Supp != Ass");
        const int dep = depth(f.ideal, cfg.field);
        const StanleyDecomposition from_f = decomposition_from_filtration(f);
        const bool stanley_ok =
            bool(verify_decomposition(from_f)) && sdepth_of(from_f) >= dep;
        check("filtration-decomposition-verifies", stanley_ok, instance,
              "filtration-induced decomposition failed or has sdepth below depth");
        const SdepthCertificate& cert = found == &f0 ? base : reduced;
        check("stanley-ideal", cert.value >= dep, instance,
              "sdepth " + std::to_string(cert.value) + " < depth " + std::to_string(dep));
      }

      if (f0) {
        const PrimeFiltration g = descend_modulo_regular(*f0, u);
        check("descend-pretty-clean", classify(g).pretty_clean, instance,
              "descended filtration is not pretty clean");
        const PrimeFiltration back = ascend_modulo_regular(g, I, u);
        const FiltrationReport back_rep = classify(back);
        check("ascend-pretty-clean", back_rep.pretty_clean, instance,
              "ascended filtration is not pretty clean");
        check("round-trip-support", back_rep.support == classify(*f0).support, instance,
              "support changed across descend/ascend");
      }
    } catch (const Error& e) {
      if (e.kind() == "timeout") {
        report.failures.push_back({"timeout", instance, e.what()});
      } else {
        report.failures.push_back({"error:" + e.kind(), instance, e.what()});
      }
    }
  }
};

std::vector<Monomial> squarefree_monomials(int n) {
  std::vector<Monomial> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Monomial m = Monomial::unit(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m.e[static_cast<size_t>(i)] = 1;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<MonomialIdeal> all_squarefree_ideals(int n) {
  // one ideal per antichain of squarefree monomials, each built exactly once
  const std::vector<Monomial> mons = squarefree_monomials(n);
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  auto rec = [&](auto&& self, size_t start) -> void {
    out.push_back(MonomialIdeal::normalize(n, chosen));
    for (size_t i = start; i < mons.size(); ++i) {
      bool comparable = false;
      for (const Monomial& c : chosen)
        if (divides(c, mons[i]) || divides(mons[i], c)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(mons[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ScanReport run_scan(const ScanConfig& cfg) {
  if (cfg.n_max < 1) fail("malformed-input", "n-max must be at least 1");
  if (cfg.exponent_max < 1) fail("malformed-input", "exponent-max must be at least 1");
  ScanReport report;
  InstanceRunner runner{cfg, report};

  if (cfg.mode == ScanConfig::Mode::exhaustive_squarefree) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      for (const MonomialIdeal& I : all_squarefree_ideals(n)) {
        // embed and reduce by the fresh last variable
        const MonomialIdeal J = embed(I, n + 1);
        runner.run(J, Monomial::variable(n + 1, n + 1));
      }
    }
    return report;
  }

  std::mt19937_64 rng(cfg.seed);
  int produced = 0;
  while (produced < cfg.sample_count) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const int gen_count = rand_int(rng, 0, n + 2);
    std::vector<Monomial> gens;
    for (int i = 0; i < gen_count; ++i) {
      Monomial m = Monomial::unit(n);
      for (int v = 0; v < n; ++v)
        m.e[static_cast<size_t>(v)] = rand_int(rng, 0, cfg.exponent_max);
      if (!m.is_unit()) gens.push_back(std::move(m));
    }
    const MonomialIdeal I = MonomialIdeal::normalize(n, std::move(gens));

    // a regular monomial must avoid every associated prime
    std::vector<int> free_vars;
    {
      std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
      for (const MonomialPrime& p : ass(I))
        for (int v : p.vars) blocked[static_cast<size_t>(v)] = 1;
      for (int v = 1; v <= n; ++v)
        if (!blocked[static_cast<size_t>(v)]) free_vars.push_back(v);
    }
    if (free_vars.empty()) {
      ++report.skipped;
      continue;
    }
    Monomial u = Monomial::unit(n);
    for (int v : free_vars) u.e[static_cast<size_t>(v) - 1] = rand_int(rng, 0, cfg.exponent_max);
    if (u.is_unit())
      u.e[static_cast<size_t>(free_vars[static_cast<size_t>(rand_int(
              rng, 0, static_cast<int>(free_vars.size()) - 1))] - 1)] =
          rand_int(rng, 1, cfg.exponent_max);

    runner.run(I, u);
    ++produced;
  }
  return report;
}

}  // namespace sdepth
