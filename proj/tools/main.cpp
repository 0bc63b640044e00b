// Command-line front end: parse problem documents, run the library
// operations, and emit certificates as text or a structured JSON document.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdepth/budget.hpp"
#include "sdepth/error.hpp"
#include "sdepth/filtrations.hpp"
#include "sdepth/io.hpp"
#include "sdepth/monomial.hpp"
#include "sdepth/scan.hpp"
#include "sdepth/spectrum.hpp"
#include "sdepth/stanley.hpp"
#include "sdepth/transforms.hpp"
#include "sdepth/version.hpp"

using json = nlohmann::json;
using namespace sdepth;

namespace {

struct Options {
  std::string format = "text";
  long long timeout_ms = 0;
  long long characteristic = 0;
  std::string input_path;
  std::string input_text;  // verbatim, embedded in structured output
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail("io-error", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemFile load_problem(Options& opt) {
  opt.input_text = read_input(opt.input_path);
  return parse_problem(opt.input_text);
}

MonomialIdeal need_ideal(const ProblemFile& p) {
  if (!p.has_ideal) fail("malformed-input", "the command needs an 'ideal:' line");
  return p.ideal();
}

Monomial need_u(const ProblemFile& p) {
  if (!p.u) fail("malformed-input", "the command needs a 'u:' line");
  return *p.u;
}

std::vector<StanleySpace> need_decomposition(const ProblemFile& p) {
  if (!p.decomposition) fail("malformed-input", "the command needs a 'decomposition:' block");
  return *p.decomposition;
}

std::vector<PrimeFiltration::Step> need_filtration(const ProblemFile& p) {
  if (!p.filtration) fail("malformed-input", "the command needs a 'filtration:' block");
  return *p.filtration;
}

json decomposition_json(const StanleyDecomposition& d) {
  json spaces = json::array();
  for (const StanleySpace& s : d.spaces) spaces.push_back(format_space(s));
  return json{{"ideal", format_generators(d.ideal)},
              {"vars", d.ambient()},
              {"spaces", spaces},
              {"sdepth", d.spaces.empty() ? d.ambient() : sdepth_of(d)}};
}

json certificate_json(const SdepthCertificate& c) {
  return json{{"value", c.value},
              {"poset_bound", format_monomial(c.poset_bound)},
              {"search_exhausted", c.search_exhausted},
              {"witness", decomposition_json(c.witness)}};
}

json primes_json(const std::vector<MonomialPrime>& primes) {
  json out = json::array();
  for (const MonomialPrime& p : primes) out.push_back(format_prime(p));
  return out;
}

json filtration_json(const PrimeFiltration& f) {
  json steps = json::array();
  for (const auto& st : f.steps) steps.push_back(format_step(st));
  return json{{"ideal", format_generators(f.ideal)},
              {"vars", f.ambient()},
              {"steps", steps}};
}

json report_json(const FiltrationReport& r) {
  return json{{"support", primes_json(r.support)},
              {"pretty_clean", r.pretty_clean},
              {"clean", r.clean},
              {"ass_equals_support", r.ass_equals_support}};
}

void print_decomposition_text(const StanleyDecomposition& d) {
  std::cout << format_decomposition(d);
  std::cout << "sdepth: " << (d.spaces.empty() ? d.ambient() : sdepth_of(d)) << "\n";
}

void print_filtration_text(const PrimeFiltration& f, const FiltrationReport& r) {
  std::cout << format_filtration(f);
  std::cout << "support:";
  for (const auto& p : r.support) std::cout << " (" << format_prime(p) << ")";
  std::cout << "\npretty clean: " << (r.pretty_clean ? "yes" : "no")
            << "\nclean: " << (r.clean ? "yes" : "no")
            << "\nSupp = Ass: " << (r.ass_equals_support ? "yes" : "no") << "\n";
}

// Every run emits one self-describing document in structured mode.
void emit(const Options& opt, const std::string& command, const json& result) {
  if (opt.format == "structured") {
    json doc{{"tool", "sdepth"},
             {"version", kVersion},
             {"command", command},
             {"result", result}};
    if (!opt.input_text.empty()) doc["input"] = opt.input_text;
    std::cout << doc.dump(2) << "\n";
  }
}

int run_command(const std::string& command, Options& opt) {
  const bool text = opt.format == "text";

  if (command == "sdepth") {
    const MonomialIdeal I = need_ideal(load_problem(opt));
    const SdepthCertificate cert = stanley_depth(I);
    if (text) {
      std::cout << "sdepth: " << cert.value << "\n"
                << "poset bound: " << format_monomial(cert.poset_bound) << "\n"
                << "witness:\n"
                << format_decomposition(cert.witness);
    }
    emit(opt, command, certificate_json(cert));
    return 0;
  }

  if (command == "depth") {
    const MonomialIdeal I = need_ideal(load_problem(opt));
    const CoefficientField k = CoefficientField::of_characteristic(opt.characteristic);
    const int d = depth(I, k);
    if (text) std::cout << "depth: " << d << "\n";
    emit(opt, command, json{{"value", d}, {"characteristic", k.characteristic}});
    return 0;
  }

  if (command == "ass" || command == "min") {
    const MonomialIdeal I = need_ideal(load_problem(opt));
    const auto primes = command == "ass" ? ass(I) : min_primes(I);
    if (text)
      for (const auto& p : primes) std::cout << "(" << format_prime(p) << ")\n";
    emit(opt, command, json{{"primes", primes_json(primes)}});
    return 0;
  }

  if (command == "verify-decomp") {
    const ProblemFile p = load_problem(opt);
    const StanleyDecomposition d{need_ideal(p), need_decomposition(p)};
    const DecompositionCheck check = verify_decomposition(d);
    if (text) {
      std::cout << (check.ok ? "valid decomposition\n" : "invalid: " + check.reason + "\n");
      if (check.witness)
        std::cout << "witness: " << format_monomial(*check.witness) << "\n";
    }
    json r{{"ok", check.ok}};
    if (!check.ok) r["reason"] = check.reason;
    if (check.witness) r["witness"] = format_monomial(*check.witness);
    emit(opt, command, r);
    return check.ok ? 0 : 1;
  }

  if (command == "lift") {
    const ProblemFile p = load_problem(opt);
    const MonomialIdeal I = need_ideal(p);
    const Monomial u = need_u(p);
    const StanleyDecomposition dprime{add(I, {u}), need_decomposition(p)};
    const StanleyDecomposition lifted = lift_modulo_regular(dprime, I, u);
    if (text) print_decomposition_text(lifted);
    emit(opt, command, decomposition_json(lifted));
    return 0;
  }

  if (command == "restrict") {
    const ProblemFile p = load_problem(opt);
    if (!p.u || p.u->degree() != 1)
      fail("malformed-input", "restrict needs 'u: x<k>', the variable to drop");
    const StanleyDecomposition d{need_ideal(p), need_decomposition(p)};
    const StanleyDecomposition out = restrict_drop_variable(d, p.u->support().front());
    if (text) print_decomposition_text(out);
    emit(opt, command, decomposition_json(out));
    return 0;
  }

  if (command == "chain") {
    const ProblemFile p = load_problem(opt);
    const ChainReduction r = chain_modulo_regular(need_ideal(p), need_u(p));
    if (text) {
      std::cout << "chain:";
      for (const auto& J : r.chain.ideals()) std::cout << " (" << format_generators(J) << ")";
      std::cout << "\n";
      print_decomposition_text(r.decomposition);
    }
    json steps = json::array();
    for (const Monomial& m : r.chain.step_monomials) steps.push_back(format_monomial(m));
    emit(opt, command,
         json{{"start", format_generators(r.chain.start)},
              {"steps", steps},
              {"decomposition", decomposition_json(r.decomposition)}});
    return 0;
  }

  if (command == "check-main") {
    const ProblemFile p = load_problem(opt);
    const SdepthDropCheck r = check_sdepth_drop(need_ideal(p), need_u(p));
    if (text)
      std::cout << "sdepth(S/I) = " << r.base.value << "\n"
                << "sdepth(S/(I,u)) = " << r.reduced.value << "\n"
                << (r.holds ? "identity holds\n" : "IDENTITY FAILS\n");
    emit(opt, command,
         json{{"holds", r.holds},
              {"base", certificate_json(r.base)},
              {"reduced", certificate_json(r.reduced)}});
    return r.holds ? 0 : 1;
  }

  if (command == "pc-find") {
    const MonomialIdeal I = need_ideal(load_problem(opt));
    const auto found = find_pretty_clean(I);
    if (!found) {
      if (text) std::cout << "no pretty clean filtration within the search bound\n";
      emit(opt, command, json{{"found", false}});
      return 0;
    }
    const FiltrationReport r = classify(*found);
    if (text) print_filtration_text(*found, r);
    emit(opt, command,
         json{{"found", true},
              {"filtration", filtration_json(*found)},
              {"report", report_json(r)}});
    return 0;
  }

  if (command == "pc-check") {
    const ProblemFile p = load_problem(opt);
    const PrimeFiltration f{need_ideal(p), need_filtration(p)};
    const FiltrationCheck check = verify_filtration(f);
    if (!check) {
      if (text)
        std::cout << "invalid filtration at step " << check.failing_step << ": "
                  << check.reason << "\n";
      emit(opt, command,
           json{{"ok", false}, {"step", check.failing_step}, {"reason", check.reason}});
      return 1;
    }
    const FiltrationReport r = classify(f);
    if (text) print_filtration_text(f, r);
    emit(opt, command, json{{"ok", true}, {"report", report_json(r)}});
    return 0;
  }

  if (command == "pc-descend" || command == "pc-ascend") {
    const ProblemFile p = load_problem(opt);
    const MonomialIdeal I = need_ideal(p);
    const Monomial u = need_u(p);
    PrimeFiltration in;
    in.ideal = command == "pc-descend" ? I : add(I, {u});
    in.steps = need_filtration(p);
    const PrimeFiltration out = command == "pc-descend"
                                    ? descend_modulo_regular(in, u)
                                    : ascend_modulo_regular(in, I, u);
    const FiltrationReport r = classify(out);
    if (text) print_filtration_text(out, r);
    emit(opt, command,
         json{{"filtration", filtration_json(out)}, {"report", report_json(r)}});
    return 0;
  }

  if (command == "pc-regseq") {
    const ProblemFile p = load_problem(opt);
    if (!p.has_ideal) fail("malformed-input", "list the sequence on the 'ideal:' line");
    const PrimeFiltration f = pretty_clean_regular_sequence(p.ideal_generators, p.ambient);
    const FiltrationReport r = classify(f);
    if (text) print_filtration_text(f, r);
    emit(opt, command,
         json{{"filtration", filtration_json(f)}, {"report", report_json(r)}});
    return 0;
  }

  fail("internal", "unknown command " + command);
}

int run_scan_command(Options& opt, ScanConfig cfg) {
  cfg.field = CoefficientField::of_characteristic(opt.characteristic);
  cfg.timeout_ms = opt.timeout_ms;
  const ScanReport report = run_scan(cfg);
  if (opt.format == "text") {
    std::cout << "instances: " << report.instances << " (skipped " << report.skipped
              << ")\n";
    for (const auto& [name, count] : report.checks)
      std::cout << "  " << name << ": " << count << " checked\n";
    for (const auto& f : report.failures)
      std::cout << "FAILURE [" << f.check << "] " << f.detail << "\n" << f.instance;
    std::cout << (report.ok() ? "scan clean\n" : "scan found failures\n");
  }
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back(json{{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}});
  emit(opt, "scan",
       json{{"instances", report.instances},
            {"skipped", report.skipped},
            {"checks", report.checks},
            {"failures", failures},
            {"ok", report.ok()}});
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stanley depth, depth, and pretty clean filtration toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--timeout-ms", opt.timeout_ms, "per-computation time budget");
  app.add_option("--char", opt.characteristic, "coefficient field characteristic (0 or prime)");

  const std::vector<std::pair<std::string, std::string>> file_commands = {
      {"sdepth", "exact Stanley depth of S/I with a verified witness"},
      {"depth", "depth of S/I via multigraded Koszul homology"},
      {"ass", "associated primes of S/I"},
      {"min", "minimal primes of S/I"},
      {"verify-decomp", "check a claimed Stanley decomposition"},
      {"lift", "lift a decomposition of S/(I,u) to S/I"},
      {"restrict", "drop a variable from a decomposition (u: names the variable)"},
      {"chain", "build the chain from (I,u) to S and a decomposition of S/(I,u)"},
      {"check-main", "certify sdepth(S/(I,u)) = sdepth(S/I) - 1"},
      {"pc-find", "search for a pretty clean filtration"},
      {"pc-check", "verify and classify a prime filtration"},
      {"pc-descend", "pretty clean filtration of S/(I,u) from one of S/I"},
      {"pc-ascend", "pretty clean filtration of S/I from one of S/(I,u)"},
      {"pc-regseq", "pretty clean filtration of a monomial regular sequence"},
  };
  for (const auto& [name, help] : file_commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.input_path, "problem document ('-' for stdin)")->required();
  }

  ScanConfig scan_cfg;
  CLI::App* scan_cmd = app.add_subcommand("scan", "batch-check the reduction identities");
  std::string mode = "exhaustive-squarefree";
  scan_cmd->add_option("--mode", mode, "instance family")
      ->check(CLI::IsMember({"exhaustive-squarefree", "random-box"}))
      ->capture_default_str();
  scan_cmd->add_option("--n-max", scan_cfg.n_max, "max ambient variables")
      ->capture_default_str();
  scan_cmd->add_option("--exponent-max", scan_cfg.exponent_max, "max generator exponent")
      ->capture_default_str();
  scan_cmd->add_option("--samples", scan_cfg.sample_count, "random instances to draw")
      ->capture_default_str();
  scan_cmd->add_option("--seed", scan_cfg.seed, "random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    budget::Scope budget_scope(opt.timeout_ms > 0 ? std::optional<long long>(opt.timeout_ms)
                                                  : std::nullopt);
    if (command == "scan") {
      scan_cfg.mode = mode == "random-box" ? ScanConfig::Mode::random_box
                                           : ScanConfig::Mode::exhaustive_squarefree;
      return run_scan_command(opt, scan_cfg);
    }
    return run_command(command, opt);
  } catch (const Error& e) {
    if (opt.format == "structured") {
      json doc{{"tool", "sdepth"},
               {"version", kVersion},
               {"command", command},
               {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
      if (!opt.input_text.empty()) doc["input"] = opt.input_text;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
    }
    return 1;
  }
}
