#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/filtrations.hpp"
#include "sdepth/monomial.hpp"
#include "sdepth/stanley.hpp"

namespace sdepth {

// Text formats. Variables are always x1..xn by index.
//   monomial        x1^2*x2          (unit monomial: 1)
//   ideal           vars: 2
//                   ideal: x1^2*x2, x2^3
//   prime           x1,x3            (zero prime: 0)
//   Stanley space   x1 K[x1,x3]      (empty span: K[])
//   filtration step x1 : x1,x2
// Parsing is whitespace-insensitive; formatting is canonical, so
// parse(format(x)) == x and format(parse(t)) is a normal form of t.

Monomial parse_monomial(std::string_view text, int ambient);
std::string format_monomial(const Monomial& m);

std::vector<int> parse_varset(std::string_view text, int ambient);
std::string format_varset(const std::vector<int>& vars);

MonomialPrime parse_prime(std::string_view text, int ambient);
std::string format_prime(const MonomialPrime& p);

StanleySpace parse_space(std::string_view text, int ambient);
std::string format_space(const StanleySpace& s);

PrimeFiltration::Step parse_step(std::string_view text, int ambient);
std::string format_step(const PrimeFiltration::Step& s);

std::string format_generators(const MonomialIdeal& I);

// A problem document: ambient plus whichever of ideal / u / decomposition /
// filtration the command at hand needs.
//
//   vars: 3
//   ideal: x1*x2, x2^2*x3
//   u: x3^2
//   decomposition:
//     1 K[x2,x3]
//     x1 K[x1]
//   filtration:
//     x1 : x1,x2
//     1 : x1
struct ProblemFile {
  int ambient = 0;
  std::vector<Monomial> ideal_generators;  // raw, in document order
  bool has_ideal = false;
  std::optional<Monomial> u;
  std::optional<std::vector<StanleySpace>> decomposition;
  std::optional<std::vector<PrimeFiltration::Step>> filtration;

  MonomialIdeal ideal() const;  // normalized
};

ProblemFile parse_problem(std::string_view text);
std::string format_problem(const ProblemFile& p);

// The two-line ideal document (header + generators).
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& I);

std::string format_decomposition(const StanleyDecomposition& d);
std::string format_filtration(const PrimeFiltration& f);

}  // namespace sdepth
