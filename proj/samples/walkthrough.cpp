// Reduce a polynomial, solve the resulting system and print its height bound.

#include <iostream>

#include "dbound/dbound.hpp"

int main(int argc, char** argv) {
  using namespace dbound;
  const std::string text = argc > 1 ? argv[1] : "x1*x2 - x1 - x2 - 1";
  const Polynomial d = parse_polynomial(text);

  const ReductionTrace trace = to_conjecture_form(d);
  for (const auto& pass : trace.passes) std::cout << pass.name << ": " << pass.system.n() << " variables\n";
  std::cout << to_text(trace.final_system());

  const auto bound = conjectural_bound(d, Domain::Positive);
  std::cout << "bound: " << bound.applies_to << " <= f(" << bound.n << ") = " << bound.bound.closed_form()
            << ", about 2^" << bound.bound.log2() << "\n";

  const auto chain = theorem1_witness(5);
  for (const auto& s : enumerate_solutions(chain.system, 300).solutions) std::cout << "chain: " << to_string(s) << "\n";
}
