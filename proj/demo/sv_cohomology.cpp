// Computes the cohomology of SV with trivial coefficients and prints the
// reduced class obtained from the Vandermonde 3-cocycle.
#include <iostream>

#include "confcoh/confcoh.hpp"

int main() {
  using namespace confcoh;
  const LieConformalAlgebra sv = builtin("sv");
  const CoefficientModule c0 = CoefficientModule::trivial(0);

  CohomologyReport report = compute_cohomology(sv, c0, EngineOptions{});
  std::cout << report_to_text(sv, report, false);

  Cochain phi(3);
  phi.set(Signature({3, 0, 0}), parse_polynomial("(x1 - x2)*(x1 - x3)*(x2 - x3)"));
  std::cout << "d(Phi) = " << cochain_to_text(sv, differential(sv, c0, phi)) << "\n";
  std::cout << "tau(partial Phi) = " << cochain_to_text(sv, tau(sv, partial(c0, phi))) << "\n";
  std::cout << cochain_to_json(sv, phi).dump() << "\n";
}
