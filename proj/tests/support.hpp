#pragma once

#include <random>
#include <vector>

#include "confcoh/confcoh.hpp"

namespace confcoh::testing {

constexpr int kCases = 200;

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  return make_rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<Var>& vars, int max_terms = 4,
                                    int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), e(0, max_exp);
  Polynomial p;
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    for (Var v : vars) m.multiply_by(v, unsigned(e(rng)));
    p.add_term(m, random_rational(rng));
  }
  return p;
}

/// Random homogeneous polynomial of degree d in vars.
inline Polynomial random_homogeneous(std::mt19937& rng, const std::vector<Var>& vars, int d, int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 0; i < d; ++i) m.multiply_by(vars[pick(rng)], 1);
    p.add_term(m, random_rational(rng));
  }
  return p;
}

/// Random combination of a few basis elements of a space.
inline Cochain random_cochain(std::mt19937& rng, const CochainSpace& sp, int picks = 3) {
  Cochain c(sp.arity());
  if (sp.size() == 0) return c;
  std::uniform_int_distribution<std::size_t> pick(0, sp.size() - 1);
  for (int k = 0; k < picks; ++k) c += random_rational(rng) * sp.element(pick(rng));
  return c;
}

inline Cochain single(const LieConformalAlgebra& alg, std::vector<int> counts, const std::string& value) {
  Signature s(std::move(counts));
  Cochain c(s.arity());
  c.set(s, parse_polynomial(value));
  (void)alg;
  return c;
}

inline Polynomial P(const std::string& s) { return parse_polynomial(s); }

}  // namespace confcoh::testing
