#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confcoh/algebra.hpp"

namespace confcoh {

/// Coefficient module for cohomology: either the trivial module ℂ_a
/// (∂ acts as a, every generator acts by zero) or a free rank-one module
/// ℚ[∂]v with g_λ v = A_g(∂, λ) v.
///
/// Cochain values are polynomials in the slot variables x1..xn; for rank-one
/// modules they may also contain D, standing for the module's ∂ applied to v.
class CoefficientModule {
 public:
  enum class Kind { Trivial, RankOne };

  static CoefficientModule trivial(Rational a) {
    CoefficientModule m;
    m.kind_ = Kind::Trivial;
    m.a_ = std::move(a);
    return m;
  }

  /// M_{α,β}: L_λ v = (∂ + αλ + β) v on the Virasoro marker, zero otherwise.
  static CoefficientModule rank_one(const LieConformalAlgebra& alg, Rational alpha, Rational beta) {
    if (!alg.virasoro()) throw AlgebraError("rank-one module M_{alpha,beta} requires a virasoro marker");
    std::vector<Polynomial> actions(alg.size());
    actions[*alg.virasoro()] =
        Polynomial::variable(Var::D()) + alpha * Polynomial::variable(Var::X()) + Polynomial(beta);
    CoefficientModule m = with_actions(std::move(actions));
    m.alpha_ = std::move(alpha);
    m.beta_ = std::move(beta);
    return m;
  }

  /// Rank-one module with arbitrary action polynomials in (D, x).
  static CoefficientModule with_actions(std::vector<Polynomial> actions) {
    for (const auto& p : actions)
      if (!p.uses_only({Var::D(), Var::X()})) throw AlgebraError("module action may only use D and x");
    CoefficientModule m;
    m.kind_ = Kind::RankOne;
    m.actions_ = std::move(actions);
    return m;
  }

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::Trivial; }
  const Rational& a() const { return a_; }
  const std::optional<Rational>& alpha() const { return alpha_; }
  const std::optional<Rational>& beta() const { return beta_; }

  const Polynomial& action(GenId g) const {
    static const Polynomial kZero;
    if (is_trivial() || g >= actions_.size()) return kZero;
    return actions_[g];
  }

  /// ∂_V as a polynomial multiplier on values: the constant a, or D.
  Polynomial partial_symbol() const {
    return is_trivial() ? Polynomial(a_) : Polynomial::variable(Var::D());
  }

  /// True when every action polynomial is homogeneous of total degree `d`.
  bool actions_homogeneous(int d) const {
    for (const auto& p : actions_)
      if (!is_homogeneous(p, d)) return false;
    return true;
  }

  std::string spec() const {
    if (is_trivial()) return "trivial:a=" + to_string(a_);
    if (alpha_ && beta_) return "rank1:alpha=" + to_string(*alpha_) + ",beta=" + to_string(*beta_);
    return "rank1:custom";
  }

 private:
  CoefficientModule() = default;

  Kind kind_ = Kind::Trivial;
  Rational a_ = 0;
  std::vector<Polynomial> actions_;
  std::optional<Rational> alpha_, beta_;
};

/// Parses `trivial:a=<rat>` or `rank1:alpha=<rat>,beta=<rat>`.
inline CoefficientModule parse_coefficients(const LieConformalAlgebra& alg, const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed coefficient spec '" + text + "'"); };
  auto colon = text.find(':');
  if (colon == std::string::npos) throw bad();
  std::string kind = text.substr(0, colon);
  std::map<std::string, Rational> kv;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw bad();
    kv[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kind == "trivial") {
    if (kv.size() != 1 || !kv.count("a")) throw bad();
    return CoefficientModule::trivial(kv["a"]);
  }
  if (kind == "rank1") {
    if (kv.size() != 2 || !kv.count("alpha") || !kv.count("beta")) throw bad();
    return CoefficientModule::rank_one(alg, kv["alpha"], kv["beta"]);
  }
  throw bad();
}

/// g_{slot} applied to a cochain value: zero for ℂ_a; for rank-one modules
/// p(D)·v ↦ p(D + slot)·A_g(D, slot)·v, from g_λ(∂v) = (∂+λ) g_λ v.
inline Polynomial module_action(const CoefficientModule& m, GenId g, const Polynomial& value, Var slot) {
  const Polynomial& act = m.action(g);
  if (act.is_zero() || value.is_zero()) return {};
  const Polynomial s = Polynomial::variable(slot);
  Polynomial shifted = substitute_linear(value, Var::D(), Polynomial::variable(Var::D()) + s);
  return shifted * substitute_linear(act, Var::X(), s);
}

/// (∂_V + Σ λᵢ)·value.
inline Polynomial partial_on_value(const CoefficientModule& m, const Polynomial& value, std::span<const Var> lambdas) {
  return (m.partial_symbol() + sum_of(lambdas)) * value;
}

struct ModuleFailure {
  GenId a, b;
  Polynomial residual;
};

struct ModuleReport {
  bool ok = true;
  std::vector<ModuleFailure> failures;
};

/// Checks a_λ(b_µ v) − b_µ(a_λ v) = [a_λ b]_{λ+µ} v for all generator pairs.
/// The ∂-compatibility axioms hold by construction of module_action.
inline ModuleReport check_module_axioms(const LieConformalAlgebra& alg, const CoefficientModule& m) {
  ModuleReport report;
  if (m.is_trivial()) return report;
  const Polynomial d = Polynomial::variable(Var::D());
  const Polynomial lam = Polynomial::variable(Var::X());
  const Polynomial mu = Polynomial::variable(Var::Mu());
  for (GenId a = 0; a < alg.size(); ++a) {
    for (GenId b = 0; b < alg.size(); ++b) {
      const Polynomial& aa = m.action(a);
      const Polynomial& ab = m.action(b);
      Polynomial lhs = Substitution().set(Var::D(), d + lam).set(Var::X(), mu).apply(ab) * aa -
                       Substitution().set(Var::D(), d + mu).apply(aa) * Substitution().set(Var::X(), mu).apply(ab);
      Polynomial rhs;
      for (const auto& [c, p] : alg.bracket(a, b))
        rhs += Substitution().set(Var::D(), -(lam + mu)).apply(p) *
               Substitution().set(Var::X(), lam + mu).apply(m.action(c));
      Polynomial residual = lhs - rhs;
      if (!residual.is_zero()) {
        report.ok = false;
        report.failures.push_back({a, b, std::move(residual)});
      }
    }
  }
  return report;
}

}  // namespace confcoh
