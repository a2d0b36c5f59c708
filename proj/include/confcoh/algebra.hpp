#pragma once

#include <algorithm>
#include <cctype>
#include <tuple>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confcoh/poly.hpp"

namespace confcoh {

using GenId = std::size_t;

/// An element Σ_c p_c·c of ℚ[∂, parameters] ⊗ A, keyed by generator. The
/// polynomials use D for ∂ and may mention the bracket parameters x, y.
using ConformalElement = std::map<GenId, Polynomial>;

inline void add_into(ConformalElement& acc, const ConformalElement& e, const Rational& scale = 1) {
  for (const auto& [g, p] : e) {
    Polynomial& slot = acc[g];
    slot += p * scale;
    if (slot.is_zero()) acc.erase(g);
  }
}

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite Lie conformal algebra, free over ℚ[∂] on an ordered list of
/// generators, given by its λ-bracket table [a_λ b] = Σ_c p_ab^c(∂, λ)·c.
/// The generator order is the canonical slot order of cochains.
class LieConformalAlgebra {
 public:
  using Table = std::map<std::pair<GenId, GenId>, ConformalElement>;

  LieConformalAlgebra(std::string name, std::vector<std::string> generators, Table table,
                      std::optional<GenId> virasoro = std::nullopt)
      : name_(std::move(name)), generators_(std::move(generators)), table_(std::move(table)), virasoro_(virasoro) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] == generators_[j]) throw AlgebraError("duplicate generator name '" + generators_[i] + "'");
    if (virasoro_ && *virasoro_ >= generators_.size()) throw AlgebraError("virasoro marker out of range");
    for (auto it = table_.begin(); it != table_.end();) {
      auto [a, b] = it->first;
      if (a >= generators_.size() || b >= generators_.size()) throw AlgebraError("bracket entry references unknown generator");
      for (auto jt = it->second.begin(); jt != it->second.end();) {
        if (jt->first >= generators_.size()) throw AlgebraError("bracket value references unknown generator");
        if (!jt->second.uses_only({Var::D(), Var::X()}))
          throw AlgebraError("bracket coefficient may only use D and x: " + to_string(jt->second));
        jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
      }
      it = it->second.empty() ? table_.erase(it) : std::next(it);
    }
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generator_names() const { return generators_; }
  const std::string& generator_name(GenId g) const { return generators_.at(g); }
  std::optional<GenId> virasoro() const { return virasoro_; }
  const Table& table() const { return table_; }

  GenId index_of(const std::string& name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) throw AlgebraError("unknown generator '" + name + "'");
    return GenId(it - generators_.begin());
  }

  /// p_ab^c(∂, λ) for every c; empty when the bracket vanishes.
  const ConformalElement& bracket(GenId a, GenId b) const {
    static const ConformalElement kZero;
    if (a >= size() || b >= size()) throw AlgebraError("unknown generator id");
    auto it = table_.find({a, b});
    return it == table_.end() ? kZero : it->second;
  }
  const ConformalElement& bracket(const std::string& a, const std::string& b) const {
    return bracket(index_of(a), index_of(b));
  }

  /// Degree shift δ when every bracket coefficient is homogeneous of the same
  /// total degree δ in (∂, λ); nullopt otherwise. An abelian table yields 1.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [key, value] : table_) {
      for (const auto& [c, p] : value) {
        int d = p.degree();
        if (!is_homogeneous(p, d)) return std::nullopt;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
      }
    }
    return deg.value_or(1);
  }

 private:
  std::string name_;
  std::vector<std::string> generators_;
  Table table_;
  std::optional<GenId> virasoro_;
};

/// [u_ν w] for ℚ[∂]-combinations u, w of generators, with ν a polynomial in
/// the parameters. Uses [∂a_ν b] = −ν[a_ν b] and [a_ν ∂b] = (∂+ν)[a_ν b].
inline ConformalElement bracket_of(const LieConformalAlgebra& alg, const ConformalElement& u, const ConformalElement& w,
                                   const Polynomial& nu) {
  ConformalElement out;
  const Substitution left = Substitution().set(Var::D(), -nu);
  const Substitution right = Substitution().set(Var::D(), Polynomial::variable(Var::D()) + nu);
  const Substitution param = Substitution().set(Var::X(), nu);
  for (const auto& [a, pa] : u) {
    Polynomial la = left.apply(pa);
    for (const auto& [b, qb] : w) {
      const ConformalElement& entry = alg.bracket(a, b);
      if (entry.empty()) continue;
      Polynomial coeff = la * right.apply(qb);
      for (const auto& [c, p] : entry) {
        Polynomial& slot = out[c];
        slot += coeff * param.apply(p);
        if (slot.is_zero()) out.erase(c);
      }
    }
  }
  return out;
}

inline ConformalElement generator_element(GenId g) { return {{g, Polynomial(1)}}; }

struct AxiomFailure {
  enum class Kind { Skew, Jacobi };
  Kind kind;
  std::vector<GenId> generators;
  ConformalElement residual;
};

struct AxiomReport {
  bool skew_ok = true;
  bool jacobi_ok = true;
  std::vector<AxiomFailure> failures;
  bool ok() const { return skew_ok && jacobi_ok; }
};

/// Verifies conformal skew-symmetry on all ordered pairs and the conformal
/// Jacobi identity on all ordered triples of generators, as identities in
/// ℚ[∂, λ, µ].
inline AxiomReport check_axioms(const LieConformalAlgebra& alg) {
  AxiomReport report;
  const Polynomial lam = Polynomial::variable(Var::X());
  const Polynomial mu = Polynomial::variable(Var::Mu());
  const Polynomial flipped = -lam - Polynomial::variable(Var::D());
  const GenId n = alg.size();
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = 0; b < n; ++b) {
      ConformalElement res = alg.bracket(a, b);
      add_into(res, bracket_of(alg, generator_element(b), generator_element(a), flipped));
      if (!res.empty()) {
        report.skew_ok = false;
        report.failures.push_back({AxiomFailure::Kind::Skew, {a, b}, std::move(res)});
      }
    }
  }
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = 0; b < n; ++b) {
      for (GenId c = 0; c < n; ++c) {
        const auto ea = generator_element(a), eb = generator_element(b), ec = generator_element(c);
        ConformalElement res = bracket_of(alg, ea, bracket_of(alg, eb, ec, mu), lam);
        add_into(res, bracket_of(alg, bracket_of(alg, ea, eb, lam), ec, lam + mu), -1);
        add_into(res, bracket_of(alg, eb, bracket_of(alg, ea, ec, lam), mu), -1);
        if (!res.empty()) {
          report.jacobi_ok = false;
          report.failures.push_back({AxiomFailure::Kind::Jacobi, {a, b, c}, std::move(res)});
        }
      }
    }
  }
  return report;
}

inline std::string to_string(const LieConformalAlgebra& alg, const ConformalElement& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [g, p] : e) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p) + ") " + alg.generator_name(g);
  }
  return out;
}

/// Conformal weights Δ_a read off from [a_λ L] = (Δ_a ∂ + (Δ_a + 1) λ) a, where
/// L is the Virasoro marker. Returns nullopt ("not graded") unless every
/// generator has a bracket with L of exactly that form.
inline std::optional<std::vector<Rational>> weight_table(const LieConformalAlgebra& alg) {
  if (!alg.virasoro()) throw AlgebraError("weight table requires a virasoro marker");
  const GenId l = *alg.virasoro();
  std::vector<Rational> weights;
  for (GenId a = 0; a < alg.size(); ++a) {
    const ConformalElement& e = alg.bracket(a, l);
    if (e.size() != 1 || e.begin()->first != a) return std::nullopt;
    const Polynomial& p = e.begin()->second;
    Rational delta = p.coefficient(Monomial::of(Var::D()));
    Polynomial expected = delta * Polynomial::variable(Var::D()) + (delta + 1) * Polynomial::variable(Var::X());
    if (p != expected) return std::nullopt;
    weights.push_back(delta);
  }
  return weights;
}

// ---------------------------------------------------------------------------
// Built-in algebras

inline LieConformalAlgebra make_algebra(const std::string& name, const std::vector<std::string>& gens,
                                        const std::vector<std::tuple<std::string, std::string, std::string, std::string>>& entries,
                                        const std::optional<std::string>& virasoro) {
  LieConformalAlgebra shell(name, gens, {});
  LieConformalAlgebra::Table table;
  for (const auto& [a, b, poly, c] : entries)
    table[{shell.index_of(a), shell.index_of(b)}][shell.index_of(c)] += parse_polynomial(poly);
  std::optional<GenId> marker;
  if (virasoro) marker = shell.index_of(*virasoro);
  return LieConformalAlgebra(name, gens, std::move(table), marker);
}

/// vir: (L); hv: (L, M); sv: (L, Y, M). The Virasoro marker is L.
inline LieConformalAlgebra builtin(const std::string& name) {
  if (name == "vir") return make_algebra("vir", {"L"}, {{"L", "L", "D + 2*x", "L"}}, "L");
  if (name == "hv")
    return make_algebra("hv", {"L", "M"},
                        {{"L", "L", "D + 2*x", "L"}, {"L", "M", "D + x", "M"}, {"M", "L", "x", "M"}}, "L");
  if (name == "sv")
    return make_algebra("sv", {"L", "Y", "M"},
                        {{"L", "L", "D + 2*x", "L"},
                         {"Y", "L", "1/2*D + 3/2*x", "Y"},
                         {"L", "Y", "D + 3/2*x", "Y"},
                         {"Y", "Y", "D + 2*x", "M"},
                         {"L", "M", "D + x", "M"},
                         {"M", "L", "x", "M"}},
                        "L");
  throw AlgebraError("unknown builtin algebra '" + name + "' (expected vir, hv or sv)");
}

// ---------------------------------------------------------------------------
// Text format

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the line-oriented algebra format:
///   algebra <name>
///   generators <g1> <g2> ...
///   virasoro <g>
///   bracket <a> <b> = (<poly in D,x>) <c> [+ (<poly>) <c2> ...]
/// Blank lines and `#` comments are ignored; unlisted brackets are zero.
inline LieConformalAlgebra parse_algebra(std::istream& in) {
  std::string name;
  std::vector<std::string> gens;
  std::optional<std::pair<std::string, int>> virasoro;
  struct Entry {
    std::string a, b;
    std::vector<std::pair<Polynomial, std::string>> terms;
    int line;
  };
  std::vector<Entry> entries;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "algebra") {
      if (!(ls >> name)) throw ParseError("missing algebra name", lineno);
    } else if (kw == "generators") {
      if (!gens.empty()) throw ParseError("generators declared twice", lineno);
      for (std::string g; ls >> g;) gens.push_back(g);
      if (gens.empty()) throw ParseError("empty generator list", lineno);
    } else if (kw == "virasoro") {
      std::string g;
      if (!(ls >> g)) throw ParseError("missing virasoro generator", lineno);
      virasoro = {g, lineno};
    } else if (kw == "bracket") {
      Entry e{{}, {}, {}, lineno};
      std::string eq;
      if (!(ls >> e.a >> e.b >> eq) || eq != "=") throw ParseError("expected 'bracket <a> <b> = ...'", lineno);
      std::string rest;
      std::getline(ls, rest);
      std::size_t i = 0;
      auto skip = [&] {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
      };
      bool first = true;
      for (;;) {
        skip();
        if (i >= rest.size()) break;
        Rational sign = 1;
        if (!first) {
          if (rest[i] == '+') ++i;
          else if (rest[i] == '-') sign = -1, ++i;
          else throw ParseError("expected '+' between bracket terms", lineno);
          skip();
        }
        first = false;
        if (i >= rest.size() || rest[i] != '(') throw ParseError("expected '(' before bracket coefficient", lineno);
        int depth = 0;
        std::size_t start = i;
        for (; i < rest.size(); ++i) {
          if (rest[i] == '(') ++depth;
          if (rest[i] == ')' && --depth == 0) break;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses", lineno);
        Polynomial p;
        try {
          p = parse_polynomial(std::string_view(rest).substr(start + 1, i - start - 1));
        } catch (const PolyParseError& err) {
          throw ParseError(err.what(), lineno);
        }
        ++i;
        skip();
        std::size_t gs = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i])) && rest[i] != '+' && rest[i] != '-') ++i;
        if (gs == i) throw ParseError("expected generator name after coefficient", lineno);
        e.terms.emplace_back(sign * p, rest.substr(gs, i - gs));
      }
      if (e.terms.empty()) throw ParseError("empty bracket right-hand side", lineno);
      entries.push_back(std::move(e));
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  if (gens.empty()) throw ParseError("no generators declared", lineno);
  if (name.empty()) name = "custom";

  auto lookup = [&](const std::string& g, int line) -> GenId {
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end()) throw ParseError("unknown generator '" + g + "'", line);
    return GenId(it - gens.begin());
  };
  LieConformalAlgebra::Table table;
  for (const auto& e : entries) {
    auto key = std::make_pair(lookup(e.a, e.line), lookup(e.b, e.line));
    if (table.count(key)) throw ParseError("bracket " + e.a + " " + e.b + " given twice", e.line);
    auto& slot = table[key];
    for (const auto& [p, c] : e.terms) {
      if (!p.uses_only({Var::D(), Var::X()})) throw ParseError("bracket coefficient may only use D and x", e.line);
      slot[lookup(c, e.line)] += p;
    }
  }
  std::optional<GenId> marker;
  if (virasoro) marker = lookup(virasoro->first, virasoro->second);
  try {
    return LieConformalAlgebra(name, gens, std::move(table), marker);
  } catch (const AlgebraError& err) {
    throw ParseError(err.what(), lineno);
  }
}

inline LieConformalAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

inline std::string to_text(const LieConformalAlgebra& alg) {
  std::ostringstream out;
  out << "algebra " << alg.name() << "\ngenerators";
  for (const auto& g : alg.generator_names()) out << ' ' << g;
  out << '\n';
  if (alg.virasoro()) out << "virasoro " << alg.generator_name(*alg.virasoro()) << '\n';
  for (const auto& [key, value] : alg.table())
    out << "bracket " << alg.generator_name(key.first) << ' ' << alg.generator_name(key.second) << " = "
        << to_string(alg, value) << '\n';
  return out.str();
}

}  // namespace confcoh
