#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confcoh/rational.hpp"

namespace confcoh {

/// A polynomial variable. Ids are fixed: the formal symbol ∂ (D), the
/// bracket parameter λ (x), a second bracket parameter µ (y) used by the
/// Jacobi check, a reserved fresh variable (t) for the homotopy operators,
/// and the cochain slot variables λ₁..λ₁₂ (x1..x12).
class Var {
 public:
  static constexpr int kCount = 16;
  static constexpr int kMaxLambda = kCount - 4;

  static constexpr Var D() { return Var(0); }
  static constexpr Var X() { return Var(1); }
  static constexpr Var Mu() { return Var(2); }
  static constexpr Var Fresh() { return Var(3); }
  static Var lambda(int k) {
    if (k < 1 || k > kMaxLambda) throw std::out_of_range("slot variable index out of range: " + std::to_string(k));
    return Var(3 + k);
  }
  static Var from_id(int id) {
    if (id < 0 || id >= kCount) throw std::out_of_range("variable id out of range");
    return Var(id);
  }

  constexpr int id() const { return id_; }
  constexpr bool is_lambda() const { return id_ >= 4; }
  constexpr int lambda_index() const { return id_ - 3; }

  std::string name() const {
    switch (id_) {
      case 0: return "D";
      case 1: return "x";
      case 2: return "y";
      case 3: return "t";
      default: return "x" + std::to_string(id_ - 3);
    }
  }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(int id) : id_(id) {}
  int id_;
};

/// λ₁..λ_n as a vector, the slot variables of an n-ary cochain.
inline std::vector<Var> lambda_vars(int n) {
  std::vector<Var> vs;
  vs.reserve(n);
  for (int k = 1; k <= n; ++k) vs.push_back(Var::lambda(k));
  return vs;
}

class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  unsigned exponent(Var v) const { return exp_[v.id()]; }
  void set(Var v, unsigned e) {
    if (e > UINT8_MAX) throw std::overflow_error("monomial exponent overflow");
    exp_[v.id()] = static_cast<std::uint8_t>(e);
  }
  void multiply_by(Var v, unsigned e) { set(v, exponent(v) + e); }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp_) d += e;
    return d;
  }
  unsigned degree_in(std::span<const Var> vars) const {
    unsigned d = 0;
    for (Var v : vars) d += exp_[v.id()];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < Var::kCount; ++i) r.set(Var::from_id(i), unsigned(exp_[i]) + o.exp_[i]);
    return r;
  }

  const std::array<std::uint8_t, Var::kCount>& exponents() const { return exp_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic: higher total degree first, then larger exponent
  /// at the smallest differing variable id.
  friend bool grlex_greater(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp_ > b.exp_;
  }

 private:
  std::array<std::uint8_t, Var::kCount> exp_{};
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// Sparse multivariate polynomial over ℚ. Terms are kept in descending
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;
  static constexpr int kZeroDegree = INT_MIN;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v) { return term(Monomial::of(v), 1); }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int degree() const { return is_zero() ? kZeroDegree : int(terms_.begin()->first.degree()); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Leading (grlex-greatest) term; precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
  }

  bool mentions(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.exponent(v) > 0; });
  }
  bool uses_only(std::initializer_list<Var> allowed) const {
    for (const auto& [m, c] : terms_) {
      for (int i = 0; i < Var::kCount; ++i) {
        Var v = Var::from_id(i);
        if (m.exponent(v) > 0 && std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
      }
    }
    return true;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Adds c·m·o to this polynomial.
  void add_scaled_product(const Rational& c, const Monomial& m, const Polynomial& o) {
    for (const auto& [om, oc] : o.terms_) add_term(m * om, c * oc);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.add_scaled_product(c, m, b);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1), base = p;
  while (e > 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return r;
}

/// Sum of the given variables.
inline Polynomial sum_of(std::span<const Var> vars) {
  Polynomial s;
  for (Var v : vars) s += Polynomial::variable(v);
  return s;
}

/// Simultaneous substitution of variables by polynomials. Variables without
/// an image are left alone; images that are a bare variable are applied as
/// exponent moves without expansion.
class Substitution {
 public:
  Substitution& set(Var v, Polynomial image) {
    images_[v.id()] = std::move(image);
    return *this;
  }
  Substitution& rename(Var from, Var to) { return set(from, Polynomial::variable(to)); }

  Polynomial apply(const Polynomial& p) const {
    std::array<std::optional<Var>, Var::kCount> renames;
    std::array<bool, Var::kCount> expand{};
    for (int i = 0; i < Var::kCount; ++i) {
      if (!images_[i]) continue;
      const Polynomial& img = *images_[i];
      if (img.size() == 1 && img.terms().begin()->second == 1 && img.terms().begin()->first.degree() == 1) {
        const Monomial& m = img.terms().begin()->first;
        for (int j = 0; j < Var::kCount; ++j)
          if (m.exponents()[j]) renames[i] = Var::from_id(j);
      } else {
        expand[i] = true;
      }
    }
    std::array<std::vector<Polynomial>, Var::kCount> powers;
    auto power_of = [&](int i, unsigned e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.emplace_back(1);
      while (cache.size() <= e) cache.push_back(cache.back() * *images_[i]);
      return cache[e];
    };
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      Monomial base;
      Polynomial factor(c);
      bool expanded = false;
      for (int i = 0; i < Var::kCount; ++i) {
        unsigned e = m.exponents()[i];
        if (e == 0) continue;
        if (expand[i]) {
          factor = expanded ? factor * power_of(i, e) : c * power_of(i, e);
          expanded = true;
        } else {
          base.multiply_by(renames[i] ? *renames[i] : Var::from_id(i), e);
        }
      }
      out.add_scaled_product(1, base, factor);
    }
    return out;
  }

 private:
  std::array<std::optional<Polynomial>, Var::kCount> images_;
};

/// Replaces every occurrence of `var` by `replacement`, expanded.
inline Polynomial substitute_linear(const Polynomial& p, Var var, const Polynomial& replacement) {
  return Substitution().set(var, replacement).apply(p);
}

/// Renames variables; rejects maps that send two occurring variables to the
/// same image.
inline Polynomial rename_variables(const Polynomial& p, const std::map<Var, Var>& perm) {
  std::array<bool, Var::kCount> occurs{};
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < Var::kCount; ++i) occurs[i] = occurs[i] || m.exponents()[i] > 0;
  std::array<int, Var::kCount> hits{};
  for (int i = 0; i < Var::kCount; ++i) {
    if (!occurs[i]) continue;
    auto it = perm.find(Var::from_id(i));
    int target = it == perm.end() ? i : it->second.id();
    if (++hits[target] > 1) throw std::invalid_argument("rename_variables: map is not injective on occurring variables");
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (int i = 0; i < Var::kCount; ++i) {
      if (!m.exponents()[i]) continue;
      auto it = perm.find(Var::from_id(i));
      r.multiply_by(it == perm.end() ? Var::from_id(i) : it->second, m.exponents()[i]);
    }
    out.add_term(r, c);
  }
  return out;
}

inline Polynomial derivative(const Polynomial& p, Var var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    Monomial r = m;
    r.set(var, e - 1);
    out.add_term(r, c * e);
  }
  return out;
}

inline Polynomial evaluate_at_zero(const Polynomial& p, Var var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(var) == 0) out.add_term(m, c);
  return out;
}

/// ∂p/∂var evaluated at var = 0: the coefficient of var¹.
inline Polynomial diff_at_zero(const Polynomial& p, Var var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(var) != 1) continue;
    Monomial r = m;
    r.set(var, 0);
    out.add_term(r, c);
  }
  return out;
}

/// Splits p by total degree in `vars`, ascending; empty for p = 0.
inline std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p, std::span<const Var> vars) {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) parts[int(m.degree_in(vars))].add_term(m, c);
  return {parts.begin(), parts.end()};
}

/// True when every term has total degree `d` (the zero polynomial counts).
inline bool is_homogeneous(const Polynomial& p, int d) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return int(t.first.degree()) == d; });
}

// ---------------------------------------------------------------------------
// Text syntax

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < Var::kCount; ++i) {
    unsigned e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += Var::from_id(i).name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += to_string(m);
    }
  }
  return out;
}

class PolyParseError : public std::invalid_argument {
 public:
  PolyParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char ch) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == ch) {
      ++i_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected denominator");
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      try {
        return Polynomial(parse_rational(s_.substr(start, i_ - start)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string_view name = s_.substr(start, i_ - start);
      if (name == "D") return Polynomial::variable(Var::D());
      if (name == "x") return Polynomial::variable(Var::X());
      if (name == "y") return Polynomial::variable(Var::Mu());
      if (name == "t") return Polynomial::variable(Var::Fresh());
      if (name.size() > 1 && name[0] == 'x' &&
          std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int k = std::stoi(std::string(name.substr(1)));
        if (k < 1 || k > Var::kMaxLambda) fail("slot variable out of range: " + std::string(name));
        return Polynomial::variable(Var::lambda(k));
      }
      i_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses the polynomial text syntax (`1/2*D + 3/2*x`, `-x1^3 + x2^3`).
/// Parentheses are accepted; `/` is only allowed inside a rational literal.
inline Polynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace confcoh
