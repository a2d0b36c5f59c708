#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "confcoh/linalg.hpp"
#include "confcoh/module.hpp"

namespace confcoh {

/// Type signature of a cochain argument tuple: how many times each generator
/// occurs. The canonical tuple lists generators in algebra order, so for SV
/// (L, Y, M) the counts are (k, l, m).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
      if (c < 0) throw std::invalid_argument("negative signature count");
  }
  static Signature empty(std::size_t ngens) { return Signature(std::vector<int>(ngens, 0)); }

  const std::vector<int>& counts() const { return counts_; }
  int count(GenId g) const { return counts_.at(g); }
  int arity() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  std::vector<GenId> tuple() const {
    std::vector<GenId> t;
    for (GenId g = 0; g < counts_.size(); ++g) t.insert(t.end(), counts_[g], g);
    return t;
  }

  /// Zero-based first slot of generator g's block.
  int block_start(GenId g) const { return std::accumulate(counts_.begin(), counts_.begin() + long(g), 0); }

  /// Σ_g C(count_g, 2): the degree of the product of block Vandermondes.
  int vandermonde_degree() const {
    int d = 0;
    for (int c : counts_) d += c * (c - 1) / 2;
    return d;
  }

  Signature with(GenId g, int delta) const {
    Signature s = *this;
    s.counts_.at(g) += delta;
    if (s.counts_[g] < 0) throw std::invalid_argument("signature count would become negative");
    return s;
  }

  /// Orders by arity, then by canonical tuple lexicographically (so for SV,
  /// (L,L,Y,Y,M) precedes (L,Y,Y,M,M)).
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    return b.counts_ <=> a.counts_;
  }
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> counts_;
};

/// All signatures of arity q over `ngens` generators, in canonical order.
inline std::vector<Signature> signatures_of_arity(std::size_t ngens, int q) {
  std::vector<Signature> out;
  std::vector<int> counts(ngens, 0);
  auto rec = [&](auto&& self, std::size_t g, int left) -> void {
    if (g + 1 == ngens) {
      counts[g] = left;
      out.emplace_back(counts);
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[g] = c;
      self(self, g + 1, left - c);
    }
  };
  if (ngens == 0) {
    if (q == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(rec, 0, q);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const LieConformalAlgebra& alg, const Signature& s) {
  std::string out = "(";
  bool first = true;
  for (GenId g : s.tuple()) {
    if (!first) out += ',';
    out += alg.generator_name(g);
    first = false;
  }
  return out + ")";
}

/// An n-cochain stored by its values on canonical argument tuples. Each value
/// is a polynomial in λ₁..λ_n (plus D for rank-one coefficients), skew in the
/// slot variables of each equal-generator block; values on other tuples
/// follow by signed permutation.
class Cochain {
 public:
  explicit Cochain(int arity = 0) : arity_(arity) {
    if (arity < 0 || arity > Var::kMaxLambda) throw std::out_of_range("cochain arity out of range");
  }

  int arity() const { return arity_; }
  const std::map<Signature, Polynomial>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  const Polynomial& component(const Signature& s) const {
    static const Polynomial kZero;
    auto it = components_.find(s);
    return it == components_.end() ? kZero : it->second;
  }

  void set(const Signature& s, Polynomial p) {
    check(s);
    if (p.is_zero()) components_.erase(s);
    else components_[s] = std::move(p);
  }
  void add(const Signature& s, const Polynomial& p) {
    if (p.is_zero()) return;
    check(s);
    Polynomial& slot = components_[s];
    slot += p;
    if (slot.is_zero()) components_.erase(s);
  }

  Cochain& operator+=(const Cochain& o) {
    same_arity(o);
    for (const auto& [s, p] : o.components_) add(s, p);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    same_arity(o);
    for (const auto& [s, p] : o.components_) add(s, -p);
    return *this;
  }
  Cochain& operator*=(const Rational& c) {
    if (c == 0) components_.clear();
    for (auto& [s, p] : components_) p *= c;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
  friend bool operator==(const Cochain&, const Cochain&) = default;

  /// Highest total degree over all components (Polynomial::kZeroDegree if zero).
  int degree() const {
    int d = Polynomial::kZeroDegree;
    for (const auto& [s, p] : components_) d = std::max(d, p.degree());
    return d;
  }

 private:
  void check(const Signature& s) const {
    if (s.arity() != arity_) throw std::invalid_argument("component signature does not match cochain arity");
  }
  void same_arity(const Cochain& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("cochain arity mismatch");
  }

  int arity_;
  std::map<Signature, Polynomial> components_;
};

/// Scales c so that the leading term (grlex) of its first component in
/// canonical order has coefficient +1.
inline Cochain normalized(Cochain c) {
  if (c.is_zero()) return c;
  Rational lead = c.components().begin()->second.leading().second;
  c *= 1 / lead;
  return c;
}

/// γ_{slots}(args) for an arbitrary argument tuple: sorts the arguments into
/// canonical order (stable, with the permutation sign) and substitutes the
/// slot expressions into the stored component.
inline Polynomial evaluate(const Cochain& c, std::size_t ngens, std::span<const GenId> args,
                           std::span<const Polynomial> slots) {
  const std::size_t n = args.size();
  if (slots.size() != n || int(n) != c.arity()) throw std::invalid_argument("evaluate: arity mismatch");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return args[x] < args[y]; });
  std::vector<int> counts(ngens, 0);
  for (GenId g : args) counts.at(g)++;
  const Polynomial& comp = c.component(Signature(std::move(counts)));
  if (comp.is_zero()) return {};
  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order[i] > order[j]) ++inversions;
  Substitution sub;
  for (std::size_t k = 0; k < n; ++k) sub.set(Var::lambda(int(k) + 1), slots[order[k]]);
  Polynomial v = sub.apply(comp);
  if (inversions % 2) v *= Rational(-1);
  return v;
}

/// True when every component changes sign under each adjacent transposition
/// of slot variables inside an equal-generator block.
inline bool is_block_skew(const Cochain& c) {
  for (const auto& [s, p] : c.components()) {
    for (GenId g = 0; g < s.counts().size(); ++g) {
      int start = s.block_start(g);
      for (int k = start; k + 1 < start + s.count(g); ++k) {
        Var u = Var::lambda(k + 1), w = Var::lambda(k + 2);
        if (rename_variables(p, {{u, w}, {w, u}}) != -p) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bases of homogeneous block-skew polynomials

/// Strictly decreasing sequences e₁ > e₂ > … > e_len ≥ 0 with the given sum.
inline std::vector<std::vector<int>> strictly_decreasing(int len, int sum) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    if (sum == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int upper, int remaining) -> void {
    if (remaining == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    // remaining entries below `upper` sum to at least C(remaining, 2)
    for (int e = std::min(upper - 1, left); e >= remaining - 1; --e) {
      if (left - e < (remaining - 1) * (remaining - 2) / 2) continue;
      cur.push_back(e);
      self(self, left - e, e, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, sum, sum + 1, len);
  return out;
}

/// Σ_σ sign(σ) Π vars[i]^{exps[σ(i)]}, the alternant det(vars[i]^{exps[j]}).
inline Polynomial alternant(std::span<const Var> vars, std::span<const int> exps) {
  const std::size_t n = vars.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.multiply_by(vars[i], unsigned(exps[perm[i]]));
    out.add_term(m, inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// A basis element: signature plus the canonical monomial D^j·Π λᵢ^{eᵢ} with
/// exponents strictly decreasing inside each block.
struct BasisKey {
  Signature sig;
  Monomial mono;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

inline bool is_canonical_monomial(const Signature& s, const Monomial& m) {
  for (GenId g = 0; g < s.counts().size(); ++g) {
    int start = s.block_start(g);
    for (int k = start; k + 1 < start + s.count(g); ++k)
      if (m.exponent(Var::lambda(k + 1)) <= m.exponent(Var::lambda(k + 2))) return false;
  }
  return true;
}

/// D^j times the product of block alternants determined by `key`.
inline Polynomial basis_value(const BasisKey& key) {
  Polynomial v = Polynomial::term(Monomial::of(Var::D(), key.mono.exponent(Var::D())), 1);
  const Signature& s = key.sig;
  for (GenId g = 0; g < s.counts().size(); ++g) {
    int start = s.block_start(g);
    std::vector<Var> vars;
    std::vector<int> exps;
    for (int k = start; k < start + s.count(g); ++k) {
      vars.push_back(Var::lambda(k + 1));
      exps.push_back(int(key.mono.exponent(Var::lambda(k + 1))));
    }
    if (vars.size() > 1) v *= alternant(vars, exps);
    else if (vars.size() == 1) v *= Polynomial::term(Monomial::of(vars[0], unsigned(exps[0])), 1);
  }
  return v;
}

/// Canonical monomials of signature s with λ-degree `degree` and D-power j.
inline std::vector<Monomial> canonical_monomials(const Signature& s, int degree, int d_power = 0) {
  std::vector<Monomial> out;
  const std::size_t ngens = s.counts().size();
  std::vector<std::vector<int>> chosen(ngens);
  auto rec = [&](auto&& self, GenId g, int left) -> void {
    if (g == ngens) {
      if (left != 0) return;
      Monomial m = Monomial::of(Var::D(), unsigned(d_power));
      for (GenId h = 0; h < ngens; ++h) {
        int start = s.block_start(h);
        for (int k = 0; k < s.count(h); ++k) m.multiply_by(Var::lambda(start + k + 1), unsigned(chosen[h][k]));
      }
      out.push_back(m);
      return;
    }
    int later_min = 0;
    for (GenId h = g + 1; h < ngens; ++h) later_min += s.count(h) * (s.count(h) - 1) / 2;
    for (int part = s.count(g) * (s.count(g) - 1) / 2; part <= left - later_min; ++part) {
      for (auto& seq : strictly_decreasing(s.count(g), part)) {
        chosen[g] = seq;
        self(self, g + 1, left - part);
      }
    }
  };
  if (degree >= s.vandermonde_degree()) rec(rec, 0, degree);
  return out;
}

/// Finite-dimensional space of cochains spanned by basis elements, with
/// coordinates. Because each basis element has coefficient 1 on its own
/// canonical monomial and 0 on every other canonical monomial, the
/// coordinates of a block-skew cochain are its coefficients on canonical
/// monomials.
class CochainSpace {
 public:
  explicit CochainSpace(int arity) : arity_(arity) {}

  void add(BasisKey key) {
    if (key.sig.arity() != arity_) throw std::invalid_argument("basis key arity mismatch");
    auto [it, inserted] = index_.try_emplace(std::make_pair(key.sig, key.mono.exponents()), keys_.size());
    if (inserted) keys_.push_back(std::move(key));
  }

  /// All canonical keys of signature s with λ-degree `lambda_degree` and
  /// D-power `d_power`.
  void add_block(const Signature& s, int lambda_degree, int d_power = 0) {
    for (const auto& m : canonical_monomials(s, lambda_degree, d_power)) add({s, m});
  }

  int arity() const { return arity_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<BasisKey>& keys() const { return keys_; }

  Cochain element(std::size_t i) const {
    Cochain c(arity_);
    c.set(keys_.at(i).sig, basis_value(keys_[i]));
    return c;
  }

  std::optional<std::size_t> find(const Signature& s, const Monomial& m) const {
    auto it = index_.find(std::make_pair(s, m.exponents()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Coordinates of a block-skew cochain; throws if it leaves the space.
  SparseVector coordinates(const Cochain& c) const {
    if (c.arity() != arity_) throw std::invalid_argument("coordinates: arity mismatch");
    std::vector<std::pair<std::size_t, Rational>> v;
    for (const auto& [s, p] : c.components()) {
      for (const auto& [m, coef] : p.terms()) {
        if (!is_canonical_monomial(s, m)) continue;
        auto idx = find(s, m);
        if (!idx) throw std::out_of_range("cochain has a component outside the coordinate space");
        v.emplace_back(*idx, coef);
      }
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  std::optional<SparseVector> try_coordinates(const Cochain& c) const {
    try {
      return coordinates(c);
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }

  Cochain combination(const SparseVector& v) const {
    Cochain c(arity_);
    for (const auto& [i, coef] : v) c.add(keys_.at(i).sig, coef * basis_value(keys_[i]));
    return c;
  }

 private:
  int arity_;
  std::vector<BasisKey> keys_;
  std::map<std::pair<Signature, std::array<std::uint8_t, Var::kCount>>, std::size_t> index_;
};

/// Coordinates on canonical monomials that grow on demand; used where the
/// target space of a map is not known in advance.
class CoordinateIndex {
 public:
  SparseVector of(const Cochain& c) {
    SparseVector v;
    for (const auto& [s, p] : c.components())
      for (const auto& [m, coef] : p.terms())
        if (is_canonical_monomial(s, m)) v.emplace_back(slot(s, m), coef);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::size_t slot(const Signature& s, const Monomial& m) {
    return index_.try_emplace(std::make_pair(s, m.exponents()), index_.size()).first->second;
  }
  std::map<std::pair<Signature, std::array<std::uint8_t, Var::kCount>>, std::size_t> index_;
};

/// Space of q-cochains homogeneous of total degree `degree` (in D and the
/// λᵢ; D only occurs for rank-one coefficients).
inline CochainSpace homogeneous_space(const LieConformalAlgebra& alg, const CoefficientModule& m, int q, int degree) {
  CochainSpace sp(q);
  if (degree < 0) return sp;
  for (const auto& s : signatures_of_arity(alg.size(), q)) {
    if (m.is_trivial()) {
      sp.add_block(s, degree);
    } else {
      for (int j = 0; j <= degree; ++j) sp.add_block(s, degree - j, j);
    }
  }
  return sp;
}

/// Space of q-cochains of total degree ≤ max_degree.
inline CochainSpace bounded_space(const LieConformalAlgebra& alg, const CoefficientModule& m, int q, int max_degree) {
  CochainSpace sp(q);
  for (int d = 0; d <= max_degree; ++d) {
    CochainSpace h = homogeneous_space(alg, m, q, d);
    for (const auto& k : h.keys()) sp.add(k);
  }
  return sp;
}

struct CochainBasis {
  Signature signature;
  int degree = 0;
  std::vector<Cochain> elements;
};

/// Basis of block-skew cochains supported on `sig` whose λ-degree is
/// `degree`; for rank-one coefficients each is multiplied by D^j, 0 ≤ j ≤ d_cap.
inline CochainBasis enumerate_basis(const LieConformalAlgebra& alg, const CoefficientModule& m, const Signature& sig,
                                    int degree, int d_cap = 0) {
  if (sig.counts().size() != alg.size()) throw std::invalid_argument("signature does not match algebra");
  CochainBasis b{sig, degree, {}};
  if (degree < 0) return b;
  CochainSpace sp(sig.arity());
  for (int j = 0; j <= (m.is_trivial() ? 0 : d_cap); ++j) sp.add_block(sig, degree, j);
  for (std::size_t i = 0; i < sp.size(); ++i) b.elements.push_back(sp.element(i));
  return b;
}

// ---------------------------------------------------------------------------
// Differential and homotopy operators

/// The coboundary of an n-cochain:
///   (dγ)(a₁..a_{n+1}) = Σᵢ (−1)^{i+1} a_{iλᵢ} γ(..âᵢ..)
///                     + Σ_{i<j} (−1)^{i+j} γ_{λᵢ+λⱼ,..}([a_{iλᵢ} a_j], ..âᵢ..âⱼ..),
/// where a ∂ in the bracket acts on the first slot as −(λᵢ+λⱼ).
inline Cochain differential(const LieConformalAlgebra& alg, const CoefficientModule& m, const Cochain& gamma) {
  const int n = gamma.arity();
  if (n + 1 > Var::kMaxLambda) throw std::out_of_range("differential: arity too large");
  const std::size_t ngens = alg.size();
  Cochain out(n + 1);
  if (gamma.is_zero()) return out;

  // Target signatures that can receive a contribution.
  std::set<Signature> targets;
  for (const auto& [s, p] : gamma.components()) {
    for (GenId g = 0; g < ngens; ++g)
      if (!m.action(g).is_zero()) targets.insert(s.with(g, 1));
    for (const auto& [key, value] : alg.table()) {
      for (const auto& [c, coef] : value) {
        if (s.count(c) == 0) continue;
        targets.insert(s.with(c, -1).with(key.first, 1).with(key.second, 1));
      }
    }
  }

  std::vector<Polynomial> lam;
  for (int k = 1; k <= n + 1; ++k) lam.push_back(Polynomial::variable(Var::lambda(k)));

  for (const Signature& t : targets) {
    const std::vector<GenId> tup = t.tuple();
    Polynomial total;
    std::vector<GenId> args;
    std::vector<Polynomial> slots;
    if (!m.is_trivial()) {
      for (int i = 0; i < n + 1; ++i) {
        if (m.action(tup[i]).is_zero()) continue;
        if (gamma.component(t.with(tup[i], -1)).is_zero()) continue;
        args.clear();
        slots.clear();
        for (int k = 0; k < n + 1; ++k) {
          if (k == i) continue;
          args.push_back(tup[k]);
          slots.push_back(lam[k]);
        }
        Polynomial v = module_action(m, tup[i], evaluate(gamma, ngens, args, slots), Var::lambda(i + 1));
        if (i % 2) total -= v;
        else total += v;
      }
    }
    for (int i = 0; i < n + 1; ++i) {
      for (int j = i + 1; j < n + 1; ++j) {
        const ConformalElement& br = alg.bracket(tup[i], tup[j]);
        if (br.empty()) continue;
        const Signature rest = t.with(tup[i], -1).with(tup[j], -1);
        for (const auto& [c, p] : br) {
          if (gamma.component(rest.with(c, 1)).is_zero()) continue;
          Polynomial mu = lam[i] + lam[j];
          Polynomial coef = Substitution().set(Var::D(), -mu).set(Var::X(), lam[i]).apply(p);
          args.assign(1, c);
          slots.assign(1, mu);
          for (int k = 0; k < n + 1; ++k) {
            if (k == i || k == j) continue;
            args.push_back(tup[k]);
            slots.push_back(lam[k]);
          }
          Polynomial v = coef * evaluate(gamma, ngens, args, slots);
          // (−1)^{i+j} with 1-based indices equals (−1)^{i+j} with 0-based ones
          if ((i + j) % 2) total -= v;
          else total += v;
        }
      }
    }
    out.set(t, std::move(total));
  }
  return out;
}

namespace detail {

// γ_{λ₁..λ_{q−1}, t}(a₁..a_{q−1}, L) for every canonical (q−1)-tuple, with
// the fresh variable t in the appended slot; `finish` reduces in t.
template <typename Finish>
Cochain contract_with_virasoro(const LieConformalAlgebra& alg, const Cochain& gamma, Finish finish) {
  if (!alg.virasoro()) throw AlgebraError("homotopy operator requires a virasoro marker");
  const int q = gamma.arity();
  if (q < 1) throw std::invalid_argument("homotopy operator needs arity >= 1");
  const GenId l = *alg.virasoro();
  Cochain out(q - 1);
  for (const auto& [s, p] : gamma.components()) {
    if (s.count(l) == 0) continue;
    const Signature b = s.with(l, -1);
    std::vector<GenId> args = b.tuple();
    std::vector<Polynomial> slots;
    for (int k = 1; k <= q - 1; ++k) slots.push_back(Polynomial::variable(Var::lambda(k)));
    args.push_back(l);
    slots.push_back(Polynomial::variable(Var::Fresh()));
    Polynomial v = finish(evaluate(gamma, alg.size(), args, slots));
    if ((q - 1) % 2) v *= Rational(-1);
    out.set(b, std::move(v));
  }
  return out;
}

}  // namespace detail

/// (τγ)_{λ₁..λ_{q−1}}(a₁..a_{q−1}) = (−1)^{q−1} ∂/∂λ γ_{λ₁..λ_{q−1},λ}(a₁..a_{q−1}, L)|_{λ=0}.
inline Cochain tau(const LieConformalAlgebra& alg, const Cochain& gamma) {
  return detail::contract_with_virasoro(alg, gamma, [](const Polynomial& p) { return diff_at_zero(p, Var::Fresh()); });
}

/// (τ₂γ)_{λ₁..λ_{q−1}}(a₁..a_{q−1}) = (−1)^{q−1} γ_{λ₁..λ_{q−1},λ}(a₁..a_{q−1}, L)|_{λ=0}.
inline Cochain tau2(const LieConformalAlgebra& alg, const Cochain& gamma) {
  return detail::contract_with_virasoro(alg, gamma,
                                        [](const Polynomial& p) { return evaluate_at_zero(p, Var::Fresh()); });
}

/// (∂γ) = (∂_V + Σ λᵢ)γ.
inline Cochain partial(const CoefficientModule& m, const Cochain& gamma) {
  const std::vector<Var> vars = lambda_vars(gamma.arity());
  Cochain out(gamma.arity());
  for (const auto& [s, p] : gamma.components()) out.set(s, partial_on_value(m, p, vars));
  return out;
}

/// η with ∂η = γ, if it exists. ℚ[D, λ] is a domain and ∂ multiplies by a
/// linear form that is monic in one variable, so η is found by exact
/// division; η is block-skew whenever γ is.
inline std::optional<Cochain> divide_by_partial(const CoefficientModule& m, const Cochain& gamma) {
  const int q = gamma.arity();
  Cochain out(q);
  if (gamma.is_zero()) return out;
  // Divisor = lead + rest, lead a variable not occurring in rest.
  Var lead = Var::D();
  Polynomial rest;
  if (m.is_trivial()) {
    if (q == 0) {
      if (m.a() == 0) return std::nullopt;
      for (const auto& [s, p] : gamma.components()) out.set(s, p * (1 / m.a()));
      return out;
    }
    lead = Var::lambda(1);
    rest = Polynomial(m.a());
    for (int k = 2; k <= q; ++k) rest += Polynomial::variable(Var::lambda(k));
  } else {
    rest = sum_of(lambda_vars(q));
  }
  for (const auto& [s, p] : gamma.components()) {
    // Synthetic division in `lead`: p = Σ c_k lead^k.
    std::map<unsigned, Polynomial, std::greater<>> coeffs;
    for (const auto& [mono, c] : p.terms()) {
      Monomial r = mono;
      unsigned e = r.exponent(lead);
      r.set(lead, 0);
      coeffs[e].add_term(r, c);
    }
    unsigned top = coeffs.begin()->first;
    if (top == 0) return std::nullopt;
    Polynomial quotient, carry;  // carry = q_k
    for (unsigned k = top; k >= 1; --k) {
      Polynomial ck = coeffs.count(k) ? coeffs[k] : Polynomial();
      carry = ck - (k == top ? Polynomial() : rest * carry);
      quotient.add_scaled_product(1, Monomial::of(lead, k - 1), carry);
    }
    Polynomial c0 = coeffs.count(0) ? coeffs[0] : Polynomial();
    if (c0 - rest * carry != Polynomial()) return std::nullopt;
    out.set(s, std::move(quotient));
  }
  return out;
}

}  // namespace confcoh
