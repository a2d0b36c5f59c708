#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confcoh/cochain.hpp"

namespace confcoh {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Signatures surviving the homotopy filter

struct SolutionRow {
  Signature signature;
  int vandermonde_degree = 0;
  int weight_degree = 0;
};

inline Rational signature_weight(const std::vector<Rational>& weights, const Signature& s) {
  Rational w = 0;
  for (GenId g = 0; g < weights.size(); ++g) w += weights[g] * s.count(g);
  return w;
}

/// Signatures with Σ C(c_g, 2) ≤ Σ Δ_g c_g and Σ Δ_g c_g a nonnegative
/// integer, sorted by arity then counts ascending.
inline std::vector<SolutionRow> solution_table(const LieConformalAlgebra& alg) {
  const auto weights = weight_table(alg);
  if (!weights) throw AlgebraError("algebra '" + alg.name() + "' is not graded: no weight table");
  const std::size_t n = alg.size();
  // f_g(c) = C(c,2) − Δ_g c is convex in c; bound each count separately.
  auto f = [&](GenId g, int c) -> Rational { return Rational(c * (c - 1) / 2) - (*weights)[g] * c; };
  std::vector<int> vertex(n, 0);
  Rational lowest_total = 0;
  for (GenId g = 0; g < n; ++g) {
    while (f(g, vertex[g] + 1) <= f(g, vertex[g])) ++vertex[g];
    lowest_total += f(g, vertex[g]);
  }
  std::vector<int> upper(n);
  for (GenId g = 0; g < n; ++g) {
    Rational bound = -(lowest_total - f(g, vertex[g]));
    int c = vertex[g];
    while (f(g, c + 1) <= bound) ++c;
    upper[g] = c;
  }

  std::vector<SolutionRow> rows;
  std::vector<int> counts(n, 0);
  auto rec = [&](auto&& self, GenId g) -> void {
    if (g == n) {
      Signature s(counts);
      Rational w = signature_weight(*weights, s);
      if (w < 0 || !is_integer(w) || w < s.vandermonde_degree()) return;
      rows.push_back({s, s.vandermonde_degree(), int(w.get_num().get_si())});
      return;
    }
    for (int c = 0; c <= upper[g]; ++c) {
      counts[g] = c;
      self(self, g + 1);
    }
  };
  rec(rec, 0);
  std::sort(rows.begin(), rows.end(), [](const SolutionRow& a, const SolutionRow& b) {
    if (a.signature.arity() != b.signature.arity()) return a.signature.arity() < b.signature.arity();
    return a.signature.counts() < b.signature.counts();
  });
  return rows;
}

/// "q | (k,l,m) | vdm | w"
inline std::string to_string(const SolutionRow& r) {
  std::string counts;
  for (int c : r.signature.counts()) counts += (counts.empty() ? "" : ",") + std::to_string(c);
  return std::to_string(r.signature.arity()) + " | (" + counts + ") | " + std::to_string(r.vandermonde_degree) +
         " | " + std::to_string(r.weight_degree);
}

// ---------------------------------------------------------------------------
// Reports and options

enum class Mode { Filtered, Oracle };

inline std::string to_string(Mode m) { return m == Mode::Filtered ? "filtered" : "oracle"; }

struct EngineOptions {
  int q_max = 8;
  Mode mode = Mode::Filtered;
  std::optional<int> cap;  // oracle degree cap, same for every arity when set
  bool force_oracle = false;
};

struct CohomologyReport {
  std::string algebra;
  std::string coefficients;
  std::string mode;
  int q_max = 0;
  std::map<int, int> dims_basic;
  std::map<int, int> dims_reduced;
  std::map<int, std::vector<Cochain>> representatives;
  std::map<int, std::vector<Cochain>> representatives_reduced;
  std::map<int, int> caps;
  bool complete = true;
  bool verified = true;
  std::vector<std::string> notes;
};

/// Degree by which d raises total degree, when d is homogeneous.
inline std::optional<int> differential_degree(const LieConformalAlgebra& alg, const CoefficientModule& m) {
  auto d = alg.homogeneous_degree();
  if (!d || *d <= 0) return std::nullopt;
  if (!m.is_trivial() && !m.actions_homogeneous(*d)) return std::nullopt;
  return d;
}

/// Largest total degree of any bracket coefficient or action polynomial.
inline int max_structure_degree(const LieConformalAlgebra& alg, const CoefficientModule& m) {
  int h = 0;
  for (const auto& [key, value] : alg.table())
    for (const auto& [c, p] : value) h = std::max(h, p.degree());
  for (GenId g = 0; g < alg.size(); ++g)
    if (!m.action(g).is_zero()) h = std::max(h, m.action(g).degree());
  return h;
}

inline int default_cap(const LieConformalAlgebra& alg, int q) {
  if (alg.virasoro()) {
    if (auto w = weight_table(alg)) {
      Rational top = 0;
      for (const auto& x : *w) top = std::max(top, x);
      Rational bound = top * q;
      Integer c = bound.get_num() / bound.get_den();
      if (c * bound.get_den() < bound.get_num()) c += 1;
      return int(c.get_si()) + 1;
    }
  }
  return q + 1;
}

inline std::set<int> total_degrees(const Cochain& c) {
  std::set<int> out;
  for (const auto& [s, p] : c.components())
    for (const auto& [m, coef] : p.terms()) out.insert(int(m.degree()));
  return out;
}

namespace detail {

inline std::vector<SparseVector> d_columns(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                           const CochainSpace& src, const CochainSpace& dst) {
  std::vector<SparseVector> cols;
  cols.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) cols.push_back(dst.coordinates(differential(alg, m, src.element(i))));
  return cols;
}

inline std::vector<SparseVector> partial_columns(const CoefficientModule& m, const CochainSpace& src,
                                                 const CochainSpace& dst) {
  std::vector<SparseVector> cols;
  for (std::size_t i = 0; i < src.size(); ++i) cols.push_back(dst.coordinates(partial(m, src.element(i))));
  return cols;
}

struct Quotient {
  std::vector<std::size_t> chosen;  // indices into the candidate list
  std::vector<SparseVector> reduced;
};

/// Candidates independent modulo span(image), each reduced against it.
inline Quotient independent_modulo(const std::vector<SparseVector>& candidates, const std::vector<SparseVector>& image) {
  EchelonBasis b;
  for (const auto& v : image) b.insert(v);
  EchelonBasis both = b;
  Quotient q;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!both.insert(candidates[i])) continue;
    q.chosen.push_back(i);
    q.reduced.push_back(b.reduce(candidates[i]));
  }
  return q;
}

/// Homogeneous cochain spaces and differential columns, built on demand.
class GradedComplex {
 public:
  GradedComplex(const LieConformalAlgebra& alg, const CoefficientModule& m, int delta)
      : alg_(alg), m_(m), delta_(delta) {}

  const CochainSpace& space(int q, int d) {
    auto it = spaces_.find({q, d});
    if (it == spaces_.end())
      it = spaces_.emplace(std::make_pair(q, d), q < 0 || d < 0 ? CochainSpace(std::max(q, 0))
                                                                 : homogeneous_space(alg_, m_, q, d))
               .first;
    return it->second;
  }

  /// d: C^q_d → C^{q+1}_{d+δ}
  const std::vector<SparseVector>& d(int q, int deg) {
    auto it = d_.find({q, deg});
    if (it == d_.end()) {
      std::vector<SparseVector> cols;
      if (q >= 0 && deg >= 0) cols = d_columns(alg_, m_, space(q, deg), space(q + 1, deg + delta_));
      it = d_.emplace(std::make_pair(q, deg), std::move(cols)).first;
    }
    return it->second;
  }

  /// ∂: C^q_{d−1} → C^q_d
  std::vector<SparseVector> partial_into(int q, int deg) {
    if (deg < 1) return {};
    return partial_columns(m_, space(q, deg - 1), space(q, deg));
  }

  int delta() const { return delta_; }

 private:
  const LieConformalAlgebra& alg_;
  const CoefficientModule& m_;
  int delta_;
  std::map<std::pair<int, int>, CochainSpace> spaces_;
  std::map<std::pair<int, int>, std::vector<SparseVector>> d_;
};

inline bool vanishing_applies(const CoefficientModule& m) {
  if (m.is_trivial()) return m.a() != 0;
  return m.beta() && *m.beta() != 0;
}

/// The constant c with (dτ₂ + τ₂d)γ = ∂γ + c·γ.
inline Rational homotopy_shift(const CoefficientModule& m) { return m.is_trivial() ? Rational(-m.a()) : *m.beta(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Coboundary spaces and class membership

/// Span of coboundaries of arity q (plus ∂C^q when `reduced`) in the
/// degrees a set of test cochains occupies, with membership queries.
class ClassSpace {
 public:
  ClassSpace(const LieConformalAlgebra& alg, const CoefficientModule& m, int q, const std::set<int>& degrees,
             bool reduced)
      : alg_(alg), m_(m), q_(q) {
    if (degrees.empty()) return;
    auto add_d = [&](const CochainSpace& src) {
      for (std::size_t i = 0; i < src.size(); ++i) basis_.insert(idx_.of(differential(alg, m, src.element(i))));
    };
    auto add_p = [&](const CochainSpace& src) {
      for (std::size_t i = 0; i < src.size(); ++i) basis_.insert(idx_.of(partial(m, src.element(i))));
    };
    const bool graded_partial = !m.is_trivial() || m.a() == 0;
    if (auto delta = differential_degree(alg, m); delta && (!reduced || graded_partial)) {
      for (int d : degrees) {
        if (q >= 1 && d - *delta >= 0) add_d(homogeneous_space(alg, m, q - 1, d - *delta));
        if (reduced && d >= 1) add_p(homogeneous_space(alg, m, q, d - 1));
      }
    } else {
      int top = *degrees.rbegin();
      if (q >= 1) add_d(bounded_space(alg, m, q - 1, top + 1));
      if (reduced) add_p(bounded_space(alg, m, q, top));
      complete_ = false;
    }
  }

  /// Adds a class; false if it was already in the span.
  bool add(const Cochain& c) { return basis_.insert(idx_.of(c)); }
  bool contains(const Cochain& c) { return basis_.contains(idx_.of(c)); }
  std::size_t rank() const { return basis_.rank(); }
  bool complete() const { return complete_; }

 private:
  const LieConformalAlgebra& alg_;
  const CoefficientModule& m_;
  int q_;
  CoordinateIndex idx_;
  EchelonBasis basis_;
  bool complete_ = true;
};

struct RepresentativeCheck {
  bool is_cocycle = false;
  bool is_coboundary = false;
};

/// Basic complex: dγ = 0, and whether γ = dη for some η in the relevant degrees.
inline RepresentativeCheck verify_representative(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                                 const Cochain& gamma) {
  RepresentativeCheck r;
  r.is_cocycle = differential(alg, m, gamma).is_zero();
  if (gamma.is_zero()) {
    r.is_coboundary = true;
    return r;
  }
  ClassSpace b(alg, m, gamma.arity(), total_degrees(gamma), false);
  r.is_coboundary = b.contains(gamma);
  return r;
}

/// Reduced complex: dγ ∈ ∂C, and whether γ ∈ dC + ∂C.
inline RepresentativeCheck verify_reduced_representative(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                                         const Cochain& gamma) {
  RepresentativeCheck r;
  r.is_cocycle = divide_by_partial(m, differential(alg, m, gamma)).has_value();
  if (gamma.is_zero()) {
    r.is_coboundary = true;
    return r;
  }
  ClassSpace b(alg, m, gamma.arity(), total_degrees(gamma), true);
  r.is_coboundary = b.contains(gamma);
  return r;
}

/// True when `target` lies in span(reps) + coboundaries (+ ∂C when reduced).
inline bool class_contains(const LieConformalAlgebra& alg, const CoefficientModule& m,
                           const std::vector<Cochain>& reps, const Cochain& target, bool reduced) {
  std::set<int> degrees = total_degrees(target);
  for (const auto& r : reps) degrees.merge(total_degrees(r));
  ClassSpace space(alg, m, target.arity(), degrees, reduced);
  for (const auto& r : reps) space.add(r);
  return space.contains(target);
}

/// Checks (dτ₂ + τ₂d)γ − cγ ∈ ∂C on every basis cochain of arity q and
/// degree ≤ cap, c the homotopy shift. Returns the number checked, or
/// nullopt on the first failure.
inline std::optional<std::size_t> verify_vanishing_homotopy(const LieConformalAlgebra& alg,
                                                            const CoefficientModule& m, int q, int cap) {
  const Rational shift = detail::homotopy_shift(m);
  CochainSpace sp = bounded_space(alg, m, q, cap);
  for (std::size_t i = 0; i < sp.size(); ++i) {
    Cochain g = sp.element(i);
    Cochain lhs = differential(alg, m, tau2(alg, g)) + tau2(alg, differential(alg, m, g)) - shift * g;
    if (!divide_by_partial(m, lhs)) return std::nullopt;
  }
  return sp.size();
}

// ---------------------------------------------------------------------------
// Basic cohomology

namespace detail {

inline CochainSpace filtered_space(const LieConformalAlgebra& alg, const std::vector<Rational>& weights, int q) {
  CochainSpace sp(q);
  for (const auto& s : signatures_of_arity(alg.size(), q)) {
    Rational w = signature_weight(weights, s);
    if (w < 0 || !is_integer(w) || w < s.vandermonde_degree()) continue;
    sp.add_block(s, int(w.get_num().get_si()));
  }
  return sp;
}

inline int max_filtered_weight(const LieConformalAlgebra& alg, const std::vector<Rational>& weights, int q) {
  int top = 0;
  for (const auto& s : signatures_of_arity(alg.size(), q)) {
    Rational w = signature_weight(weights, s);
    if (w >= 0 && is_integer(w) && w >= s.vandermonde_degree()) top = std::max(top, int(w.get_num().get_si()));
  }
  return top;
}

inline void basic_filtered(const LieConformalAlgebra& alg, const CoefficientModule& m, int q_max,
                           CohomologyReport& rep) {
  if (!m.is_trivial()) throw EngineError("filtered mode needs trivial coefficients; use --mode oracle");
  if (!alg.virasoro()) throw EngineError("filtered mode needs a virasoro marker; use --mode oracle");
  const auto weights = weight_table(alg);
  if (!weights) throw EngineError("algebra '" + alg.name() + "' is not graded; use --mode oracle");
  if (q_max + 1 > Var::kMaxLambda) throw EngineError("qmax too large");

  std::vector<CochainSpace> e;
  for (int q = 0; q <= q_max + 1; ++q) e.push_back(filtered_space(alg, *weights, q));
  std::vector<std::vector<SparseVector>> cols;
  for (int q = 0; q <= q_max; ++q) {
    try {
      cols.push_back(d_columns(alg, m, e[q], e[q + 1]));
    } catch (const std::out_of_range&) {
      throw EngineError("differential leaves the weight-filtered subcomplex at arity " + std::to_string(q) +
                        "; use --mode oracle");
    }
  }
  for (int q = 0; q <= q_max; ++q) {
    auto kernel = sparse_kernel(cols[q], e[q + 1].size());
    static const std::vector<SparseVector> kNone;
    Quotient quo = independent_modulo(kernel, q >= 1 ? cols[q - 1] : kNone);
    rep.dims_basic[q] = int(quo.chosen.size());
    auto& reps = rep.representatives[q];
    for (const auto& v : quo.reduced) reps.push_back(normalized(e[q].combination(v)));
    rep.caps[q] = max_filtered_weight(alg, *weights, q);
  }
}

inline int cap_for(const LieConformalAlgebra& alg, const EngineOptions& opt, int q) {
  return opt.cap ? *opt.cap : default_cap(alg, q);
}

/// Whether the oracle's degree window provably covers all cohomology.
inline bool oracle_window_complete(const LieConformalAlgebra& alg, const CoefficientModule& m, int q, int cap) {
  if (!m.is_trivial() || !alg.virasoro()) return false;
  const auto w = weight_table(alg);
  if (!w) return false;
  return cap >= max_filtered_weight(alg, *w, q) + 1;
}

inline void basic_oracle(const LieConformalAlgebra& alg, const CoefficientModule& m, const EngineOptions& opt,
                         CohomologyReport& rep) {
  if (opt.q_max + 1 > Var::kMaxLambda) throw EngineError("qmax too large");
  if (auto delta = differential_degree(alg, m)) {
    GradedComplex cx(alg, m, *delta);
    for (int q = 0; q <= opt.q_max; ++q) {
      const int cap = cap_for(alg, opt, q);
      int dim = 0;
      auto& reps = rep.representatives[q];
      for (int d = 0; d <= cap; ++d) {
        auto kernel = sparse_kernel(cx.d(q, d), cx.space(q + 1, d + *delta).size());
        static const std::vector<SparseVector> kNone;
        Quotient quo = independent_modulo(kernel, q >= 1 ? cx.d(q - 1, d - *delta) : kNone);
        dim += int(quo.chosen.size());
        for (const auto& v : quo.reduced) reps.push_back(normalized(cx.space(q, d).combination(v)));
      }
      rep.dims_basic[q] = dim;
      rep.caps[q] = cap;
      if (!oracle_window_complete(alg, m, q, cap)) rep.complete = false;
    }
    return;
  }
  // No grading: classes of cocycles of degree ≤ cap modulo coboundaries of
  // cochains of degree ≤ cap + 1.
  rep.complete = false;
  for (int q = 0; q <= opt.q_max; ++q) {
    const int cap = cap_for(alg, opt, q);
    CochainSpace src = bounded_space(alg, m, q, cap);
    CoordinateIndex next;
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < src.size(); ++i) cols.push_back(next.of(differential(alg, m, src.element(i))));
    auto kernel = sparse_kernel(cols, next.size());
    CoordinateIndex here;
    std::vector<SparseVector> image, cand;
    if (q >= 1) {
      CochainSpace prev = bounded_space(alg, m, q - 1, cap + 1);
      for (std::size_t i = 0; i < prev.size(); ++i) image.push_back(here.of(differential(alg, m, prev.element(i))));
    }
    for (const auto& k : kernel) cand.push_back(here.of(src.combination(k)));
    Quotient quo = independent_modulo(cand, image);
    rep.dims_basic[q] = int(quo.chosen.size());
    for (auto i : quo.chosen) rep.representatives[q].push_back(normalized(src.combination(kernel[i])));
    rep.caps[q] = cap;
  }
}

// ---------------------------------------------------------------------------
// Reduced cohomology

inline void reduced_from_basic(const LieConformalAlgebra& alg, const CoefficientModule& m,
                               const CohomologyReport& basic, int q_max, CohomologyReport& rep) {
  rep.dims_reduced[0] = 1;  // C^0/∂C^0 = ℂ when a = 0, and d vanishes on constants
  rep.representatives_reduced[0] = {};
  if (auto it = basic.representatives.find(0); it != basic.representatives.end())
    rep.representatives_reduced[0] = it->second;
  for (int q = 1; q <= q_max; ++q) {
    rep.dims_reduced[q] = basic.dims_basic.at(q) + basic.dims_basic.at(q + 1);
    auto& reps = rep.representatives_reduced[q];
    for (const auto& g : basic.representatives.at(q)) reps.push_back(g);
    for (const auto& g : basic.representatives.at(q + 1)) reps.push_back(normalized(tau(alg, partial(m, g))));
  }
}

inline void reduced_oracle_graded(const LieConformalAlgebra& alg, const CoefficientModule& m, int delta,
                                  const EngineOptions& opt, CohomologyReport& rep) {
  GradedComplex cx(alg, m, delta);
  for (int q = 0; q <= opt.q_max; ++q) {
    const int cap = cap_for(alg, opt, q);
    int dim = 0;
    auto& reps = rep.representatives_reduced[q];
    for (int d = 0; d <= cap; ++d) {
      // x ↦ dx modulo ∂C^{q+1}
      EchelonBasis next_partial;
      for (const auto& v : cx.partial_into(q + 1, d + delta)) next_partial.insert(v);
      std::vector<SparseVector> cols;
      for (const auto& c : cx.d(q, d)) cols.push_back(next_partial.reduce(c));
      auto kernel = sparse_kernel(cols, cx.space(q + 1, d + delta).size());
      std::vector<SparseVector> image = q >= 1 ? cx.d(q - 1, d - delta) : std::vector<SparseVector>{};
      for (auto& v : cx.partial_into(q, d)) image.push_back(std::move(v));
      Quotient quo = independent_modulo(kernel, image);
      dim += int(quo.chosen.size());
      for (const auto& v : quo.reduced) reps.push_back(normalized(cx.space(q, d).combination(v)));
    }
    rep.dims_reduced[q] = dim;
    rep.caps[q] = cap;
  }
}

/// Quotient complex without a grading: reduced cocycles of degree ≤ cap
/// modulo d(C^{q−1}_{≤cap}) + ∂(C^q_{≤cap}).
inline void reduced_oracle_truncated(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                     const EngineOptions& opt, CohomologyReport& rep) {
  const int h = max_structure_degree(alg, m);
  for (int q = 0; q <= opt.q_max; ++q) {
    const int cap = cap_for(alg, opt, q);
    CochainSpace src = bounded_space(alg, m, q, cap);
    CoordinateIndex next;
    EchelonBasis next_partial;
    {
      CochainSpace p = bounded_space(alg, m, q + 1, cap + h);
      for (std::size_t i = 0; i < p.size(); ++i) next_partial.insert(next.of(partial(m, p.element(i))));
    }
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < src.size(); ++i)
      cols.push_back(next_partial.reduce(next.of(differential(alg, m, src.element(i)))));
    auto kernel = sparse_kernel(cols, next.size());
    CoordinateIndex here;
    std::vector<SparseVector> image, cand;
    if (q >= 1) {
      CochainSpace prev = bounded_space(alg, m, q - 1, cap);
      for (std::size_t i = 0; i < prev.size(); ++i) image.push_back(here.of(differential(alg, m, prev.element(i))));
    }
    for (std::size_t i = 0; i < src.size(); ++i) image.push_back(here.of(partial(m, src.element(i))));
    for (const auto& k : kernel) cand.push_back(here.of(src.combination(k)));
    Quotient quo = independent_modulo(cand, image);
    rep.dims_reduced[q] = int(quo.chosen.size());
    for (auto i : quo.chosen) rep.representatives_reduced[q].push_back(normalized(src.combination(kernel[i])));
    rep.caps[q] = cap;
  }
}

inline void reduced_vanishing(const LieConformalAlgebra& alg, const CoefficientModule& m, const EngineOptions& opt,
                              CohomologyReport& rep) {
  if (!alg.virasoro()) throw EngineError("the vanishing check needs a virasoro marker");
  const std::string what = m.is_trivial() ? "a != 0" : "beta != 0";
  std::size_t checked = 0;
  for (int q = 0; q <= opt.q_max; ++q) {
    rep.dims_reduced[q] = 0;
    rep.representatives_reduced[q] = {};
    if (q == 0) {
      // ℂ_a: ∂ is invertible on C^0. M_{α,β}: only constants survive C^0/∂C^0,
      // and d(v) = (D + αλ + β)v is not divisible by D + λ when β ≠ 0.
      if (!m.is_trivial()) {
        Cochain one(0);
        one.set(Signature::empty(alg.size()), Polynomial(1));
        if (divide_by_partial(m, differential(alg, m, one))) rep.verified = false;
      }
      continue;
    }
    auto n = verify_vanishing_homotopy(alg, m, q, cap_for(alg, opt, q));
    if (!n) {
      rep.verified = false;
      rep.notes.push_back("tau2 homotopy check failed at q=" + std::to_string(q));
    } else {
      checked += *n;
    }
  }
  rep.notes.push_back("vanishing for " + what + ": (d tau2 + tau2 d) = partial + const, checked on " +
                      std::to_string(checked) + " basis cochains");
}

}  // namespace detail

inline CohomologyReport basic_cohomology(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                         const EngineOptions& opt) {
  CohomologyReport rep;
  rep.algebra = alg.name();
  rep.coefficients = m.spec();
  rep.mode = to_string(opt.mode);
  rep.q_max = opt.q_max;
  if (opt.mode == Mode::Filtered) detail::basic_filtered(alg, m, opt.q_max, rep);
  else detail::basic_oracle(alg, m, opt, rep);
  if (!rep.complete) rep.notes.push_back("basic dims up to degree cap");
  return rep;
}

inline CohomologyReport reduced_cohomology(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                           const EngineOptions& opt) {
  CohomologyReport rep;
  rep.algebra = alg.name();
  rep.coefficients = m.spec();
  rep.mode = to_string(opt.mode);
  rep.q_max = opt.q_max;

  const bool rank_one_standard = !m.is_trivial() && m.alpha() && m.beta();
  if (!m.is_trivial() && (!rank_one_standard || *m.beta() == 0) && !opt.force_oracle)
    throw EngineError("reduced cohomology with rank-one coefficients is only established for beta != 0; "
                      "rerun with --force-oracle for a truncated computation");

  if (detail::vanishing_applies(m)) {
    detail::reduced_vanishing(alg, m, opt, rep);
    if (opt.mode == Mode::Oracle) {
      CohomologyReport oracle = rep;
      oracle.dims_reduced.clear();
      oracle.representatives_reduced.clear();
      detail::reduced_oracle_truncated(alg, m, opt, oracle);
      bool agree = true;
      for (const auto& [q, d] : oracle.dims_reduced)
        if (d != 0) agree = false;
      rep.caps = oracle.caps;
      rep.notes.push_back(std::string("oracle quotient complex up to degree cap: ") +
                          (agree ? "all zero" : "NONZERO, disagrees with the homotopy argument"));
      if (!agree) rep.verified = false;
    }
    return rep;
  }

  const bool graded_partial = !m.is_trivial() || m.a() == 0;
  auto delta = differential_degree(alg, m);
  if (opt.mode == Mode::Filtered) {
    if (!m.is_trivial()) throw EngineError("rank-one coefficients need --mode oracle");
    EngineOptions b = opt;
    b.q_max = opt.q_max + 1;
    CohomologyReport basic = basic_cohomology(alg, m, b);
    detail::reduced_from_basic(alg, m, basic, opt.q_max, rep);
    for (int q = 0; q <= opt.q_max; ++q) rep.caps[q] = basic.caps.at(q);
    return rep;
  }
  if (delta && graded_partial) {
    detail::reduced_oracle_graded(alg, m, *delta, opt, rep);
    for (int q = 0; q <= opt.q_max; ++q)
      if (!detail::oracle_window_complete(alg, m, q, rep.caps[q])) rep.complete = false;
  } else {
    detail::reduced_oracle_truncated(alg, m, opt, rep);
    rep.complete = false;
  }
  if (!rep.complete) rep.notes.push_back("reduced dims up to degree cap");
  return rep;
}

/// Basic and reduced cohomology in one report. Basic cohomology with
/// rank-one coefficients is only available from the oracle.
inline CohomologyReport compute_cohomology(const LieConformalAlgebra& alg, const CoefficientModule& m,
                                           const EngineOptions& opt) {
  CohomologyReport rep;
  if (m.is_trivial() || opt.mode == Mode::Oracle) {
    rep = basic_cohomology(alg, m, opt);
  } else {
    rep.algebra = alg.name();
    rep.coefficients = m.spec();
    rep.mode = to_string(opt.mode);
    rep.q_max = opt.q_max;
    rep.notes.push_back("basic cohomology with rank-one coefficients needs --mode oracle");
  }
  CohomologyReport red = reduced_cohomology(alg, m, opt);
  rep.dims_reduced = red.dims_reduced;
  rep.representatives_reduced = red.representatives_reduced;
  for (const auto& [q, c] : red.caps) rep.caps[q] = std::max(rep.caps[q], c);
  rep.complete = rep.complete && red.complete;
  rep.verified = rep.verified && red.verified;
  for (const auto& n : red.notes)
    if (std::find(rep.notes.begin(), rep.notes.end(), n) == rep.notes.end()) rep.notes.push_back(n);
  return rep;
}

/// Re-checks every representative: cocycle, not a coboundary, and the set
/// at each q independent modulo coboundaries. Updates `verified` and notes.
inline bool verify_report(const LieConformalAlgebra& alg, const CoefficientModule& m, CohomologyReport& rep) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    rep.notes.push_back("verification failed: " + msg);
  };
  auto check = [&](const std::map<int, std::vector<Cochain>>& all, bool reduced) {
    for (const auto& [q, reps] : all) {
      const std::string where = std::string(reduced ? "reduced" : "basic") + " q=" + std::to_string(q);
      std::set<int> degrees;
      for (const auto& g : reps) {
        bool cocycle = reduced ? divide_by_partial(m, differential(alg, m, g)).has_value()
                               : differential(alg, m, g).is_zero();
        if (!cocycle) fail(where + ": representative is not a cocycle");
        degrees.merge(total_degrees(g));
      }
      ClassSpace space(alg, m, q, degrees, reduced);
      for (const auto& g : reps)
        if (!space.add(g)) fail(where + ": representatives dependent modulo coboundaries");
    }
  };
  check(rep.representatives, false);
  check(rep.representatives_reduced, true);
  rep.verified = rep.verified && ok;
  return ok;
}

}  // namespace confcoh
