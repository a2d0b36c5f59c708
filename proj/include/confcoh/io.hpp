#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "confcoh/engine.hpp"

namespace confcoh {

using Json = nlohmann::ordered_json;

inline Json cochain_to_json(const LieConformalAlgebra& alg, const Cochain& c) {
  Json comps = Json::array();
  for (const auto& [s, p] : c.components()) {
    Json tuple = Json::array();
    for (GenId g : s.tuple()) tuple.push_back(alg.generator_name(g));
    comps.push_back({{"tuple", tuple}, {"value", to_string(p)}});
  }
  return {{"arity", c.arity()}, {"components", comps}};
}

/// Accepts tuples in any order; non-canonical ones are moved to canonical
/// order with the permutation sign and slot variables renamed to match.
inline Cochain cochain_from_json(const LieConformalAlgebra& alg, const Json& j) {
  const int q = j.at("arity").get<int>();
  Cochain c(q);
  for (const auto& comp : j.at("components")) {
    std::vector<GenId> args;
    for (const auto& name : comp.at("tuple")) args.push_back(alg.index_of(name.get<std::string>()));
    if (int(args.size()) != q) throw std::invalid_argument("cochain component tuple length differs from arity");
    Polynomial value = parse_polynomial(comp.at("value").get<std::string>());
    std::vector<std::size_t> order(args.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return args[x] < args[y]; });
    std::map<Var, Var> rename;
    int inversions = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      rename.emplace(Var::lambda(int(order[k]) + 1), Var::lambda(int(k) + 1));
      for (std::size_t l = k + 1; l < order.size(); ++l)
        if (order[k] > order[l]) ++inversions;
    }
    std::vector<int> counts(alg.size(), 0);
    for (GenId g : args) counts[g]++;
    Polynomial canon = rename_variables(value, rename);
    if (inversions % 2) canon *= Rational(-1);
    c.add(Signature(counts), canon);
  }
  return c;
}

inline Json report_to_json(const LieConformalAlgebra& alg, const CohomologyReport& r) {
  auto dims = [](const std::map<int, int>& m) {
    Json o = Json::object();
    for (const auto& [q, d] : m) o[std::to_string(q)] = d;
    return o;
  };
  auto reps = [&](const std::map<int, std::vector<Cochain>>& m) {
    Json o = Json::object();
    for (const auto& [q, v] : m) {
      Json a = Json::array();
      for (const auto& c : v) a.push_back(cochain_to_json(alg, c));
      o[std::to_string(q)] = a;
    }
    return o;
  };
  Json j;
  j["algebra"] = r.algebra;
  j["coefficients"] = r.coefficients;
  j["mode"] = r.mode;
  j["q_max"] = r.q_max;
  j["dims_basic"] = dims(r.dims_basic);
  j["dims_reduced"] = dims(r.dims_reduced);
  j["representatives"] = reps(r.representatives);
  j["representatives_reduced"] = reps(r.representatives_reduced);
  j["caps"] = dims(r.caps);
  j["complete"] = r.complete;
  j["verified"] = r.verified;
  j["notes"] = r.notes;
  return j;
}

/// "1,0,0,1"
inline std::string dims_row(const std::map<int, int>& dims) {
  std::string out;
  for (const auto& [q, d] : dims) out += (out.empty() ? "" : ",") + std::to_string(d);
  return out;
}

/// Piecewise summary, e.g. "1 if q=0,3; 2 if q=5,6; 0 otherwise".
inline std::string piecewise(const std::map<int, int>& dims) {
  std::map<int, std::vector<int>> by_value;
  for (const auto& [q, d] : dims)
    if (d != 0) by_value[d].push_back(q);
  if (by_value.empty()) return "0 for all q";
  std::string out;
  for (const auto& [d, qs] : by_value) {
    if (!out.empty()) out += "; ";
    out += std::to_string(d) + " if q=";
    for (std::size_t i = 0; i < qs.size(); ++i) out += (i ? "," : "") + std::to_string(qs[i]);
  }
  return out + "; 0 otherwise";
}

inline std::string cochain_to_text(const LieConformalAlgebra& alg, const Cochain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [s, p] : c.components()) {
    if (!out.empty()) out += ";  ";
    out += to_string(alg, s) + " = " + to_string(p);
  }
  return out;
}

inline std::string report_to_text(const LieConformalAlgebra& alg, const CohomologyReport& r, bool with_reps = true) {
  std::ostringstream os;
  os << "algebra:       " << r.algebra << "\n";
  os << "coefficients:  " << r.coefficients << "\n";
  os << "mode:          " << r.mode << (r.complete ? "" : " (up to degree cap)") << "\n";
  os << "q:             ";
  for (int q = 0; q <= r.q_max; ++q) os << (q ? "," : "") << q;
  os << "\n";
  if (!r.dims_basic.empty()) os << "dims_basic:    " << dims_row(r.dims_basic) << "\n";
  if (!r.dims_reduced.empty()) os << "dims_reduced:  " << dims_row(r.dims_reduced) << "\n";
  if (!r.caps.empty()) os << "caps:          " << dims_row(r.caps) << "\n";
  auto reps = [&](const char* title, const std::map<int, std::vector<Cochain>>& m) {
    bool any = false;
    for (const auto& [q, v] : m) any = any || !v.empty();
    if (!any) return;
    os << title << "\n";
    for (const auto& [q, v] : m)
      for (const auto& c : v) os << "  q=" << q << ": " << cochain_to_text(alg, c) << "\n";
  };
  if (with_reps) {
    reps("representatives (basic):", r.representatives);
    reps("representatives (reduced):", r.representatives_reduced);
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "verified:      " << (r.verified ? "yes" : "NO") << "\n";
  if (!r.dims_basic.empty()) os << "basic:   dim = " << piecewise(r.dims_basic) << "\n";
  if (!r.dims_reduced.empty()) os << "reduced: dim = " << piecewise(r.dims_reduced) << "\n";
  return os.str();
}

}  // namespace confcoh
