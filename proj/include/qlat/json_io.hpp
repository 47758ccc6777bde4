#pragma once

// JSON serialization for every value that crosses the CLI boundary.
// Rationals travel as "p/q" strings so nothing is ever rounded.

#include "qlat/algebra.hpp"
#include "qlat/laws.hpp"
#include "qlat/ld.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qlat {

using Json = nlohmann::json;

inline Json rat_to_json(const Rat& r) { return rat_show(r); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

inline Json step_to_json(const StepFn& f) {
  Json steps = Json::array();
  for (const auto& [x, y] : f.steps) steps.push_back({{"x", rat_show(x)}, {"y", rat_show(y)}});
  return Json{{"steps", std::move(steps)}};
}

inline StepFn step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("step function needs a \"steps\" array");
  std::vector<std::pair<Rat, Rat>> raw;
  for (const auto& s : j["steps"]) {
    if (!s.is_object() || !s.contains("x") || !s.contains("y"))
      throw std::invalid_argument("each step needs \"x\" and \"y\"");
    raw.emplace_back(rat_from_json(s["x"]), rat_from_json(s["y"]));
  }
  return canonicalize(std::move(raw));
}

inline Json chain_to_json(const ChainFn& f) {
  Json vals = Json::array();
  for (int t = 1; t <= f.n; ++t) vals.push_back(f(t));
  return Json{{"n", f.n}, {"values", std::move(vals)}};
}

inline ChainFn chain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values"))
    throw std::invalid_argument("chain function needs \"n\" and \"values\"");
  const int n = j["n"].get<int>();
  std::vector<int> v;
  for (const auto& x : j["values"]) v.push_back(x.get<int>());
  return ChainFn(n, std::move(v));
}

// --- per-algebra element serialization -------------------------------------

inline Json elem_to_json(const FiniteAlgebra& alg, int e) { return e + alg.json_offset; }

inline int elem_from_json(const FiniteAlgebra& alg, const Json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("finite element must be an integer");
  const int e = j.get<int>() - alg.json_offset;
  if (e < 0 || e >= alg.n) throw std::invalid_argument("element out of carrier range");
  return e;
}

inline Json elem_to_json(const ChainAlgebra& alg, const ChainFn& e) {
  (void)alg;
  return chain_to_json(e);
}

inline ChainFn elem_from_json(const ChainAlgebra& alg, const Json& j) {
  ChainFn f = chain_from_json(j);
  if (f.n != alg.n) throw std::invalid_argument("chain size mismatch in element");
  return f;
}

inline Json elem_to_json(const StepAlgebra&, const StepFn& e) { return step_to_json(e); }

inline StepFn elem_from_json(const StepAlgebra&, const Json& j) { return step_from_json(j); }

inline std::string algebra_tag(const FiniteAlgebra& alg) { return alg.tag; }
inline std::string algebra_tag(const ChainAlgebra& alg) { return "chain:" + std::to_string(alg.n); }
inline std::string algebra_tag(const StepAlgebra&) { return "step"; }

// --- tuples -----------------------------------------------------------------

template <class A>
Json tuple_to_json(const A& alg, const TupleT<A>& f) {
  Json comp = Json::object();
  for (int i = 1; i <= f.d; ++i)
    for (int j = i + 1; j <= f.d; ++j)
      comp[std::to_string(i) + "," + std::to_string(j)] = elem_to_json(alg, f.at(i, j));
  return Json{{"d", f.d}, {"algebra", algebra_tag(alg)}, {"components", std::move(comp)}};
}

template <class A>
Json tuple_to_json(const A& alg, const ClopenTupleT<A>& f) {
  return tuple_to_json(alg, f.t);
}

template <class A>
TupleT<A> tuple_from_json(const A& alg, const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("components"))
    throw std::invalid_argument("tuple needs \"d\" and \"components\"");
  const int d = j["d"].get<int>();
  if (d < 2) throw std::invalid_argument("tuple dimension must be >= 2");
  if (j.contains("algebra") && j["algebra"].get<std::string>() != algebra_tag(alg))
    throw std::invalid_argument("tuple algebra is " + j["algebra"].get<std::string>() +
                                ", expected " + algebra_tag(alg));
  TupleT<A> f = bottom_tuple(alg, d);
  const auto& comp = j["components"];
  for (int i = 1; i <= d; ++i)
    for (int jj = i + 1; jj <= d; ++jj) {
      const std::string key = std::to_string(i) + "," + std::to_string(jj);
      if (!comp.contains(key)) throw std::invalid_argument("missing component " + key);
      f.at(i, jj) = elem_from_json(alg, comp[key]);
    }
  return f;
}

// --- reports ----------------------------------------------------------------

inline Json law_report_to_json(const LawReport& r) {
  Json j{{"law", r.law},
         {"verdict", r.pass ? "pass" : "fail"},
         {"counterexample", r.counterexample},
         {"cases_checked", r.cases_checked}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

inline Json law_reports_to_json(const std::vector<LawReport>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(law_report_to_json(r));
  return arr;
}

// --- user-supplied operation tables -----------------------------------------

// {"carrier": n, "leq": [[...]], "tensor": [[...]], "oplus": [[...]],
//  "star": [...]}; elements are indices 0..n-1. Join/meet tables, bounds
// and units are derived; a non-lattice order or out-of-range entry throws.
inline FiniteAlgebra finite_algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw std::invalid_argument("algebra table needs \"carrier\"");
  FiniteAlgebra A;
  A.n = j["carrier"].get<int>();
  if (A.n < 1) throw std::invalid_argument("carrier must be >= 1");
  A.tag = "table";
  for (int i = 0; i < A.n; ++i) A.names.push_back(std::to_string(i));

  auto load_matrix = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing table ") + key);
    const auto& m = j[key];
    if (!m.is_array() || static_cast<int>(m.size()) != A.n)
      throw std::invalid_argument(std::string(key) + " must be an n x n matrix");
    std::vector<std::vector<int>> out;
    for (const auto& row : m) {
      if (!row.is_array() || static_cast<int>(row.size()) != A.n)
        throw std::invalid_argument(std::string(key) + " must be an n x n matrix");
      out.push_back(row.get<std::vector<int>>());
    }
    return out;
  };

  auto check_range = [&](const char* key, const std::vector<std::vector<int>>& m) {
    for (int a = 0; a < A.n; ++a)
      for (int b = 0; b < A.n; ++b)
        if (m[a][b] < 0 || m[a][b] >= A.n)
          throw std::invalid_argument(std::string(key) + " not closed at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
  };

  auto leq_m = load_matrix("leq");
  A.leq_tab.assign(A.n, std::vector<char>(A.n, 0));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) A.leq_tab[a][b] = leq_m[a][b] ? 1 : 0;

  A.tensor_tab = load_matrix("tensor");
  check_range("tensor", A.tensor_tab);
  A.oplus_tab = load_matrix("oplus");
  check_range("oplus", A.oplus_tab);

  if (!j.contains("star") || !j["star"].is_array() ||
      static_cast<int>(j["star"].size()) != A.n)
    throw std::invalid_argument("star must be an array of n indices");
  A.star_tab = j["star"].get<std::vector<int>>();
  for (int a = 0; a < A.n; ++a)
    if (A.star_tab[a] < 0 || A.star_tab[a] >= A.n)
      throw std::invalid_argument("star not closed at " + std::to_string(a));

  detail::finish_finite_algebra(A);
  return A;
}

}  // namespace qlat
