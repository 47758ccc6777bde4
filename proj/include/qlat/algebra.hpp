#pragma once

// Uniform algebra interface shared by the law checker, the tuple lattice
// construction, and the CLI.
//
// An algebra object carries a bounded lattice with two extra associative
// operations tensor/oplus and an antitone involution star. The carrier is
// either finite and enumerable (tables, chain functions) or sampled (step
// functions). All three concrete families below satisfy the Quantale
// concept; generic code takes `const A&` and works through it.

#include "qlat/chain_fn.hpp"
#include "qlat/step_fn.hpp"

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qlat {

using Rng = std::mt19937;

template <class A>
concept Quantale = requires(const A& alg, const typename A::Elem& a, const typename A::Elem& b) {
  { alg.leq(a, b) } -> std::convertible_to<bool>;
  { alg.join(a, b) } -> std::convertible_to<typename A::Elem>;
  { alg.meet(a, b) } -> std::convertible_to<typename A::Elem>;
  { alg.tensor(a, b) } -> std::convertible_to<typename A::Elem>;
  { alg.oplus(a, b) } -> std::convertible_to<typename A::Elem>;
  { alg.star(a) } -> std::convertible_to<typename A::Elem>;
  { alg.bottom() } -> std::convertible_to<typename A::Elem>;
  { alg.top() } -> std::convertible_to<typename A::Elem>;
  { alg.equal(a, b) } -> std::convertible_to<bool>;
  { alg.show(a) } -> std::convertible_to<std::string>;
  { alg.finite() } -> std::convertible_to<bool>;
  { alg.has_units() } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Table-driven finite algebra. Elements are indices 0..n-1.

struct FiniteAlgebra {
  using Elem = int;

  int n = 0;
  std::vector<std::vector<char>> leq_tab;
  std::vector<std::vector<int>> join_tab, meet_tab, tensor_tab, oplus_tab;
  std::vector<int> star_tab;
  std::vector<std::string> names;
  int bottom_elem = 0, top_elem = 0;
  bool units = false;
  int one_elem = 0, zero_elem = 0;
  std::string tag;      // serialization name, e.g. "bool", "sugihara"
  int json_offset = 0;  // JSON value = index + offset (sugihara uses -1..1)

  bool leq(int a, int b) const { return leq_tab[a][b] != 0; }
  int join(int a, int b) const { return join_tab[a][b]; }
  int meet(int a, int b) const { return meet_tab[a][b]; }
  int tensor(int a, int b) const { return tensor_tab[a][b]; }
  int oplus(int a, int b) const { return oplus_tab[a][b]; }
  int star(int a) const { return star_tab[a]; }
  int bottom() const { return bottom_elem; }
  int top() const { return top_elem; }
  bool equal(int a, int b) const { return a == b; }
  std::string show(int a) const { return names[a]; }
  bool finite() const { return true; }
  bool has_units() const { return units; }
  int one() const { return one_elem; }
  int zero() const { return zero_elem; }

  std::vector<int> carrier() const {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
  }

  int sample(Rng& rng) const {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  }
};

namespace detail {

// Derive join/meet tables, bounds and units from a leq relation. Throws if
// leq is not a lattice order; the offending pair is named in the message.
inline void finish_finite_algebra(FiniteAlgebra& A) {
  const int n = A.n;
  for (int a = 0; a < n; ++a) {
    if (!A.leq(a, a)) throw std::invalid_argument("leq not reflexive at " + A.names[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && A.leq(a, b) && A.leq(b, a))
        throw std::invalid_argument("leq not antisymmetric at " + A.names[a] + "," + A.names[b]);
      for (int c = 0; c < n; ++c)
        if (A.leq(a, b) && A.leq(b, c) && !A.leq(a, c))
          throw std::invalid_argument("leq not transitive at " + A.names[a] + "," + A.names[b] +
                                      "," + A.names[c]);
    }
  }
  A.join_tab.assign(n, std::vector<int>(n, -1));
  A.meet_tab.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (A.leq(a, c) && A.leq(b, c) && (lub < 0 || A.leq(c, lub))) lub = c;
        if (A.leq(c, a) && A.leq(c, b) && (glb < 0 || A.leq(glb, c))) glb = c;
      }
      // The candidate must actually be below/above every other bound.
      for (int c = 0; c < n; ++c) {
        if (A.leq(a, c) && A.leq(b, c) && (lub < 0 || !A.leq(lub, c))) lub = -2;
        if (A.leq(c, a) && A.leq(c, b) && (glb < 0 || !A.leq(c, glb))) glb = -2;
      }
      if (lub < 0 || glb < 0)
        throw std::invalid_argument("leq is not a lattice at pair " + A.names[a] + "," +
                                    A.names[b]);
      A.join_tab[a][b] = lub;
      A.meet_tab[a][b] = glb;
    }
  A.bottom_elem = 0;
  A.top_elem = 0;
  for (int c = 0; c < n; ++c) {
    if (A.leq(c, A.bottom_elem)) A.bottom_elem = c;
    if (A.leq(A.top_elem, c)) A.top_elem = c;
  }
  for (int c = 0; c < n; ++c)
    if (!A.leq(A.bottom_elem, c) || !A.leq(c, A.top_elem))
      throw std::invalid_argument("leq has no bottom or top");
  // A two-sided tensor unit is optional; when present, 0 := star(1).
  A.units = false;
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int a = 0; a < n && unit; ++a)
      unit = A.tensor(e, a) == a && A.tensor(a, e) == a;
    if (unit) {
      A.units = true;
      A.one_elem = e;
      A.zero_elem = A.star(e);
      break;
    }
  }
}

}  // namespace detail

// The two-element Boolean algebra: tensor = meet, oplus = join, star = not.
inline FiniteAlgebra bool2() {
  FiniteAlgebra A;
  A.n = 2;
  A.tag = "bool";
  A.names = {"0", "1"};
  A.leq_tab = {{1, 1}, {0, 1}};
  A.tensor_tab = {{0, 0}, {0, 1}};
  A.oplus_tab = {{0, 1}, {1, 1}};
  A.star_tab = {1, 0};
  detail::finish_finite_algebra(A);
  return A;
}

// The Sugihara monoid on the chain -1 < 0 < 1 (indices 0,1,2).
inline FiniteAlgebra sugihara3() {
  FiniteAlgebra A;
  A.n = 3;
  A.tag = "sugihara";
  A.json_offset = -1;
  A.names = {"-1", "0", "1"};
  A.leq_tab = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  A.tensor_tab = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  A.oplus_tab = {{0, 0, 2}, {0, 1, 2}, {2, 2, 2}};
  A.star_tab = {2, 1, 0};
  detail::finish_finite_algebra(A);
  return A;
}

// ---------------------------------------------------------------------------
// Chain functions as first-class elements.

struct ChainAlgebra {
  using Elem = ChainFn;

  int n;
  explicit ChainAlgebra(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  }

  bool leq(const ChainFn& a, const ChainFn& b) const { return chain_leq(a, b); }
  ChainFn join(const ChainFn& a, const ChainFn& b) const { return chain_join(a, b); }
  ChainFn meet(const ChainFn& a, const ChainFn& b) const { return chain_meet(a, b); }
  ChainFn tensor(const ChainFn& a, const ChainFn& b) const { return chain_tensor(a, b); }
  ChainFn oplus(const ChainFn& a, const ChainFn& b) const { return chain_oplus(a, b); }
  ChainFn star(const ChainFn& a) const { return chain_star(a); }
  ChainFn bottom() const { return chain_bottom(n); }
  ChainFn top() const { return chain_top(n); }
  bool equal(const ChainFn& a, const ChainFn& b) const { return a == b; }
  std::string show(const ChainFn& a) const { return chain_show(a); }
  bool finite() const { return true; }
  bool has_units() const { return true; }
  ChainFn one() const { return chain_identity(n); }
  ChainFn zero() const { return chain_zero(n); }

  std::vector<ChainFn> carrier() const { return chain_enumerate(n); }

  ChainFn sample(Rng& rng) const {
    std::vector<int> v(n);
    int lo = 0;
    for (int t = 0; t < n; ++t) {
      lo = std::uniform_int_distribution<int>(lo, n)(rng);
      v[t] = lo;
    }
    return ChainFn(n, std::move(v));
  }
};

// ---------------------------------------------------------------------------
// The step fragment. Infinite carrier; the checker samples it.

struct StepAlgebra {
  using Elem = StepFn;

  // Sampled coordinates are a/b with b <= max_den; small denominators keep
  // canonical forms readable in counterexamples.
  int max_den = 6;
  int max_gens = 3;

  bool leq(const StepFn& a, const StepFn& b) const { return step_leq(a, b); }
  StepFn join(const StepFn& a, const StepFn& b) const { return step_join(a, b); }
  StepFn meet(const StepFn& a, const StepFn& b) const { return step_meet(a, b); }
  StepFn tensor(const StepFn& a, const StepFn& b) const { return step_tensor(a, b); }
  StepFn oplus(const StepFn& a, const StepFn& b) const { return step_oplus(a, b); }
  StepFn star(const StepFn& a) const { return step_star(a); }
  StepFn bottom() const { return step_bottom(); }
  StepFn top() const { return step_top(); }
  bool equal(const StepFn& a, const StepFn& b) const { return a == b; }
  std::string show(const StepFn& a) const { return step_show(a); }
  bool finite() const { return false; }
  bool has_units() const { return false; }

  Rat sample_rat(Rng& rng) const {
    int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    int num = std::uniform_int_distribution<int>(0, den)(rng);
    return Rat(num, den);
  }

  StepFn sample(Rng& rng) const {
    int k = std::uniform_int_distribution<int>(0, max_gens)(rng);
    std::vector<std::pair<Rat, Rat>> raw;
    raw.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) raw.emplace_back(sample_rat(rng), sample_rat(rng));
    return canonicalize(std::move(raw));
  }
};

static_assert(Quantale<FiniteAlgebra>);
static_assert(Quantale<ChainAlgebra>);
static_assert(Quantale<StepAlgebra>);

}  // namespace qlat
