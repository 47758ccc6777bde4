#pragma once

// Tuples indexed by pairs 1 <= i < j <= d over a quantale-like algebra,
// and the lattice of clopen tuples.
//
// A tuple is closed when f_ij ⊗ f_jk <= f_ik for every i < j < k, and open
// when f_ik <= f_ij ⊕ f_jk. Clopen tuples form a lattice: join is the
// closure of the componentwise join, meet the interior of the componentwise
// meet. Closure is computed by dynamic programming over interval length:
//
//     c_ik = f_ik v V_{i<j<k} (c_ij ⊗ c_jk),    gaps k-i processed upward.
//
// This equals the join over all subdivisions i < l_1 < ... < l_m < k of the
// products f_{i,l_1} ⊗ ... ⊗ f_{l_m,k}: any subdivision splits at its first
// interior point into shorter subdivisions already absorbed by the DP cells,
// and ⊗ distributes over the finite joins involved. The exponential
// subdivision formula is kept alongside as a test oracle.

#include "qlat/algebra.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

// Components are stored in lexicographic pair order (1,2),(1,3),...,(d-1,d).
inline int pair_index(int i, int j, int d) {
  if (!(1 <= i && i < j && j <= d)) throw std::invalid_argument("bad pair index");
  return (i - 1) * (2 * d - i) / 2 + (j - i - 1);
}

inline int pair_count(int d) { return d * (d - 1) / 2; }

template <class A>
struct TupleT {
  using Elem = typename A::Elem;
  int d = 2;
  std::vector<Elem> comp;  // pair_count(d) components

  const Elem& at(int i, int j) const { return comp[static_cast<size_t>(pair_index(i, j, d))]; }
  Elem& at(int i, int j) { return comp[static_cast<size_t>(pair_index(i, j, d))]; }
};

template <class A>
TupleT<A> make_tuple_of(const A& alg, int d, const typename A::Elem& fill) {
  if (d < 2) throw std::invalid_argument("tuple dimension must be >= 2");
  (void)alg;
  return TupleT<A>{d, std::vector<typename A::Elem>(static_cast<size_t>(pair_count(d)), fill)};
}

template <class A>
TupleT<A> bottom_tuple(const A& alg, int d) { return make_tuple_of(alg, d, alg.bottom()); }

template <class A>
TupleT<A> top_tuple(const A& alg, int d) { return make_tuple_of(alg, d, alg.top()); }

template <class A>
void require_compatible(const TupleT<A>& f, const TupleT<A>& g) {
  if (f.d != g.d) throw std::invalid_argument("tuple dimension mismatch");
}

template <class A>
bool tuple_equal(const A& alg, const TupleT<A>& f, const TupleT<A>& g) {
  require_compatible(f, g);
  for (size_t c = 0; c < f.comp.size(); ++c)
    if (!alg.equal(f.comp[c], g.comp[c])) return false;
  return true;
}

// Componentwise (product) order; on clopens this is the lattice order.
template <class A>
bool tuple_leq(const A& alg, const TupleT<A>& f, const TupleT<A>& g) {
  require_compatible(f, g);
  for (size_t c = 0; c < f.comp.size(); ++c)
    if (!alg.leq(f.comp[c], g.comp[c])) return false;
  return true;
}

template <class A>
TupleT<A> tuple_join(const A& alg, const TupleT<A>& f, const TupleT<A>& g) {
  require_compatible(f, g);
  TupleT<A> r = f;
  for (size_t c = 0; c < r.comp.size(); ++c) r.comp[c] = alg.join(f.comp[c], g.comp[c]);
  return r;
}

template <class A>
TupleT<A> tuple_meet(const A& alg, const TupleT<A>& f, const TupleT<A>& g) {
  require_compatible(f, g);
  TupleT<A> r = f;
  for (size_t c = 0; c < r.comp.size(); ++c) r.comp[c] = alg.meet(f.comp[c], g.comp[c]);
  return r;
}

// First violating triple in lexicographic (i,j,k) order, if any.
template <class A>
std::optional<std::array<int, 3>> closed_violation(const A& alg, const TupleT<A>& f) {
  for (int i = 1; i <= f.d; ++i)
    for (int j = i + 1; j <= f.d; ++j)
      for (int k = j + 1; k <= f.d; ++k)
        if (!alg.leq(alg.tensor(f.at(i, j), f.at(j, k)), f.at(i, k)))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

template <class A>
std::optional<std::array<int, 3>> open_violation(const A& alg, const TupleT<A>& f) {
  for (int i = 1; i <= f.d; ++i)
    for (int j = i + 1; j <= f.d; ++j)
      for (int k = j + 1; k <= f.d; ++k)
        if (!alg.leq(f.at(i, k), alg.oplus(f.at(i, j), f.at(j, k))))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

template <class A>
std::optional<std::array<int, 3>> clopen_violation(const A& alg, const TupleT<A>& f) {
  if (auto v = closed_violation(alg, f)) return v;
  return open_violation(alg, f);
}

template <class A>
bool is_closed(const A& alg, const TupleT<A>& f) { return !closed_violation(alg, f); }

template <class A>
bool is_open(const A& alg, const TupleT<A>& f) { return !open_violation(alg, f); }

template <class A>
bool is_clopen(const A& alg, const TupleT<A>& f) { return !clopen_violation(alg, f); }

// Least closed tuple above f.
template <class A>
TupleT<A> closure(const A& alg, const TupleT<A>& f) {
  TupleT<A> c = f;
  for (int gap = 2; gap < c.d; ++gap)
    for (int i = 1; i + gap <= c.d; ++i) {
      const int k = i + gap;
      auto acc = c.at(i, k);
      for (int j = i + 1; j < k; ++j)
        acc = alg.join(acc, alg.tensor(c.at(i, j), c.at(j, k)));
      c.at(i, k) = acc;
    }
  return c;
}

// Greatest open tuple below f.
template <class A>
TupleT<A> interior(const A& alg, const TupleT<A>& f) {
  TupleT<A> c = f;
  for (int gap = 2; gap < c.d; ++gap)
    for (int i = 1; i + gap <= c.d; ++i) {
      const int k = i + gap;
      auto acc = c.at(i, k);
      for (int j = i + 1; j < k; ++j)
        acc = alg.meet(acc, alg.oplus(c.at(i, j), c.at(j, k)));
      c.at(i, k) = acc;
    }
  return c;
}

// Reference implementations that enumerate all 2^(k-i-1) subdivisions of
// each interval. Exponential; used to cross-check the DP.
template <class A>
TupleT<A> closure_by_subdivisions(const A& alg, const TupleT<A>& f) {
  TupleT<A> c = f;
  for (int i = 1; i <= f.d; ++i)
    for (int k = i + 2; k <= f.d; ++k) {
      const int inner = k - i - 1;
      auto acc = f.at(i, k);
      for (unsigned mask = 1; mask < (1u << inner); ++mask) {
        int prev = i;
        std::optional<typename A::Elem> prod;
        for (int b = 0; b < inner; ++b)
          if (mask & (1u << b)) {
            const int j = i + 1 + b;
            prod = prod ? alg.tensor(*prod, f.at(prev, j)) : f.at(prev, j);
            prev = j;
          }
        prod = prod ? alg.tensor(*prod, f.at(prev, k)) : f.at(prev, k);
        acc = alg.join(acc, *prod);
      }
      c.at(i, k) = acc;
    }
  return c;
}

template <class A>
TupleT<A> interior_by_subdivisions(const A& alg, const TupleT<A>& f) {
  TupleT<A> c = f;
  for (int i = 1; i <= f.d; ++i)
    for (int k = i + 2; k <= f.d; ++k) {
      const int inner = k - i - 1;
      auto acc = f.at(i, k);
      for (unsigned mask = 1; mask < (1u << inner); ++mask) {
        int prev = i;
        std::optional<typename A::Elem> sum;
        for (int b = 0; b < inner; ++b)
          if (mask & (1u << b)) {
            const int j = i + 1 + b;
            sum = sum ? alg.oplus(*sum, f.at(prev, j)) : f.at(prev, j);
            prev = j;
          }
        sum = sum ? alg.oplus(*sum, f.at(prev, k)) : f.at(prev, k);
        acc = alg.meet(acc, *sum);
      }
      c.at(i, k) = acc;
    }
  return c;
}

// A clopen tuple. Construct through to_clopen (input validation, throws
// std::invalid_argument) or expect_clopen (internal invariant, throws
// std::logic_error); both name the first violating triple.
template <class A>
struct ClopenTupleT {
  TupleT<A> t;
};

namespace detail {
inline std::string triple_msg(const std::array<int, 3>& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
         ")";
}
}  // namespace detail

template <class A>
ClopenTupleT<A> to_clopen(const A& alg, TupleT<A> f) {
  if (auto v = closed_violation(alg, f))
    throw std::invalid_argument("tuple not closed at triple " + detail::triple_msg(*v));
  if (auto v = open_violation(alg, f))
    throw std::invalid_argument("tuple not open at triple " + detail::triple_msg(*v));
  return ClopenTupleT<A>{std::move(f)};
}

template <class A>
ClopenTupleT<A> expect_clopen(const A& alg, TupleT<A> f, const char* what) {
  if (auto v = clopen_violation(alg, f))
    throw std::logic_error(std::string(what) + ": result not clopen at triple " +
                           detail::triple_msg(*v));
  return ClopenTupleT<A>{std::move(f)};
}

template <class A>
ClopenTupleT<A> ld_join(const A& alg, const ClopenTupleT<A>& f, const ClopenTupleT<A>& g) {
  return expect_clopen(alg, closure(alg, tuple_join(alg, f.t, g.t)), "ld_join");
}

template <class A>
ClopenTupleT<A> ld_meet(const A& alg, const ClopenTupleT<A>& f, const ClopenTupleT<A>& g) {
  return expect_clopen(alg, interior(alg, tuple_meet(alg, f.t, g.t)), "ld_meet");
}

template <class A>
ClopenTupleT<A> ld_join_many(const A& alg, int d, const std::vector<ClopenTupleT<A>>& fs) {
  TupleT<A> acc = bottom_tuple(alg, d);
  for (const auto& f : fs) acc = tuple_join(alg, acc, f.t);
  return expect_clopen(alg, closure(alg, std::move(acc)), "ld_join");
}

template <class A>
ClopenTupleT<A> ld_meet_many(const A& alg, int d, const std::vector<ClopenTupleT<A>>& fs) {
  TupleT<A> acc = top_tuple(alg, d);
  for (const auto& f : fs) acc = tuple_meet(alg, acc, f.t);
  return expect_clopen(alg, interior(alg, std::move(acc)), "ld_meet");
}

// Dual tuple: (star f)_ij = star(f_{sigma(j), sigma(i)}) with the index
// reversal sigma(i) = d - i + 1. Swaps closed and open.
template <class A>
TupleT<A> tuple_star(const A& alg, const TupleT<A>& f) {
  TupleT<A> r = f;
  const int d = f.d;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) r.at(i, j) = alg.star(f.at(d - j + 1, d - i + 1));
  return r;
}

template <class A>
ClopenTupleT<A> clopen_star(const A& alg, const ClopenTupleT<A>& f) {
  return expect_clopen(alg, tuple_star(alg, f.t), "clopen_star");
}

// Extended component: the stored value above the diagonal, its star below.
// The diagonal itself would be the unit 0, which the step fragment lacks,
// so i = j is rejected uniformly.
template <class A>
typename A::Elem skew_metric(const A& alg, const ClopenTupleT<A>& f, int i, int j) {
  if (i < 1 || j < 1 || i > f.t.d || j > f.t.d) throw std::invalid_argument("index out of range");
  if (i == j) throw std::invalid_argument("skew metric diagonal is not exposed");
  if (i < j) return f.t.at(i, j);
  return alg.star(f.t.at(j, i));
}

// Componentwise image under an algebra morphism psi : A -> B. The image of
// a clopen tuple must stay clopen; a failure means psi is not a morphism.
template <class B, class A, class Fn>
ClopenTupleT<B> map_tuple(const B& dst, const A& src, Fn&& psi, const ClopenTupleT<A>& f) {
  (void)src;
  TupleT<B> r{f.t.d, {}};
  r.comp.reserve(f.t.comp.size());
  for (const auto& c : f.t.comp) r.comp.push_back(psi(c));
  if (auto v = clopen_violation(dst, r))
    throw std::invalid_argument("morphism contract violation: image not clopen at triple " +
                                detail::triple_msg(*v));
  return ClopenTupleT<B>{std::move(r)};
}

template <class A>
TupleT<A> random_tuple(const A& alg, int d, Rng& rng) {
  TupleT<A> r = bottom_tuple(alg, d);
  for (auto& c : r.comp) c = alg.sample(rng);
  return r;
}

}  // namespace qlat
