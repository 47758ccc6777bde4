#pragma once

// Join- and meet-irreducible clopen tuples over the step-function algebra.
//
// A point p of [0,1]^d induces the tuple e_p with components e<p_i,p_j>;
// these are exactly the join-irreducible elements (when proper), and their
// order has a coordinate description. Dually m_p, built from two one-sided
// families G_p and F_p, gives the meet-irreducibles. Every clopen tuple is
// recovered exactly as a finite join of e_p's (and a finite meet of m_p's),
// scanning only component breakpoints.

#include "qlat/ld.hpp"
#include "qlat/paths.hpp"
#include "qlat/step_fn.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace qlat {

// Support window of e_p: first coordinate below 1, last coordinate above 0.
// e_p is a proper join-irreducible iff dim > 0; otherwise it is the bottom
// tuple. first = d+1 / last = 0 encode empty windows.
struct PointWindow {
  int first = 0;
  int last = 0;
  int dim = 0;
};

inline void require_point(const Point& p) {
  if (p.empty()) throw std::invalid_argument("point must have at least one coordinate");
  for (const Rat& c : p) require_unit(c, "point coordinate");
}

inline PointWindow jirr_window(const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  int first = d + 1, last = 0;
  for (int i = 1; i <= d; ++i)
    if (p[static_cast<size_t>(i - 1)] < 1) { first = i; break; }
  for (int j = d; j >= 1; --j)
    if (p[static_cast<size_t>(j - 1)] > 0) { last = j; break; }
  return PointWindow{first, last, last - first};
}

// Dual window, governing m_p: first coordinate above 0, last below 1.
inline PointWindow mirr_window(const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  int first = d + 1, last = 0;
  for (int i = 1; i <= d; ++i)
    if (p[static_cast<size_t>(i - 1)] > 0) { first = i; break; }
  for (int j = d; j >= 1; --j)
    if (p[static_cast<size_t>(j - 1)] < 1) { last = j; break; }
  return PointWindow{first, last, last - first};
}

inline Point reverse_point(Point p) {
  std::reverse(p.begin(), p.end());
  return p;
}

inline ClopenTupleT<StepAlgebra> e_point(const StepAlgebra& alg, const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  TupleT<StepAlgebra> f = bottom_tuple(alg, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      f.at(i, j) = one_step(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(j - 1)]);
  return to_clopen(alg, std::move(f));
}

// Componentwise m<p_i,p_j> = e<0,p_j> v e<p_i,1>. Same tuple as
// ld_join(g_point, f_point); tests recompute it that way.
inline ClopenTupleT<StepAlgebra> m_point(const StepAlgebra& alg, const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  TupleT<StepAlgebra> f = bottom_tuple(alg, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      f.at(i, j) = step_join(one_step(Rat(0), p[static_cast<size_t>(j - 1)]),
                             one_step(p[static_cast<size_t>(i - 1)], Rat(1)));
  return to_clopen(alg, std::move(f));
}

inline ClopenTupleT<StepAlgebra> g_point(const StepAlgebra& alg, const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  TupleT<StepAlgebra> f = bottom_tuple(alg, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      f.at(i, j) = one_step(Rat(0), p[static_cast<size_t>(j - 1)]);
  return to_clopen(alg, std::move(f));
}

inline ClopenTupleT<StepAlgebra> f_point(const StepAlgebra& alg, const Point& p) {
  require_point(p);
  const int d = static_cast<int>(p.size());
  TupleT<StepAlgebra> f = bottom_tuple(alg, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      f.at(i, j) = one_step(p[static_cast<size_t>(i - 1)], Rat(1));
  return to_clopen(alg, std::move(f));
}

// Coordinate test for e_r <= e_p, without building either tuple. Requires
// e_r proper; inside r's window the points must agree, at the ends only an
// inequality is needed.
inline bool jirr_leq(const Point& r, const Point& p) {
  require_point(r);
  require_point(p);
  if (r.size() != p.size()) throw std::invalid_argument("points must have equal dimension");
  const PointWindow w = jirr_window(r);
  if (w.dim <= 0) throw std::invalid_argument("order test needs a proper join-irreducible on the left");
  if (p[static_cast<size_t>(w.first - 1)] > r[static_cast<size_t>(w.first - 1)]) return false;
  if (r[static_cast<size_t>(w.last - 1)] > p[static_cast<size_t>(w.last - 1)]) return false;
  for (int i = w.first + 1; i < w.last; ++i)
    if (r[static_cast<size_t>(i - 1)] != p[static_cast<size_t>(i - 1)]) return false;
  return true;
}

// Join of all e_r with r between p and q; componentwise it collapses to
// e<p_i,q_j>.
inline ClopenTupleT<StepAlgebra> cube(const StepAlgebra& alg, const Point& p, const Point& q) {
  require_point(p);
  require_point(q);
  if (p.size() != q.size()) throw std::invalid_argument("cube corners must have equal dimension");
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] > q[i]) throw std::invalid_argument("cube needs lower corner <= upper corner");
  const int d = static_cast<int>(p.size());
  TupleT<StepAlgebra> f = bottom_tuple(alg, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      f.at(i, j) = one_step(p[static_cast<size_t>(i - 1)], q[static_cast<size_t>(j - 1)]);
  return to_clopen(alg, std::move(f));
}

// Coordinate test for e_r <= cube(p, q), r proper: window ends clear the
// corners, interior coordinates lie inside the box.
inline bool jirr_in_cube(const Point& r, const Point& p, const Point& q) {
  require_point(r);
  require_point(p);
  require_point(q);
  if (r.size() != p.size() || p.size() != q.size())
    throw std::invalid_argument("points must have equal dimension");
  const PointWindow w = jirr_window(r);
  if (w.dim <= 0) throw std::invalid_argument("membership test needs a proper join-irreducible");
  if (p[static_cast<size_t>(w.first - 1)] > r[static_cast<size_t>(w.first - 1)]) return false;
  if (r[static_cast<size_t>(w.last - 1)] > q[static_cast<size_t>(w.last - 1)]) return false;
  for (int i = w.first + 1; i < w.last; ++i) {
    if (r[static_cast<size_t>(i - 1)] < p[static_cast<size_t>(i - 1)]) return false;
    if (r[static_cast<size_t>(i - 1)] > q[static_cast<size_t>(i - 1)]) return false;
  }
  return true;
}

inline bool point_less(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

// For every component (m, M) and every jump abscissa x of f_{m,M} (plus 0),
// the point with x at position m, the right limits of f_{m,i} at x in
// between, ones before and zeros after, names a join-irreducible below f.
// Joining them all recovers f exactly: the (m,M)-scan alone already yields
// every step of f_{m,M}. Degenerate points (bottom tuples) are dropped.
inline std::vector<Point> jirr_decomposition(const StepAlgebra& alg, const ClopenTupleT<StepAlgebra>& f) {
  const int d = f.t.d;
  std::vector<Point> out;
  for (int m = 1; m <= d; ++m)
    for (int M = m + 1; M <= d; ++M) {
      std::vector<Rat> xs{Rat(0)};
      for (const auto& s : f.t.at(m, M).steps) xs.push_back(s.first);
      for (const Rat& x : xs) {
        Point p(static_cast<size_t>(d));
        for (int i = 1; i < m; ++i) p[static_cast<size_t>(i - 1)] = 1;
        p[static_cast<size_t>(m - 1)] = x;
        for (int i = m + 1; i <= M; ++i)
          p[static_cast<size_t>(i - 1)] = step_eval_right(f.t.at(m, i), x);
        for (int i = M + 1; i <= d; ++i) p[static_cast<size_t>(i - 1)] = 0;
        if (jirr_window(p).dim > 0) out.push_back(std::move(p));
      }
    }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  (void)alg;
  return out;
}

// Dual scan through the involution: f is the meet of m_p over the reversals
// of the points decomposing star(f).
inline std::vector<Point> mirr_decomposition(const StepAlgebra& alg, const ClopenTupleT<StepAlgebra>& f) {
  std::vector<Point> out;
  for (const Point& q : jirr_decomposition(alg, clopen_star(alg, f)))
    out.push_back(reverse_point(q));
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline ClopenTupleT<StepAlgebra> join_of_points(const StepAlgebra& alg, int d,
                                                const std::vector<Point>& ps) {
  std::vector<ClopenTupleT<StepAlgebra>> parts;
  parts.reserve(ps.size());
  for (const Point& p : ps) parts.push_back(e_point(alg, p));
  return ld_join_many(alg, d, parts);
}

inline ClopenTupleT<StepAlgebra> meet_of_points(const StepAlgebra& alg, int d,
                                                const std::vector<Point>& ps) {
  std::vector<ClopenTupleT<StepAlgebra>> parts;
  parts.reserve(ps.size());
  for (const Point& p : ps) parts.push_back(m_point(alg, p));
  return ld_meet_many(alg, d, parts);
}

inline Point random_point(const StepAlgebra& alg, int d, Rng& rng) {
  Point p(static_cast<size_t>(d));
  for (auto& c : p) c = alg.sample_rat(rng);
  return p;
}

// Random clopen tuple assembled from a handful of irreducibles and cubes;
// the pieces are clopen, so only one closure pass runs inside ld_join_many.
inline ClopenTupleT<StepAlgebra> random_clopen(const StepAlgebra& alg, int d, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<ClopenTupleT<StepAlgebra>> parts;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    if (kind(rng) == 0) {
      Point lo = random_point(alg, d, rng);
      Point hi = random_point(alg, d, rng);
      for (size_t i = 0; i < lo.size(); ++i)
        if (hi[i] < lo[i]) std::swap(lo[i], hi[i]);
      parts.push_back(cube(alg, lo, hi));
    } else {
      parts.push_back(e_point(alg, random_point(alg, d, rng)));
    }
  }
  return ld_join_many(alg, d, parts);
}

}  // namespace qlat
