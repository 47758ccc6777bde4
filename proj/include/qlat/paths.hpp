#pragma once

// Clopen tuples over the step-function algebra as monotone lattice paths in
// [0,1]^d. A tuple carves out the region C_f of points x with
// ext(f,i,j)(x_i) <= x_j for every ordered pair; f is clopen exactly when
// that region is a maximal chain, and the staircase below is that chain's
// vertex list.

#include "qlat/json_io.hpp"
#include "qlat/ld.hpp"
#include "qlat/step_fn.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

using Point = std::vector<Rat>;

// Component in direction i -> j for any i != j; the reverse direction of a
// stored component is its involution.
inline StepFn path_ext(const TupleT<StepAlgebra>& f, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > f.d || j > f.d)
    throw std::invalid_argument("path component needs distinct coordinates in range");
  return i < j ? f.at(i, j) : step_star(f.at(j, i));
}

inline bool path_contains(const TupleT<StepAlgebra>& f, const Point& p) {
  if (static_cast<int>(p.size()) != f.d)
    throw std::invalid_argument("point dimension does not match tuple");
  for (const Rat& c : p) require_unit(c, "point coordinate");
  for (int i = 1; i <= f.d; ++i)
    for (int j = 1; j <= f.d; ++j) {
      if (i == j) continue;
      if (step_eval(path_ext(f, i, j), p[static_cast<size_t>(i - 1)]) > p[static_cast<size_t>(j - 1)])
        return false;
    }
  return true;
}

inline bool path_contains(const ClopenTupleT<StepAlgebra>& f, const Point& p) {
  return path_contains(f.t, p);
}

// The unique point of the chain whose coordinate i0 equals x0 and whose
// other coordinates are as small as possible.
inline Point path_point(const ClopenTupleT<StepAlgebra>& f, int i0, const Rat& x0) {
  if (i0 < 1 || i0 > f.t.d) throw std::invalid_argument("coordinate index out of range");
  require_unit(x0, "path coordinate");
  Point p(static_cast<size_t>(f.t.d));
  for (int j = 1; j <= f.t.d; ++j)
    p[static_cast<size_t>(j - 1)] = (j == i0) ? x0 : step_eval(path_ext(f.t, i0, j), x0);
  return p;
}

struct Staircase {
  int d = 1;
  std::vector<Point> vertices;  // from the all-zeros corner to the all-ones corner

  friend bool operator==(const Staircase&, const Staircase&) = default;
};

inline Staircase make_staircase(int d, std::vector<Point> vertices) {
  if (d < 1) throw std::invalid_argument("staircase needs d >= 1");
  if (vertices.size() < 2) throw std::invalid_argument("staircase needs at least two vertices");
  for (const Point& v : vertices) {
    if (static_cast<int>(v.size()) != d)
      throw std::invalid_argument("staircase vertex has wrong dimension");
    for (const Rat& c : v) require_unit(c, "staircase coordinate");
  }
  for (const Rat& c : vertices.front())
    if (c != 0) throw std::invalid_argument("staircase must start at the origin");
  for (const Rat& c : vertices.back())
    if (c != 1) throw std::invalid_argument("staircase must end at the all-ones corner");
  for (size_t t = 0; t + 1 < vertices.size(); ++t) {
    int moved = -1;
    for (int i = 0; i < d; ++i) {
      const auto& a = vertices[t][static_cast<size_t>(i)];
      const auto& b = vertices[t + 1][static_cast<size_t>(i)];
      if (a == b) continue;
      if (b < a) throw std::invalid_argument("staircase coordinates must not decrease");
      if (moved >= 0) throw std::invalid_argument("staircase steps must move one coordinate at a time");
      moved = i;
    }
    if (moved < 0) throw std::invalid_argument("staircase has a repeated vertex");
  }
  return Staircase{d, std::move(vertices)};
}

// Walks the chain from the origin. At each vertex exactly one coordinate has
// room to grow; its ceiling is the largest value that keeps every
// constraint against the frozen coordinates satisfied.
inline Staircase tuple_to_staircase(const ClopenTupleT<StepAlgebra>& f) {
  const int d = f.t.d;
  std::vector<Point> verts;
  Point v(static_cast<size_t>(d), Rat(0));
  verts.push_back(v);

  long long total_steps = 2;
  for (const StepFn& g : f.t.comp) total_steps += 2 * static_cast<long long>(g.steps.size()) + 2;
  const long long cap = 4 + 2 * static_cast<long long>(d) * total_steps;

  for (long long iter = 0; iter < cap; ++iter) {
    bool at_top = true;
    for (const Rat& c : v)
      if (c != 1) { at_top = false; break; }
    if (at_top) return Staircase{d, std::move(verts)};

    int grow = -1;
    Rat ceiling;
    for (int i = 1; i <= d; ++i) {
      if (v[static_cast<size_t>(i - 1)] == 1) continue;
      Rat h = 1;
      for (int j = 1; j <= d; ++j) {
        if (j == i) continue;
        const Rat hj = step_right_adjoint_at(path_ext(f.t, i, j), v[static_cast<size_t>(j - 1)]);
        if (hj < h) h = hj;
      }
      if (h > v[static_cast<size_t>(i - 1)]) {
        if (grow >= 0) throw std::logic_error("region is not a chain: two coordinates can grow");
        grow = i;
        ceiling = h;
      }
    }
    if (grow < 0) throw std::logic_error("region is not a maximal chain: walk stalled");
    v[static_cast<size_t>(grow - 1)] = ceiling;
    verts.push_back(v);
  }
  throw std::logic_error("staircase walk did not terminate");
}

// Inverse of the walk: every step that moves coordinate i, taken at a vertex
// with current j-th coordinate c, forces f_ij to jump to at least c past the
// start of that step.
inline ClopenTupleT<StepAlgebra> staircase_to_tuple(const StepAlgebra& alg, const Staircase& raw) {
  const Staircase s = make_staircase(raw.d, raw.vertices);  // reject hand-built junk
  TupleT<StepAlgebra> f = bottom_tuple(alg, s.d);
  for (size_t t = 0; t + 1 < s.vertices.size(); ++t) {
    const Point& v = s.vertices[t];
    int moved = 0;
    for (int i = 1; i <= s.d; ++i)
      if (v[static_cast<size_t>(i - 1)] != s.vertices[t + 1][static_cast<size_t>(i - 1)]) { moved = i; break; }
    for (int j = moved + 1; j <= s.d; ++j) {
      StepFn gen = one_step(v[static_cast<size_t>(moved - 1)], v[static_cast<size_t>(j - 1)]);
      f.at(moved, j) = step_join(f.at(moved, j), gen);
    }
  }
  return to_clopen(alg, std::move(f));
}

inline Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const Rat& c : p) a.push_back(rat_to_json(c));
  return a;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be a JSON array");
  Point p;
  for (const auto& c : j) p.push_back(rat_from_json(c));
  for (const Rat& c : p) require_unit(c, "point coordinate");
  return p;
}

inline Json staircase_to_json(const Staircase& s) {
  Json j;
  j["d"] = s.d;
  Json verts = Json::array();
  for (const Point& v : s.vertices) verts.push_back(point_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

inline Staircase staircase_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("vertices"))
    throw std::invalid_argument("staircase JSON needs d and vertices");
  const int d = j.at("d").get<int>();
  std::vector<Point> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(point_from_json(v));
  return make_staircase(d, std::move(verts));
}

}  // namespace qlat
