#include <doctest.h>

#include "qlat/irreducibles.hpp"

using namespace qlat;

namespace {

const StepAlgebra alg;
const Rat half(1, 2), third(1, 3);

std::vector<Point> grid_points(int d) {
  // all points with coordinates in {0, 1/2, 1}
  const std::vector<Rat> g = {Rat(0), half, Rat(1)};
  std::vector<Point> out;
  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  while (true) {
    Point p;
    for (size_t i : idx) p.push_back(g[i]);
    out.push_back(p);
    int c = d - 1;
    while (c >= 0 && ++idx[static_cast<size_t>(c)] == g.size()) idx[static_cast<size_t>(c--)] = 0;
    if (c < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("windows of a point") {
  const PointWindow w = jirr_window({Rat(1), half, Rat(0)});
  CHECK(w.first == 2);
  CHECK(w.last == 2);
  CHECK(w.dim == 0);  // degenerate: nothing strictly between the ramps
  const PointWindow v = jirr_window({half, half});
  CHECK(v.first == 1);
  CHECK(v.last == 2);
  CHECK(v.dim == 1);
  const PointWindow top_w = jirr_window({Rat(1), Rat(1)});
  CHECK(top_w.first == 3);  // no coordinate below 1
  const PointWindow m = mirr_window({Rat(0), half, Rat(1)});
  CHECK(m.first == 2);
  CHECK(m.last == 2);
  CHECK(m.dim == 0);
  CHECK(mirr_window({half, half}).dim == 1);
}

TEST_CASE("tuples attached to a point") {
  const Point p = {half, half, half};
  const auto e = e_point(alg, p);
  CHECK(e.t.at(1, 2) == one_step(half, half));
  CHECK(e.t.at(1, 3) == one_step(half, half));
  const auto g = g_point(alg, p);
  CHECK(g.t.at(1, 2) == one_step(Rat(0), half));
  const auto f = f_point(alg, p);
  CHECK(f.t.at(2, 3) == one_step(half, Rat(1)));
  const auto m = m_point(alg, p);
  CHECK(m.t.at(1, 2) == step_join(one_step(Rat(0), half), one_step(half, Rat(1))));
  CHECK(is_clopen(alg, m.t));
  // m is the pointwise join of its lower and upper halves, and this
  // agrees with the join taken in the lattice of clopen tuples.
  const auto joined = ld_join(alg, g, f);
  CHECK(tuple_equal(alg, m.t, joined.t));
}

TEST_CASE("order between irreducibles matches the order of their tuples") {
  for (const Point& r : grid_points(3)) {
    if (jirr_window(r).dim <= 0) continue;
    const auto er = e_point(alg, r);
    for (const Point& p : grid_points(3)) {
      CHECK(jirr_leq(r, p) == tuple_leq(alg, er.t, e_point(alg, p).t));
    }
  }
  CHECK_THROWS_AS(jirr_leq({Rat(1), Rat(0)}, {half, half}), std::logic_error);
}

TEST_CASE("membership of an irreducible in a cube") {
  const Point lo = {Rat(0), Rat(0), half};
  const Point hi = {half, Rat(1), Rat(1)};
  const auto box = cube(alg, lo, hi);
  CHECK(is_clopen(alg, box.t));
  for (const Point& r : grid_points(3)) {
    if (jirr_window(r).dim <= 0) continue;
    CHECK(jirr_in_cube(r, lo, hi) == tuple_leq(alg, e_point(alg, r).t, box.t));
  }
  CHECK_THROWS_AS(cube(alg, hi, lo), std::invalid_argument);
}

TEST_CASE("decomposition into join irreducibles is exact") {
  SUBCASE("a single generator decomposes into itself") {
    const Point q = {half, third, Rat(2, 3)};
    const auto points = jirr_decomposition(alg, e_point(alg, q));
    bool found = false;
    for (const Point& r : points) found |= (r == q);
    CHECK(found);
    const auto back = join_of_points(alg, 3, points);
    CHECK(tuple_equal(alg, back.t, e_point(alg, q).t));
  }
  SUBCASE("random clopen tuples reconstruct from either decomposition") {
    Rng rng(kDefaultSeed);
    for (int d = 3; d <= 4; ++d)
      for (int k = 0; k < 25; ++k) {
        const auto f = random_clopen(alg, d, rng);
        const auto js = jirr_decomposition(alg, f);
        CHECK(tuple_equal(alg, join_of_points(alg, d, js).t, f.t));
        const auto ms = mirr_decomposition(alg, f);
        CHECK(tuple_equal(alg, meet_of_points(alg, d, ms).t, f.t));
      }
  }
  SUBCASE("decomposition points are sorted and witness the order") {
    Rng rng(5);
    const auto f = random_clopen(alg, 3, rng);
    const auto g = random_clopen(alg, 3, rng);
    const bool fg = tuple_leq(alg, f.t, g.t);
    // f <= g exactly when every irreducible below f is below g
    bool all_below = true;
    for (const Point& r : jirr_decomposition(alg, f))
      all_below &= tuple_leq(alg, e_point(alg, r).t, g.t);
    CHECK(fg == all_below);
  }
}

TEST_CASE("the involution sends join irreducibles to meet irreducibles") {
  const Point p = {half, third};
  const auto e = e_point(alg, p);
  const auto s = clopen_star(alg, e);
  // reversal of the coordinates of p names the meet irreducible
  const auto m = m_point(alg, reverse_point(p));
  CHECK(tuple_equal(alg, s.t, m.t));
}

TEST_CASE("random generators are well formed") {
  Rng rng(77);
  for (int k = 0; k < 40; ++k) {
    const Point p = random_point(alg, 4, rng);
    CHECK(p.size() == 4);
    for (const Rat& c : p) CHECK(in_unit_interval(c));
    const auto f = random_clopen(alg, 4, rng);
    CHECK(is_clopen(alg, f.t));
  }
}
