#include <doctest.h>

#include "qlat/irreducibles.hpp"
#include "qlat/paths.hpp"

using namespace qlat;

namespace {

const StepAlgebra alg;
const Rat half(1, 2);

Point pt(std::vector<Rat> v) { return v; }

ClopenTupleT<StepAlgebra> hook() {
  TupleT<StepAlgebra> f = bottom_tuple(alg, 2);
  f.at(1, 2) = one_step(half, half);
  return to_clopen(alg, std::move(f));
}

}  // namespace

TEST_CASE("staircase validation") {
  CHECK_NOTHROW(make_staircase(
      2, {pt({Rat(0), Rat(0)}), pt({Rat(1), Rat(0)}), pt({Rat(1), Rat(1)})}));
  // must start at the origin
  CHECK_THROWS_AS(make_staircase(2, {pt({half, Rat(0)}), pt({Rat(1), Rat(0)}),
                                     pt({Rat(1), Rat(1)})}),
                  std::invalid_argument);
  // must end at the opposite corner
  CHECK_THROWS_AS(make_staircase(2, {pt({Rat(0), Rat(0)}), pt({Rat(1), Rat(0)})}),
                  std::invalid_argument);
  // each move changes exactly one coordinate, strictly upward
  CHECK_THROWS_AS(make_staircase(2, {pt({Rat(0), Rat(0)}), pt({Rat(1), Rat(1)})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_staircase(2, {pt({Rat(0), Rat(0)}), pt({Rat(0), Rat(0)}),
                                     pt({Rat(1), Rat(1)})}),
                  std::invalid_argument);
}

TEST_CASE("the hook path and its tuple") {
  const Staircase s = tuple_to_staircase(hook());
  REQUIRE(s.vertices.size() == 5);
  CHECK(s.vertices[1] == pt({half, Rat(0)}));
  CHECK(s.vertices[2] == pt({half, half}));
  CHECK(s.vertices[3] == pt({Rat(1), half}));
  const auto back = staircase_to_tuple(alg, s);
  CHECK(tuple_equal(alg, back.t, hook().t));
}

TEST_CASE("membership in the region below a path") {
  const auto f = hook();
  CHECK(path_contains(f, pt({Rat(1, 4), Rat(0)})));
  CHECK(!path_contains(f, pt({Rat(3, 4), Rat(0)})));   // above the jump
  CHECK(path_contains(f, pt({Rat(3, 4), half})));
  CHECK(path_contains(f, pt({Rat(0), Rat(0)})));
  CHECK(path_contains(f, pt({Rat(1), Rat(1)})));
  CHECK(!path_contains(f, pt({Rat(1), Rat(1, 4)})));
}

TEST_CASE("points of the path through a given coordinate") {
  CHECK(path_point(hook(), 1, Rat(3, 4)) == pt({Rat(3, 4), half}));
  CHECK(path_point(hook(), 2, Rat(1, 4)) == pt({half, Rat(1, 4)}));
  const Point p = {half, half, half};
  const auto e = e_point(alg, p);
  CHECK(path_point(e, 1, Rat(3, 4)) == pt({Rat(3, 4), half, half}));
}

TEST_CASE("extension to both coordinate orders") {
  const auto f = hook();
  CHECK(path_ext(f.t, 1, 2) == one_step(half, half));
  CHECK(path_ext(f.t, 2, 1) == step_star(one_step(half, half)));
  CHECK_THROWS_AS(path_ext(f.t, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(path_ext(f.t, 0, 2), std::invalid_argument);
}

TEST_CASE("a path of several segments per coordinate round trips") {
  // two rises in each coordinate, interleaved
  const Staircase s = make_staircase(
      2, {pt({Rat(0), Rat(0)}), pt({Rat(1, 3), Rat(0)}), pt({Rat(1, 3), Rat(1, 4)}),
          pt({Rat(2, 3), Rat(1, 4)}), pt({Rat(2, 3), Rat(1)}), pt({Rat(1), Rat(1)})});
  const auto f = staircase_to_tuple(alg, s);
  const Staircase s2 = tuple_to_staircase(f);
  CHECK(s2.vertices == s.vertices);
  const auto f2 = staircase_to_tuple(alg, s2);
  CHECK(tuple_equal(alg, f.t, f2.t));
}

TEST_CASE("three dimensional walks visit the region in chain order") {
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 25; ++k) {
    const auto f = random_clopen(alg, 3, rng);
    const Staircase s = tuple_to_staircase(f);
    const auto back = staircase_to_tuple(alg, s);
    CHECK(tuple_equal(alg, back.t, f.t));
    // every vertex of the walk lies in the region of the tuple
    for (const Point& v : s.vertices) CHECK(path_contains(f, v));
  }
}

TEST_CASE("an inconsistent tuple is rejected by the walk") {
  // built by hand around the validation: the walk gets stuck strictly
  // inside the cube and reports it
  TupleT<StepAlgebra> t = bottom_tuple(alg, 3);
  t.at(1, 2) = one_step(half, half);
  t.at(1, 3) = step_bottom();
  t.at(2, 3) = step_top();
  REQUIRE(!is_clopen(alg, t));
  const ClopenTupleT<StepAlgebra> forged{t};
  CHECK_THROWS_AS(tuple_to_staircase(forged), std::logic_error);
}

TEST_CASE("staircase serialization round trip") {
  const Staircase s = tuple_to_staircase(hook());
  const Json j = staircase_to_json(s);
  CHECK(j["d"] == 2);
  const Staircase s2 = staircase_from_json(j);
  CHECK(s2.vertices == s.vertices);
  const Point p = {Rat(1, 3), Rat(1)};
  CHECK(point_from_json(point_to_json(p)) == p);
}
