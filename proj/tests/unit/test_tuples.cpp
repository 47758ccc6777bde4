#include <doctest.h>

#include "qlat/embeddings.hpp"
#include "qlat/ld.hpp"

using namespace qlat;

namespace {

ChainFn cf(int n, std::vector<int> v) { return ChainFn(n, std::move(v)); }

TupleT<FiniteAlgebra> btuple(const FiniteAlgebra& alg, int d, std::vector<int> comp) {
  TupleT<FiniteAlgebra> f = bottom_tuple(alg, d);
  f.comp = std::move(comp);
  return f;
}

}  // namespace

TEST_CASE("pair indexing walks the strict upper triangle by rows") {
  CHECK(pair_count(2) == 1);
  CHECK(pair_count(4) == 6);
  CHECK(pair_index(1, 2, 4) == 0);
  CHECK(pair_index(1, 4, 4) == 2);
  CHECK(pair_index(2, 3, 4) == 3);
  CHECK(pair_index(3, 4, 4) == 5);
  CHECK_THROWS_AS(pair_index(2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(pair_index(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_tuple_of(bool2(), 1, 0), std::invalid_argument);
}

TEST_CASE("closed and open violations name the witnessing triple") {
  const FiniteAlgebra B = bool2();
  // f(1,3) = 0 but f(1,2) tensor f(2,3) = 1: fails the closure inequality.
  const auto f = btuple(B, 3, {1, 0, 1});
  REQUIRE(closed_violation(B, f).has_value());
  CHECK(*closed_violation(B, f) == std::array<int, 3>{1, 2, 3});
  CHECK(!is_closed(B, f));
  // the dual failure: f(1,3) = 1 but f(1,2) oplus f(2,3) = 0
  const auto g = btuple(B, 3, {0, 1, 0});
  REQUIRE(open_violation(B, g).has_value());
  CHECK(!is_open(B, g));
  CHECK(is_clopen(B, bottom_tuple(B, 3)));
  CHECK(is_clopen(B, top_tuple(B, 3)));
}

TEST_CASE("closure agrees with the subdivision oracle") {
  std::vector<FiniteAlgebra> algs = {bool2(), sugihara3()};
  Rng rng(kDefaultSeed);
  for (const auto& alg : algs)
    for (int d = 3; d <= 5; ++d)
      for (int k = 0; k < 60; ++k) {
        const auto f = random_tuple(alg, d, rng);
        const auto c = closure(alg, f);
        CHECK(tuple_equal(alg, c, closure_by_subdivisions(alg, f)));
        CHECK(is_closed(alg, c));
        CHECK(tuple_leq(alg, f, c));
        const auto i = interior(alg, f);
        CHECK(tuple_equal(alg, i, interior_by_subdivisions(alg, f)));
        CHECK(is_open(alg, i));
        CHECK(tuple_leq(alg, i, f));
      }
  const ChainAlgebra C2(2);
  for (int d = 3; d <= 4; ++d)
    for (int k = 0; k < 40; ++k) {
      const auto f = random_tuple(C2, d, rng);
      CHECK(tuple_equal(C2, closure(C2, f), closure_by_subdivisions(C2, f)));
      CHECK(tuple_equal(C2, interior(C2, f), interior_by_subdivisions(C2, f)));
    }
}

TEST_CASE("closure and interior are monotone idempotent projections") {
  const FiniteAlgebra S = sugihara3();
  Rng rng(42);
  for (int k = 0; k < 80; ++k) {
    const auto f = random_tuple(S, 4, rng);
    const auto g = tuple_join(S, f, random_tuple(S, 4, rng));  // f <= g
    CHECK(tuple_leq(S, closure(S, f), closure(S, g)));
    CHECK(tuple_leq(S, interior(S, f), interior(S, g)));
    CHECK(tuple_equal(S, closure(S, closure(S, f)), closure(S, f)));
    CHECK(tuple_equal(S, interior(S, interior(S, f)), interior(S, f)));
  }
}

TEST_CASE("clopen conversion validates") {
  const FiniteAlgebra B = bool2();
  CHECK_THROWS_AS(to_clopen(B, btuple(B, 3, {1, 0, 1})), std::invalid_argument);
  CHECK_NOTHROW(to_clopen(B, bottom_tuple(B, 3)));
  CHECK_THROWS_AS(expect_clopen(B, btuple(B, 3, {1, 0, 1}), "test"), std::logic_error);
}

TEST_CASE("lattice structure on clopen tuples") {
  // Join of clopens needs a closure pass; meet an interior pass. The results
  // must be clopen and must be the bounds relative to all clopen tuples.
  const ChainAlgebra C2(2);
  Rng rng(7);
  for (int k = 0; k < 60; ++k) {
    const auto f = to_clopen(C2, closure(C2, interior(C2, closure(C2, random_tuple(C2, 3, rng)))));
    const auto g = to_clopen(C2, closure(C2, interior(C2, closure(C2, random_tuple(C2, 3, rng)))));
    const auto j = ld_join(C2, f, g);
    const auto m = ld_meet(C2, f, g);
    CHECK(is_clopen(C2, j.t));
    CHECK(is_clopen(C2, m.t));
    CHECK(tuple_leq(C2, f.t, j.t));
    CHECK(tuple_leq(C2, g.t, j.t));
    CHECK(tuple_leq(C2, m.t, f.t));
    CHECK(tuple_leq(C2, m.t, g.t));
    CHECK(tuple_equal(C2, ld_join_many(C2, 3, {f, g, m}).t, j.t));
    CHECK(tuple_equal(C2, ld_meet_many(C2, 3, {f, g, j}).t, m.t));
  }
}

TEST_CASE("closure of a clopen join stays below any clopen upper bound") {
  const FiniteAlgebra S = sugihara3();
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const auto raw1 = random_tuple(S, 3, rng);
    const auto raw2 = random_tuple(S, 3, rng);
    const auto f = to_clopen(S, closure(S, interior(S, closure(S, raw1))));
    const auto g = to_clopen(S, closure(S, interior(S, closure(S, raw2))));
    const auto ub = ld_join(S, ld_join(S, f, g), to_clopen(S, top_tuple(S, 3)));
    CHECK(tuple_leq(S, ld_join(S, f, g).t, ub.t));
  }
}

TEST_CASE("componentwise involution reverses tuples") {
  const ChainAlgebra C2(2);
  // star swaps the endpoints of every pair, so (f*)(i,j) = star(f(d+1-j, d+1-i))
  TupleT<ChainAlgebra> f = bottom_tuple(C2, 3);
  f.at(1, 2) = cf(2, {0, 1});
  f.at(1, 3) = cf(2, {0, 0});
  f.at(2, 3) = cf(2, {1, 2});
  const auto s = tuple_star(C2, f);
  CHECK(s.at(1, 2) == chain_star(f.at(2, 3)));
  CHECK(s.at(1, 3) == chain_star(f.at(1, 3)));
  CHECK(s.at(2, 3) == chain_star(f.at(1, 2)));
  const auto ss = tuple_star(C2, s);
  CHECK(tuple_equal(C2, ss, f));

  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto g = random_tuple(C2, 4, rng);
    CHECK(tuple_equal(C2, tuple_star(C2, tuple_star(C2, g)), g));
    // involution exchanges closed and open
    CHECK(is_closed(C2, g) == is_open(C2, tuple_star(C2, g)));
  }
}

TEST_CASE("triangle inequality of the skew distances") {
  const ChainAlgebra C2(2);
  Rng rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto f = to_clopen(C2, closure(C2, interior(C2, closure(C2, random_tuple(C2, 4, rng)))));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int l = 1; l <= 4; ++l) {
          if (i == j || j == l || i == l) continue;
          const auto lhs = skew_metric(C2, f, i, l);
          const auto rhs = chain_oplus(skew_metric(C2, f, i, j), skew_metric(C2, f, j, l));
          CHECK(chain_leq(lhs, rhs));
        }
    CHECK_THROWS_AS(skew_metric(C2, f, 2, 2), std::invalid_argument);
  }
}

TEST_CASE("componentwise transport along a refinement is a morphism") {
  const ChainAlgebra C1(1), C2(2);
  const ChainEmbedding e = refine_embedding(1, 2);
  auto psi = [&](const ChainFn& f) { return lift_to_chain(e, f); };
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    const auto f = to_clopen(C1, interior(C1, closure(C1, random_tuple(C1, 3, rng))));
    const auto g = map_tuple(C2, C1, psi, f);  // throws if the image is not clopen
    CHECK(is_clopen(C2, g.t));
    // the transported tuple doubles every component pointwise
    CHECK(g.t.at(1, 2) == lift_to_chain(e, f.t.at(1, 2)));
  }
}
