#include <doctest.h>

#include "qlat/chain_fn.hpp"

using namespace qlat;

namespace {
ChainFn cf(int n, std::vector<int> v) { return ChainFn(n, std::move(v)); }
}  // namespace

TEST_CASE("monotone maps on a finite chain validate") {
  CHECK_NOTHROW(cf(2, {0, 2}));
  CHECK_THROWS_AS(cf(2, {2, 0}), std::invalid_argument);   // not monotone
  CHECK_THROWS_AS(cf(2, {0, 3}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(cf(2, {0}), std::invalid_argument);      // wrong length
  const ChainFn f = cf(3, {1, 1, 2});
  CHECK(f(0) == 0);  // every map fixes the bottom
  CHECK(f(1) == 1);
  CHECK(f(3) == 2);
}

TEST_CASE("counts of monotone maps fixing the endpoints of the order") {
  CHECK(chain_enumerate(1).size() == 2);
  CHECK(chain_enumerate(2).size() == 6);
  CHECK(chain_enumerate(3).size() == 20);
  CHECK_THROWS_AS(chain_enumerate(7), std::invalid_argument);
  CHECK_THROWS_AS(chain_enumerate(0), std::invalid_argument);
}

TEST_CASE("composition order of the tensor") {
  // f applied first, then g.
  const ChainFn f = cf(2, {0, 1});
  const ChainFn g = cf(2, {1, 2});
  const ChainFn fg = chain_tensor(f, g);
  CHECK(fg(1) == g(f(1)));
  CHECK(fg(2) == g(f(2)));
  CHECK(fg == cf(2, {0, 1}));
  CHECK(chain_tensor(g, f) == cf(2, {0, 1}));
}

TEST_CASE("involution on the two element chain of maps") {
  CHECK(chain_star(cf(2, {0, 1})) == cf(2, {1, 2}));
  CHECK(chain_star(cf(2, {2, 2})) == cf(2, {0, 0}));
  CHECK(chain_star(cf(2, {1, 1})) == cf(2, {0, 2}));
  CHECK(chain_zero(2) == cf(2, {0, 1}));
  CHECK(chain_zero(2) == chain_star(chain_identity(2)));
  for (const ChainFn& f : chain_enumerate(3)) CHECK(chain_star(chain_star(f)) == f);
}

TEST_CASE("additive composition is the involutive dual of the tensor") {
  for (const ChainFn& f : chain_enumerate(2))
    for (const ChainFn& g : chain_enumerate(2)) {
      CHECK(chain_oplus(f, g) ==
            chain_star(chain_tensor(chain_star(g), chain_star(f))));
    }
  // A point where the two compositions differ: idempotents below the identity.
  const ChainFn h = cf(2, {1, 1});
  CHECK(chain_oplus(h, h) == cf(2, {1, 1}));
  CHECK(chain_tensor(h, h) == cf(2, {1, 1}));
}

TEST_CASE("pointwise order, join and meet") {
  const ChainFn a = cf(2, {0, 1}), b = cf(2, {1, 1});
  CHECK(chain_leq(a, b));
  CHECK(!chain_leq(b, a));
  CHECK(chain_join(a, b) == b);
  CHECK(chain_meet(a, b) == a);
  CHECK(chain_leq(chain_bottom(2), chain_top(2)));
}

TEST_CASE("one sided limits of a chain map") {
  const ChainFn f = cf(3, {0, 2, 2});
  // value from the right: f(x+1), clamped at the top
  CHECK(chain_meetof(f, 0) == 0);
  CHECK(chain_meetof(f, 1) == 2);
  CHECK(chain_meetof(f, 3) == 3);
  // value from the left: f(x) itself at 0 is 0
  CHECK(chain_joinof(f, 1) == 0);
  CHECK(chain_joinof(f, 2) == 0);
  CHECK(chain_joinof(f, 3) == 2);
}
