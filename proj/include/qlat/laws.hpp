#pragma once

// Law checker for the algebra interface.
//
// Each law is a named predicate over a fixed number of elements. Finite
// carriers are checked exhaustively when |Q|^arity fits the budget; larger
// or infinite carriers are sampled pseudo-randomly with the seed recorded
// in the report, so a red run can be replayed bit for bit.

#include "qlat/algebra.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qlat {

inline constexpr std::uint32_t kDefaultSeed = 1729;

struct LawReport {
  std::string law;
  bool pass = true;
  std::vector<std::string> counterexample;  // shown elements, empty on pass
  long long cases_checked = 0;
  std::optional<std::uint32_t> seed;  // set when sampling was used
};

namespace detail {

template <class A>
struct Law {
  std::string name;
  int arity;
  // args has exactly `arity` elements
  std::function<bool(const A&, const std::vector<typename A::Elem>&)> holds;
};

template <class A>
LawReport run_law(const A& alg, const Law<A>& law, long long budget, std::uint32_t seed) {
  LawReport rep;
  rep.law = law.name;
  auto fail_with = [&](const std::vector<typename A::Elem>& args) {
    rep.pass = false;
    rep.counterexample.clear();
    for (const auto& a : args) rep.counterexample.push_back(alg.show(a));
    // A reported counterexample must re-fail deterministically.
    if (law.holds(alg, args)) throw std::logic_error("unstable law evaluation: " + law.name);
  };

  if constexpr (requires { alg.carrier(); }) {
    if (alg.finite()) {
      const auto carrier = alg.carrier();
      const long long m = static_cast<long long>(carrier.size());
      long long total = 1;
      bool overflow = false;
      for (int i = 0; i < law.arity; ++i) {
        total *= m;
        if (total > budget) { overflow = true; break; }
      }
      if (!overflow) {
        std::vector<size_t> idx(static_cast<size_t>(law.arity), 0);
        std::vector<typename A::Elem> args;
        while (true) {
          args.clear();
          for (size_t i : idx) args.push_back(carrier[i]);
          ++rep.cases_checked;
          if (!law.holds(alg, args)) { fail_with(args); return rep; }
          int pos = law.arity - 1;
          while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == carrier.size()) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++idx[static_cast<size_t>(pos)];
        }
        return rep;
      }
    }
  }

  rep.seed = seed;
  Rng rng(seed);
  std::vector<typename A::Elem> args;
  for (long long c = 0; c < budget; ++c) {
    args.clear();
    for (int i = 0; i < law.arity; ++i) args.push_back(alg.sample(rng));
    ++rep.cases_checked;
    if (!law.holds(alg, args)) { fail_with(args); return rep; }
  }
  return rep;
}

template <class A>
std::vector<Law<A>> lattice_laws() {
  using E = typename A::Elem;
  using Args = std::vector<E>;
  std::vector<Law<A>> L;
  auto add = [&](std::string name, int arity, auto pred) {
    L.push_back({std::move(name), arity, pred});
  };
  add("join-commutative", 2, [](const A& q, const Args& a) {
    return q.equal(q.join(a[0], a[1]), q.join(a[1], a[0]));
  });
  add("join-associative", 3, [](const A& q, const Args& a) {
    return q.equal(q.join(q.join(a[0], a[1]), a[2]), q.join(a[0], q.join(a[1], a[2])));
  });
  add("join-idempotent", 1, [](const A& q, const Args& a) {
    return q.equal(q.join(a[0], a[0]), a[0]);
  });
  add("meet-commutative", 2, [](const A& q, const Args& a) {
    return q.equal(q.meet(a[0], a[1]), q.meet(a[1], a[0]));
  });
  add("meet-associative", 3, [](const A& q, const Args& a) {
    return q.equal(q.meet(q.meet(a[0], a[1]), a[2]), q.meet(a[0], q.meet(a[1], a[2])));
  });
  add("meet-idempotent", 1, [](const A& q, const Args& a) {
    return q.equal(q.meet(a[0], a[0]), a[0]);
  });
  add("absorption", 2, [](const A& q, const Args& a) {
    return q.equal(q.join(a[0], q.meet(a[0], a[1])), a[0]) &&
           q.equal(q.meet(a[0], q.join(a[0], a[1])), a[0]);
  });
  add("order-agrees-with-join", 2, [](const A& q, const Args& a) {
    return q.leq(a[0], a[1]) == q.equal(q.join(a[0], a[1]), a[1]);
  });
  add("order-agrees-with-meet", 2, [](const A& q, const Args& a) {
    return q.leq(a[0], a[1]) == q.equal(q.meet(a[0], a[1]), a[0]);
  });
  add("bounds", 1, [](const A& q, const Args& a) {
    return q.leq(q.bottom(), a[0]) && q.leq(a[0], q.top());
  });
  return L;
}

template <class A>
std::vector<Law<A>> bisemigroup_laws(bool with_units) {
  using E = typename A::Elem;
  using Args = std::vector<E>;
  std::vector<Law<A>> L = lattice_laws<A>();
  auto add = [&](std::string name, int arity, auto pred) {
    L.push_back({std::move(name), arity, pred});
  };
  add("tensor-associative", 3, [](const A& q, const Args& a) {
    return q.equal(q.tensor(q.tensor(a[0], a[1]), a[2]), q.tensor(a[0], q.tensor(a[1], a[2])));
  });
  add("tensor-distributes-over-join-left", 3, [](const A& q, const Args& a) {
    return q.equal(q.tensor(q.join(a[0], a[1]), a[2]),
                   q.join(q.tensor(a[0], a[2]), q.tensor(a[1], a[2])));
  });
  add("tensor-distributes-over-join-right", 3, [](const A& q, const Args& a) {
    return q.equal(q.tensor(a[0], q.join(a[1], a[2])),
                   q.join(q.tensor(a[0], a[1]), q.tensor(a[0], a[2])));
  });
  add("oplus-associative", 3, [](const A& q, const Args& a) {
    return q.equal(q.oplus(q.oplus(a[0], a[1]), a[2]), q.oplus(a[0], q.oplus(a[1], a[2])));
  });
  add("oplus-distributes-over-meet-left", 3, [](const A& q, const Args& a) {
    return q.equal(q.oplus(q.meet(a[0], a[1]), a[2]),
                   q.meet(q.oplus(a[0], a[2]), q.oplus(a[1], a[2])));
  });
  add("oplus-distributes-over-meet-right", 3, [](const A& q, const Args& a) {
    return q.equal(q.oplus(a[0], q.meet(a[1], a[2])),
                   q.meet(q.oplus(a[0], a[1]), q.oplus(a[0], a[2])));
  });
  // Hemidistributive laws: tensor slides under oplus from either side,
  // in the 3-variable and 4-variable forms.
  add("hemidistributive-left", 3, [](const A& q, const Args& a) {
    return q.leq(q.tensor(a[0], q.oplus(a[1], a[2])), q.oplus(q.tensor(a[0], a[1]), a[2]));
  });
  add("hemidistributive-right", 3, [](const A& q, const Args& a) {
    return q.leq(q.tensor(q.oplus(a[0], a[1]), a[2]), q.oplus(a[0], q.tensor(a[1], a[2])));
  });
  add("hemidistributive-left-4", 4, [](const A& q, const Args& a) {
    return q.leq(q.tensor(q.oplus(a[0], a[1]), q.oplus(a[2], a[3])),
                 q.oplus(a[0], q.oplus(q.tensor(a[1], a[2]), a[3])));
  });
  add("hemidistributive-right-4", 4, [](const A& q, const Args& a) {
    return q.leq(q.tensor(a[0], q.tensor(q.oplus(a[1], a[2]), a[3])),
                 q.oplus(q.tensor(a[0], a[1]), q.tensor(a[2], a[3])));
  });
  add("mix", 2, [](const A& q, const Args& a) {
    return q.leq(q.tensor(a[0], a[1]), q.oplus(a[0], a[1]));
  });
  if constexpr (requires(const A& q) { q.one(); q.zero(); }) {
    if (with_units) {
      add("tensor-unit", 1, [](const A& q, const Args& a) {
        return q.equal(q.tensor(q.one(), a[0]), a[0]) && q.equal(q.tensor(a[0], q.one()), a[0]);
      });
      add("oplus-unit", 1, [](const A& q, const Args& a) {
        return q.equal(q.oplus(q.zero(), a[0]), a[0]) && q.equal(q.oplus(a[0], q.zero()), a[0]);
      });
    }
  }
  return L;
}

template <class A>
std::vector<Law<A>> involution_laws(bool with_units) {
  using E = typename A::Elem;
  using Args = std::vector<E>;
  std::vector<Law<A>> L;
  auto add = [&](std::string name, int arity, auto pred) {
    L.push_back({std::move(name), arity, pred});
  };
  add("star-involution", 1, [](const A& q, const Args& a) {
    return q.equal(q.star(q.star(a[0])), a[0]);
  });
  add("star-antitone", 2, [](const A& q, const Args& a) {
    return !q.leq(a[0], a[1]) || q.leq(q.star(a[1]), q.star(a[0]));
  });
  add("star-joins-to-meets", 2, [](const A& q, const Args& a) {
    return q.equal(q.star(q.join(a[0], a[1])), q.meet(q.star(a[0]), q.star(a[1])));
  });
  add("residuation-left", 3, [](const A& q, const Args& a) {
    return q.leq(q.tensor(a[0], a[1]), a[2]) == q.leq(a[0], q.oplus(a[2], q.star(a[1])));
  });
  add("residuation-right", 3, [](const A& q, const Args& a) {
    return q.leq(q.tensor(a[0], a[1]), a[2]) == q.leq(a[1], q.oplus(q.star(a[0]), a[2]));
  });
  add("oplus-from-duality", 2, [](const A& q, const Args& a) {
    return q.equal(q.oplus(a[0], a[1]), q.star(q.tensor(q.star(a[1]), q.star(a[0]))));
  });
  if constexpr (requires(const A& q) { q.one(); q.zero(); }) {
    if (with_units) {
      add("zero-is-star-of-one", 0, [](const A& q, const Args&) {
        return q.equal(q.zero(), q.star(q.one()));
      });
      add("mix-as-units", 0, [](const A& q, const Args&) {
        return q.leq(q.zero(), q.one());
      });
    }
  }
  return L;
}

template <class A>
std::vector<LawReport> run_laws(const A& alg, const std::vector<Law<A>>& laws, long long budget,
                                std::uint32_t seed) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  std::vector<LawReport> out;
  out.reserve(laws.size());
  for (const auto& law : laws) out.push_back(run_law(alg, law, budget, seed));
  return out;
}

}  // namespace detail

// Lattice, bisemigroup, hemidistributive and mix laws. Unit laws run only
// when the algebra carries units.
template <Quantale A>
std::vector<LawReport> check_lbs_axioms(const A& alg, long long budget = 200000,
                                        std::uint32_t seed = kDefaultSeed) {
  return detail::run_laws(alg, detail::bisemigroup_laws<A>(alg.has_units()), budget, seed);
}

// Involution, residuation and duality laws.
template <Quantale A>
std::vector<LawReport> check_involutive_rl_axioms(const A& alg, long long budget = 200000,
                                                  std::uint32_t seed = kDefaultSeed) {
  return detail::run_laws(alg, detail::involution_laws<A>(alg.has_units()), budget, seed);
}

// Largest c with a ⊗ c <= b, computed residually as star(a) ⊕ b.
template <Quantale A>
typename A::Elem residual_left(const A& alg, const typename A::Elem& a,
                               const typename A::Elem& b) {
  return alg.oplus(alg.star(a), b);
}

inline bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace qlat
