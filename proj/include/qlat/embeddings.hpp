#pragma once

// Embeddings of finite chains and the lifting of chain functions along them.
//
// Two families are instantiated: the inclusion of {0,...,n} into [0,1] at
// the grid points k/n, and the refinement {0,...,n} -> {0,...,nm} by the
// factor m. Each embedding iota comes with its adjoints: the ceiling ell
// (left adjoint) and the floor rho (right adjoint), and a chain function f
// lifts to iota . f . ell on the target. The lift preserves tensor, star,
// oplus, joins and binary meets, and reflects order; it does not preserve
// units (the identity does not hit the identity).

#include "qlat/algebra.hpp"
#include "qlat/chain_fn.hpp"
#include "qlat/laws.hpp"
#include "qlat/ld.hpp"
#include "qlat/step_fn.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

struct ChainEmbedding {
  enum class Kind { into_unit, refine };
  Kind kind = Kind::into_unit;
  int n = 1;  // source chain size
  int m = 1;  // refinement factor (refine only)
};

inline ChainEmbedding unit_embedding(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  return ChainEmbedding{ChainEmbedding::Kind::into_unit, n, 1};
}

inline ChainEmbedding refine_embedding(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("chain size and factor must be >= 1");
  return ChainEmbedding{ChainEmbedding::Kind::refine, n, m};
}

namespace detail {
inline void require_kind(const ChainEmbedding& e, ChainEmbedding::Kind k) {
  if (e.kind != k) throw std::invalid_argument("embedding has the wrong target kind");
}
}  // namespace detail

// iota, ell, rho for the grid embedding into [0,1]. ell . iota = rho . iota
// = identity, and rho <= ell pointwise.
inline Rat emb_iota(const ChainEmbedding& e, int x) {
  detail::require_kind(e, ChainEmbedding::Kind::into_unit);
  if (x < 0 || x > e.n) throw std::invalid_argument("argument outside chain");
  return Rat(x, e.n);
}

inline int emb_ell(const ChainEmbedding& e, const Rat& t) {
  detail::require_kind(e, ChainEmbedding::Kind::into_unit);
  require_unit(t, "embedding argument");
  Rat scaled = t * e.n;
  return rat_ceil(scaled).convert_to<int>();
}

inline int emb_rho(const ChainEmbedding& e, const Rat& t) {
  detail::require_kind(e, ChainEmbedding::Kind::into_unit);
  require_unit(t, "embedding argument");
  Rat scaled = t * e.n;
  return rat_floor(scaled).convert_to<int>();
}

// Same triple for the refinement into {0,...,nm}.
inline int emb_iota_int(const ChainEmbedding& e, int x) {
  detail::require_kind(e, ChainEmbedding::Kind::refine);
  if (x < 0 || x > e.n) throw std::invalid_argument("argument outside chain");
  return e.m * x;
}

inline int emb_ell_int(const ChainEmbedding& e, int t) {
  detail::require_kind(e, ChainEmbedding::Kind::refine);
  if (t < 0 || t > e.n * e.m) throw std::invalid_argument("argument outside chain");
  return (t + e.m - 1) / e.m;
}

inline int emb_rho_int(const ChainEmbedding& e, int t) {
  detail::require_kind(e, ChainEmbedding::Kind::refine);
  if (t < 0 || t > e.n * e.m) throw std::invalid_argument("argument outside chain");
  return t / e.m;
}

// iota . f . ell as a step function: constant f(k)/n on ((k-1)/n, k/n].
inline StepFn lift_to_step(const ChainEmbedding& e, const ChainFn& f) {
  detail::require_kind(e, ChainEmbedding::Kind::into_unit);
  if (f.n != e.n) throw std::invalid_argument("chain function does not live on the source chain");
  std::vector<std::pair<Rat, Rat>> raw;
  raw.reserve(static_cast<size_t>(e.n));
  for (int k = 1; k <= e.n; ++k) raw.emplace_back(Rat(k - 1, e.n), Rat(f(k), e.n));
  return canonicalize(std::move(raw));
}

// iota . f . ell on the refined chain: value m*f(ceil(t/m)) at t.
inline ChainFn lift_to_chain(const ChainEmbedding& e, const ChainFn& f) {
  detail::require_kind(e, ChainEmbedding::Kind::refine);
  if (f.n != e.n) throw std::invalid_argument("chain function does not live on the source chain");
  const int N = e.n * e.m;
  std::vector<int> v(static_cast<size_t>(N));
  for (int t = 1; t <= N; ++t) v[static_cast<size_t>(t - 1)] = e.m * f(emb_ell_int(e, t));
  return ChainFn(N, std::move(v));
}

// Componentwise lifts of clopen tuples. The image of a clopen tuple is
// clopen because the lift preserves tensor, oplus and the order; a failure
// here is a bug, not bad input.
inline ClopenTupleT<StepAlgebra> lift_tuple(const StepAlgebra& dst, const ChainEmbedding& e,
                                            const ClopenTupleT<ChainAlgebra>& f) {
  TupleT<StepAlgebra> r{f.t.d, {}};
  r.comp.reserve(f.t.comp.size());
  for (const auto& c : f.t.comp) r.comp.push_back(lift_to_step(e, c));
  return expect_clopen(dst, std::move(r), "lift_tuple");
}

inline ClopenTupleT<ChainAlgebra> lift_tuple(const ChainAlgebra& dst, const ChainEmbedding& e,
                                             const ClopenTupleT<ChainAlgebra>& f) {
  detail::require_kind(e, ChainEmbedding::Kind::refine);
  if (dst.n != e.n * e.m)
    throw std::invalid_argument("target algebra does not match the refined chain");
  TupleT<ChainAlgebra> r{f.t.d, {}};
  r.comp.reserve(f.t.comp.size());
  for (const auto& c : f.t.comp) r.comp.push_back(lift_to_chain(e, c));
  return expect_clopen(dst, std::move(r), "lift_tuple");
}

// The grid embeddings form a cocone over refinement: lifting through the
// refined chain and then into [0,1] equals lifting directly. Checked
// together with the degenerate fact that refining by 1 changes nothing.
// Exhaustive when the source chain is enumerable, sampled otherwise.
inline LawReport check_cocone(int n, int m, long long budget = 1000,
                              std::uint32_t seed = kDefaultSeed) {
  if (n < 1 || m < 1) throw std::invalid_argument("chain size and factor must be >= 1");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  const ChainEmbedding direct = unit_embedding(n);
  const ChainEmbedding refine = refine_embedding(n, m);
  const ChainEmbedding refined_unit = unit_embedding(n * m);
  const ChainEmbedding trivial = refine_embedding(n, 1);

  LawReport rep;
  rep.law = "embedding-cocone";

  auto holds = [&](const ChainFn& f) {
    return lift_to_step(refined_unit, lift_to_chain(refine, f)) == lift_to_step(direct, f) &&
           lift_to_chain(trivial, f) == f;
  };
  auto run_one = [&](const ChainFn& f) {
    ++rep.cases_checked;
    if (!holds(f)) {
      rep.pass = false;
      rep.counterexample = {chain_show(f)};
      return false;
    }
    return true;
  };

  if (n <= 6) {
    for (const ChainFn& f : chain_enumerate(n))
      if (!run_one(f)) return rep;
  } else {
    rep.seed = seed;
    Rng rng(seed);
    const ChainAlgebra src(n);
    for (long long c = 0; c < budget; ++c)
      if (!run_one(src.sample(rng))) return rep;
  }
  return rep;
}

// Membership in the image of some grid lift. The only candidate chain size
// is the lcm of all breakpoint denominators; beyond the cap the test gives
// up rather than guess.
struct LrResult {
  enum class Verdict { yes, no, unknown };
  Verdict verdict = Verdict::unknown;
  BigInt denom;  // witnessing chain size (yes/no), or the lcm past the cap
  std::optional<TupleT<ChainAlgebra>> preimage;  // set on yes
};

inline LrResult is_in_LR(const StepAlgebra& alg, const ClopenTupleT<StepAlgebra>& f,
                         long long cap = 1000) {
  (void)alg;
  if (cap < 1 || cap > 10'000'000) throw std::invalid_argument("denominator cap out of range");
  BigInt L = 1;
  for (const StepFn& g : f.t.comp)
    for (const auto& [x, y] : g.steps) {
      L = lcm_big(L, rat_den(x));
      L = lcm_big(L, rat_den(y));
    }
  LrResult res;
  res.denom = L;
  if (L > cap) return res;  // unknown

  const int n = L.convert_to<int>();
  const ChainEmbedding e = unit_embedding(n);
  TupleT<ChainAlgebra> g{f.t.d, {}};
  g.comp.reserve(f.t.comp.size());
  for (const StepFn& c : f.t.comp) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
      Rat scaled = step_eval(c, Rat(k, n)) * n;
      if (rat_den(scaled) != 1) {
        res.verdict = LrResult::Verdict::no;
        return res;
      }
      v[static_cast<size_t>(k - 1)] = rat_num(scaled).convert_to<int>();
    }
    g.comp.emplace_back(n, std::move(v));
  }
  for (size_t c = 0; c < g.comp.size(); ++c)
    if (!(lift_to_step(e, g.comp[c]) == f.t.comp[c])) {
      res.verdict = LrResult::Verdict::no;
      return res;
    }
  res.verdict = LrResult::Verdict::yes;
  res.preimage = std::move(g);
  return res;
}

}  // namespace qlat
