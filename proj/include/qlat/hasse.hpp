#pragma once

// Exhaustive enumeration of clopen tuples over a finite algebra, the cover
// relation of the resulting lattice, and DOT export of its Hasse diagram.
// Everything is deterministic: elements are sorted by their label, so two
// runs produce byte-identical output.

#include "qlat/algebra.hpp"
#include "qlat/ld.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlat {

template <Quantale A>
std::string tuple_label(const A& alg, const TupleT<A>& f) {
  std::string s;
  for (int i = 1; i <= f.d; ++i)
    for (int j = i + 1; j <= f.d; ++j) {
      if (!s.empty()) s += " ";
      s += "[" + std::to_string(i) + "," + std::to_string(j) + "]=" + alg.show(f.at(i, j));
    }
  return s;
}

// Odometer over carrier^C(d,2), keeping the clopen assignments. The search
// space is bounded by max_search and the result by max_out; both throw
// rather than run away.
template <Quantale A>
std::vector<ClopenTupleT<A>> enumerate_clopen(const A& alg, int d,
                                              long long max_search = 10'000'000,
                                              long long max_out = 100'000) {
  if (d < 2) throw std::invalid_argument("tuple dimension must be >= 2");
  if constexpr (requires { alg.carrier(); }) {
    if (!alg.finite()) throw std::invalid_argument("enumeration needs a finite algebra");
    const auto carrier = alg.carrier();
    const long long m = static_cast<long long>(carrier.size());
    const int slots = pair_count(d);
    long long space = 1;
    for (int s = 0; s < slots; ++s) {
      space *= m;
      if (space > max_search)
        throw std::invalid_argument("enumeration search space exceeds the guard");
    }

    std::vector<ClopenTupleT<A>> out;
    std::vector<size_t> idx(static_cast<size_t>(slots), 0);
    TupleT<A> f = bottom_tuple(alg, d);
    while (true) {
      for (int s = 0; s < slots; ++s) f.comp[static_cast<size_t>(s)] = carrier[idx[static_cast<size_t>(s)]];
      if (is_clopen(alg, f)) {
        if (static_cast<long long>(out.size()) >= max_out)
          throw std::invalid_argument("enumeration result exceeds the guard");
        out.push_back(ClopenTupleT<A>{f});
      }
      int pos = slots - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == carrier.size()) {
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
    }
    std::sort(out.begin(), out.end(), [&](const ClopenTupleT<A>& a, const ClopenTupleT<A>& b) {
      return tuple_label(alg, a.t) < tuple_label(alg, b.t);
    });
    return out;
  } else {
    throw std::invalid_argument("enumeration needs a finite algebra");
  }
}

// Covering pairs (lower, upper) as indices into elems: a < b with nothing
// strictly between.
template <Quantale A>
std::vector<std::pair<int, int>> cover_pairs(const A& alg,
                                             const std::vector<ClopenTupleT<A>>& elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<char>> lt(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && tuple_leq(alg, elems[static_cast<size_t>(a)].t, elems[static_cast<size_t>(b)].t))
        lt[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!lt[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
      bool direct = true;
      for (int c = 0; c < m && direct; ++c)
        if (lt[static_cast<size_t>(a)][static_cast<size_t>(c)] && lt[static_cast<size_t>(c)][static_cast<size_t>(b)])
          direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

// DOT digraph, edges from lower to upper cover, ranked bottom-up.
template <Quantale A>
std::string hasse_dot(const A& alg, const std::vector<ClopenTupleT<A>>& elems) {
  std::string s = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < elems.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + tuple_label(alg, elems[i].t) + "\"];\n";
  for (const auto& [lo, hi] : cover_pairs(alg, elems))
    s += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace qlat
