#pragma once

// Join-continuous endofunctions of the finite chain {0, 1, ..., n}.
//
// Such a function is determined by its values on 1..n (f(0) = 0 always), and
// join-continuity on a finite chain is just monotonicity. Composition makes
// them a quantale: f ⊗ g := g ∘ f, with the identity as unit. The residual
// structure comes from the antitone involution
//
//     star(f)(x) = max{ y : f(y) < x },
//
// and f ⊕ g := star(star(g) ⊗ star(f)). The dual "meet-continuous" view is
// reached through the shift transforms meetof/joinof, which are mutually
// inverse order isomorphisms.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

struct ChainFn {
  int n = 1;
  std::vector<int> v;  // v[t-1] = f(t) for t = 1..n

  ChainFn() : n(1), v{0} {}
  ChainFn(int n_, std::vector<int> vals) : n(n_), v(std::move(vals)) {
    if (n < 1) throw std::invalid_argument("chain size must be >= 1");
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("chain function needs exactly n values");
    int prev = 0;
    for (int x : v) {
      if (x < prev || x > n)
        throw std::invalid_argument("chain function values must be monotone in 0..n");
      prev = x;
    }
  }

  int operator()(int t) const {  // defined on 0..n
    if (t < 0 || t > n) throw std::invalid_argument("argument outside chain");
    return t == 0 ? 0 : v[static_cast<size_t>(t) - 1];
  }

  friend bool operator==(const ChainFn&, const ChainFn&) = default;
};

inline void require_same_chain(const ChainFn& f, const ChainFn& g) {
  if (f.n != g.n) throw std::invalid_argument("chain size mismatch");
}

inline ChainFn chain_bottom(int n) { return ChainFn(n, std::vector<int>(n, 0)); }

inline ChainFn chain_top(int n) { return ChainFn(n, std::vector<int>(n, n)); }

inline ChainFn chain_identity(int n) {
  std::vector<int> v(n);
  for (int t = 1; t <= n; ++t) v[t - 1] = t;
  return ChainFn(n, std::move(v));
}

inline bool chain_leq(const ChainFn& f, const ChainFn& g) {
  require_same_chain(f, g);
  for (int t = 1; t <= f.n; ++t)
    if (f(t) > g(t)) return false;
  return true;
}

inline ChainFn chain_join(const ChainFn& f, const ChainFn& g) {
  require_same_chain(f, g);
  std::vector<int> v(f.n);
  for (int t = 1; t <= f.n; ++t) v[t - 1] = std::max(f(t), g(t));
  return ChainFn(f.n, std::move(v));
}

inline ChainFn chain_meet(const ChainFn& f, const ChainFn& g) {
  require_same_chain(f, g);
  std::vector<int> v(f.n);
  for (int t = 1; t <= f.n; ++t) v[t - 1] = std::min(f(t), g(t));
  return ChainFn(f.n, std::move(v));
}

// f ⊗ g = g ∘ f: apply f first.
inline ChainFn chain_tensor(const ChainFn& f, const ChainFn& g) {
  require_same_chain(f, g);
  std::vector<int> v(f.n);
  for (int t = 1; t <= f.n; ++t) v[t - 1] = g(f(t));
  return ChainFn(f.n, std::move(v));
}

inline ChainFn chain_star(const ChainFn& f) {
  std::vector<int> v(f.n);
  for (int x = 1; x <= f.n; ++x) {
    int best = 0;  // f(0) = 0 < x always holds here
    for (int y = 1; y <= f.n; ++y)
      if (f(y) < x) best = std::max(best, y);
    v[x - 1] = best;
  }
  return ChainFn(f.n, std::move(v));
}

inline ChainFn chain_oplus(const ChainFn& f, const ChainFn& g) {
  return chain_star(chain_tensor(chain_star(g), chain_star(f)));
}

inline ChainFn chain_zero(int n) { return chain_star(chain_identity(n)); }

// Right limit with top boundary: (meetof f)(x) = f(x+1), and n at x = n.
inline int chain_meetof(const ChainFn& f, int x) {
  if (x < 0 || x > f.n) throw std::invalid_argument("argument outside chain");
  return x == f.n ? f.n : f(x + 1);
}

// Left limit with bottom boundary: (joinof g)(x) = g(x-1), and 0 at x = 0.
inline int chain_joinof(const ChainFn& g, int x) {
  if (x < 0 || x > g.n) throw std::invalid_argument("argument outside chain");
  return x == 0 ? 0 : g(x - 1);
}

// All monotone value vectors, lexicographic. There are C(2n, n) of them.
inline std::vector<ChainFn> chain_enumerate(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("chain enumeration supports 1 <= n <= 6");
  std::vector<ChainFn> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.emplace_back(n, cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    int next = cur[i] + 1;
    for (int j = i; j < n; ++j) cur[j] = next;
  }
  return out;
}

inline std::string chain_show(const ChainFn& f) {
  std::string s = "(";
  for (int t = 1; t <= f.n; ++t) {
    if (t > 1) s += ",";
    s += std::to_string(f(t));
  }
  return s + ")";
}

}  // namespace qlat
