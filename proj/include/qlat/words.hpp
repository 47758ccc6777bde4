#pragma once

// Words over a d-letter alphabet with n occurrences of each letter, the
// weak order they generate, and the encoding of a word as a clopen tuple
// of chain functions.
//
// The order is the reflexive-transitive closure of the rewriting
// w·a·b·u -> w·b·a·u for letters a < b (moving a bigger letter left goes
// up). The brute-force oracle below materializes the whole order; it exists
// to cross-check the lattice of clopen tuples, not to be fast.

#include "qlat/algebra.hpp"
#include "qlat/ld.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

struct MultiWord {
  int d = 1;                 // alphabet size
  int n = 1;                 // occurrences per letter
  std::vector<int> letters;  // 1-based letters, length d*n

  friend bool operator==(const MultiWord&, const MultiWord&) = default;
  friend auto operator<=>(const MultiWord&, const MultiWord&) = default;
};

inline MultiWord make_word(int d, int n, std::vector<int> letters) {
  if (d < 1 || n < 1) throw std::invalid_argument("word needs d >= 1 and n >= 1");
  if (static_cast<int>(letters.size()) != d * n)
    throw std::invalid_argument("word length must be d*n");
  std::vector<int> count(static_cast<size_t>(d), 0);
  for (int a : letters) {
    if (a < 1 || a > d) throw std::invalid_argument("letter out of alphabet");
    ++count[static_cast<size_t>(a - 1)];
  }
  for (int c : count)
    if (c != n) throw std::invalid_argument("each letter must occur exactly n times");
  return MultiWord{d, n, std::move(letters)};
}

// ASCII form: the distinct letters of s, in alphabetical order, name the
// alphabet 1..d, so "xyxy" and "abab" encode the same word.
inline MultiWord word_from_string(int n, const std::string& s) {
  std::vector<char> glyphs;
  for (char ch : s) {
    if (ch < 'a' || ch > 'z') throw std::invalid_argument("word letters must be a..z");
    glyphs.push_back(ch);
  }
  if (glyphs.empty()) throw std::invalid_argument("empty word");
  std::sort(glyphs.begin(), glyphs.end());
  glyphs.erase(std::unique(glyphs.begin(), glyphs.end()), glyphs.end());
  std::vector<int> letters;
  for (char ch : s)
    letters.push_back(static_cast<int>(std::lower_bound(glyphs.begin(), glyphs.end(), ch) -
                                       glyphs.begin()) + 1);
  return make_word(static_cast<int>(glyphs.size()), n, std::move(letters));
}

inline std::string word_to_string(const MultiWord& w) {
  if (w.d > 26) throw std::invalid_argument("ASCII form supports alphabets up to 26 letters");
  std::string s;
  for (int a : w.letters) s += static_cast<char>('a' + a - 1);
  return s;
}

// One rewriting step up: swap an adjacent (a,b) with a < b into (b,a).
inline std::vector<MultiWord> weak_order_covers(const MultiWord& w) {
  std::vector<MultiWord> out;
  for (size_t p = 0; p + 1 < w.letters.size(); ++p)
    if (w.letters[p] < w.letters[p + 1]) {
      MultiWord u = w;
      std::swap(u.letters[p], u.letters[p + 1]);
      out.push_back(std::move(u));
    }
  return out;
}

// f_ij(t) = number of occurrences of letter j before the t-th occurrence of
// letter i, for i < j. Monotone with values in 0..n, hence a chain function.
inline ClopenTupleT<ChainAlgebra> word_to_tuple(const ChainAlgebra& alg, const MultiWord& w) {
  if (alg.n != w.n) throw std::invalid_argument("algebra chain size must equal multiplicity");
  TupleT<ChainAlgebra> f = bottom_tuple(alg, w.d);
  for (int i = 1; i <= w.d; ++i)
    for (int j = i + 1; j <= w.d; ++j) {
      std::vector<int> v;
      int seen_j = 0;
      for (int a : w.letters) {
        if (a == i) v.push_back(seen_j);
        if (a == j) ++seen_j;
      }
      f.at(i, j) = ChainFn(w.n, std::move(v));
    }
  return to_clopen(alg, std::move(f));
}

// The whole multinomial lattice, materialized . Words are generated as all
// distinct permutations of the sorted base word; leq is the transitive
// closure of the cover relation; join/meet search bounds by brute force.
struct MultinomialOracle {
  int d = 1, n = 1;
  std::vector<MultiWord> words;        // sorted (lexicographic)
  std::vector<std::vector<char>> leq;  // leq[a][b]

  int index_of(const MultiWord& w) const {
    const auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || !(*it == w)) throw std::invalid_argument("word not in lattice");
    return static_cast<int>(it - words.begin());
  }

  bool leq_words(const MultiWord& a, const MultiWord& b) const {
    return leq[static_cast<size_t>(index_of(a))][static_cast<size_t>(index_of(b))] != 0;
  }

  // Least upper bound; throws if it is not unique (cannot happen in a
  // lattice, kept as a guard on the oracle itself).
  MultiWord join_words(const MultiWord& a, const MultiWord& b) const {
    return bound(index_of(a), index_of(b), true);
  }
  MultiWord meet_words(const MultiWord& a, const MultiWord& b) const {
    return bound(index_of(a), index_of(b), false);
  }

 private:
  MultiWord bound(int a, int b, bool upper) const {
    const size_t m = words.size();
    int best = -1;
    for (size_t c = 0; c < m; ++c) {
      const bool is_bound = upper ? (leq[static_cast<size_t>(a)][c] && leq[static_cast<size_t>(b)][c])
                                  : (leq[c][static_cast<size_t>(a)] && leq[c][static_cast<size_t>(b)]);
      if (!is_bound) continue;
      if (best < 0) { best = static_cast<int>(c); continue; }
      const auto bi = static_cast<size_t>(best);
      if (upper ? leq[c][bi] : leq[bi][c]) best = static_cast<int>(c);
    }
    if (best < 0) throw std::logic_error("oracle: no bound found");
    const auto bi = static_cast<size_t>(best);
    for (size_t c = 0; c < m; ++c) {
      const bool is_bound = upper ? (leq[static_cast<size_t>(a)][c] && leq[static_cast<size_t>(b)][c])
                                  : (leq[c][static_cast<size_t>(a)] && leq[c][static_cast<size_t>(b)]);
      if (is_bound && !(upper ? leq[bi][c] : leq[c][bi]))
        throw std::logic_error("oracle: bound not unique, order is not a lattice");
    }
    return words[bi];
  }
};

inline long long multinomial_count(int d, int n) {
  // (d*n)! / (n!)^d, computed as a product of binomials to stay in range
  if (d < 1 || n < 1 || d * n > 60)
    throw std::invalid_argument("multinomial lattice too large");
  long long total = 1;
  int remaining = d * n;
  for (int letter = 0; letter < d; ++letter) {
    // choose n positions among `remaining`; stays integral at every step
    long long ways = 1;
    for (int t = 1; t <= n; ++t) ways = ways * (remaining - n + t) / t;
    if (ways > 10'000'000 || total * ways > 10'000'000)
      throw std::invalid_argument("multinomial lattice too large");
    total *= ways;
    remaining -= n;
  }
  return total;
}

inline MultinomialOracle enumerate_multinomial(int d, int n) {
  const long long count = multinomial_count(d, n);
  if (count > 100'000) throw std::invalid_argument("multinomial lattice above the 100000 guard");

  MultinomialOracle L;
  L.d = d;
  L.n = n;
  std::vector<int> base;
  for (int a = 1; a <= d; ++a)
    for (int t = 0; t < n; ++t) base.push_back(a);
  do {
    L.words.push_back(MultiWord{d, n, base});
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(L.words.begin(), L.words.end());

  const size_t m = L.words.size();
  L.leq.assign(m, std::vector<char>(m, 0));
  for (size_t a = 0; a < m; ++a) L.leq[a][a] = 1;
  for (size_t a = 0; a < m; ++a)
    for (const auto& c : weak_order_covers(L.words[a]))
      L.leq[a][static_cast<size_t>(L.index_of(c))] = 1;
  // Transitive closure (the order is tiny; cubic is fine)
  for (size_t k = 0; k < m; ++k)
    for (size_t a = 0; a < m; ++a) {
      if (!L.leq[a][k]) continue;
      for (size_t b = 0; b < m; ++b)
        if (L.leq[k][b]) L.leq[a][b] = 1;
    }
  return L;
}

}  // namespace qlat
