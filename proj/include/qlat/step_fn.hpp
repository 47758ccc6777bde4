#pragma once

// The rational step fragment of the quantale of join-continuous functions
// on [0,1].
//
// Elements are finite joins of one-step functions e<x,y>, where
//
//     e<x,y>(t) = y  if x < t,   0 otherwise        (x, y rational in [0,1])
//
// so a StepFn is monotone, left-continuous, 0 at 0, and piecewise constant.
// Canonical form keeps the generators as an antichain: strictly increasing
// x and strictly increasing y, with bottom summands (x = 1 or y = 0) removed.
// Structural equality of canonical forms is semantic equality.
//
// This fragment has no unit: the identity function is not a finite join of
// one-step functions. Everything here is unit-free by construction; the
// involution still works because star of a step function is again one:
//
//     star(f)(t) = sup{ s : f(s) < t },   star(e<x,y>) = e<0,x> v e<y,1>.

#include "qlat/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlat {

struct StepFn {
  // (x_i, y_i) pairs in canonical form; empty = bottom (constant 0).
  std::vector<std::pair<Rat, Rat>> steps;

  friend bool operator==(const StepFn&, const StepFn&) = default;
};

// Build the canonical form of a join of one-step functions. Dominated
// generators (x_j >= x_i with y_j <= y_i) contribute nothing to the join
// and are dropped.
inline StepFn canonicalize(std::vector<std::pair<Rat, Rat>> raw) {
  for (auto& [x, y] : raw) {
    require_unit(x, "step x");
    require_unit(y, "step y");
  }
  std::erase_if(raw, [](const auto& p) { return p.first == 1 || p.second == 0; });
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  StepFn f;
  for (auto& p : raw) {
    // Sorted by x asc, then y desc: anything not strictly above the last
    // kept y is dominated (equal-x duplicates fall out here too).
    if (!f.steps.empty() && p.second <= f.steps.back().second) continue;
    f.steps.push_back(std::move(p));
  }
  return f;
}

inline StepFn one_step(const Rat& x, const Rat& y) { return canonicalize({{x, y}}); }

inline StepFn step_bottom() { return StepFn{}; }

inline StepFn step_top() { return one_step(0, 1); }

inline bool is_bottom(const StepFn& f) { return f.steps.empty(); }

// f(t) = max{ y_i : x_i < t }, 0 if no generator has jumped yet.
inline Rat step_eval(const StepFn& f, const Rat& t) {
  require_unit(t, "eval point");
  Rat val = 0;
  for (const auto& [x, y] : f.steps) {
    if (x < t) val = y; else break;
  }
  return val;
}

// Right limit of f at t. For t < 1 this is max{ y_i : x_i <= t }; at the top
// of the chain the limit is an empty meet, so eval_right(f, 1) = 1.
inline Rat step_eval_right(const StepFn& f, const Rat& t) {
  require_unit(t, "eval point");
  if (t == 1) return 1;
  Rat val = 0;
  for (const auto& [x, y] : f.steps) {
    if (x <= t) val = y; else break;
  }
  return val;
}

// Largest s with f(s) <= bound (the right adjoint of f, evaluated at bound).
// Since f is left-continuous the supremum is attained.
inline Rat step_right_adjoint_at(const StepFn& f, const Rat& bound) {
  for (const auto& [x, y] : f.steps)
    if (y > bound) return x;
  return 1;
}

inline bool step_leq(const StepFn& f, const StepFn& g) {
  // e<x,y> <= g iff y <= right limit of g at x; f <= g iff all generators are.
  for (const auto& [x, y] : f.steps)
    if (y > step_eval_right(g, x)) return false;
  return true;
}

inline StepFn step_join(const StepFn& f, const StepFn& g) {
  auto raw = f.steps;
  raw.insert(raw.end(), g.steps.begin(), g.steps.end());
  return canonicalize(std::move(raw));
}

// Finite meets are pointwise. Both functions are constant between adjacent
// merged breakpoints, so evaluating the min just right of every breakpoint
// recovers the canonical generators.
inline StepFn step_meet(const StepFn& f, const StepFn& g) {
  std::vector<Rat> grid{Rat(0)};
  for (const auto& s : f.steps) grid.push_back(s.first);
  for (const auto& s : g.steps) grid.push_back(s.first);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<std::pair<Rat, Rat>> raw;
  for (const auto& x : grid) {
    if (x == 1) continue;
    Rat a = step_eval_right(f, x), b = step_eval_right(g, x);
    raw.emplace_back(x, std::min(a, b));
  }
  return canonicalize(std::move(raw));
}

// f ⊗ g = g ∘ f. On generators: e<x,y> ⊗ e<x',z> is bottom when y <= x'
// (the first jump never clears the second threshold) and e<x,z> otherwise;
// the general case distributes over the joins of generators.
inline StepFn step_tensor(const StepFn& f, const StepFn& g) {
  std::vector<std::pair<Rat, Rat>> raw;
  for (const auto& [x, y] : f.steps)
    for (const auto& [x2, z] : g.steps)
      if (y > x2) raw.emplace_back(x, z);
  return canonicalize(std::move(raw));
}

// star(f)(t) = sup{ s : f(s) < t }. Reading the canonical generators
// (x_1,y_1) < ... < (x_k,y_k) left to right, star(f) takes value x_1 on
// (0, y_1], x_2 on (y_1, y_2], ..., and 1 above y_k; as a join:
//     star(f) = e<0,x_1> v e<y_1,x_2> v ... v e<y_{k-1},x_k> v e<y_k,1>.
// Degenerate summands fall out in canonicalize. star(bottom) = top.
inline StepFn step_star(const StepFn& f) {
  std::vector<std::pair<Rat, Rat>> raw;
  Rat prev_y = 0;
  for (const auto& [x, y] : f.steps) {
    raw.emplace_back(prev_y, x);
    prev_y = y;
  }
  raw.emplace_back(prev_y, Rat(1));
  return canonicalize(std::move(raw));
}

inline StepFn step_oplus(const StepFn& f, const StepFn& g) {
  return step_star(step_tensor(step_star(g), step_star(f)));
}

inline std::string step_show(const StepFn& f) {
  if (is_bottom(f)) return "bot";
  std::string s;
  for (const auto& [x, y] : f.steps) {
    if (!s.empty()) s += " v ";
    s += "e<" + rat_show(x) + "," + rat_show(y) + ">";
  }
  return s;
}

}  // namespace qlat
