#ifndef MICAL_TESTS_ORACLES_HPP
#define MICAL_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>

#include "mical/core.hpp"
#include "mical/dfixed.hpp"

// Test-only brute-force oracles, kept independent of the library's fast
// paths they are used to check.

namespace mical::oracle {

// all divisors of w
inline std::vector<Monomial> divisors(const Monomial& w) {
  std::vector<Monomial> out{Monomial::unit(w.vars())};
  for (int i = 1; i <= w.vars(); ++i) {
    std::vector<Monomial> next;
    for (const Monomial& u : out)
      for (Exponent k = 0; k <= w.exp(i); ++k) next.push_back(u.mul_var(i, k));
    out = std::move(next);
  }
  return out;
}

// membership in I*J decided by enumerating divisor splits w = u * v
inline bool product_member(const MonomialIdeal& I, const MonomialIdeal& J,
                           const Monomial& w) {
  for (const Monomial& u : divisors(w))
    if (I.contains(u) && J.contains(w.div_exact(u))) return true;
  return false;
}

// the strong-Borel-type closure of a single monomial: all full-block swaps
// x_i^{nu_i(v)} -> x_j^{nu_i(v)}, breadth-first
inline MonomialIdeal sbt_move_closure(const Monomial& u) {
  std::vector<Monomial> all{u};
  for (std::size_t at = 0; at < all.size(); ++at) {
    Monomial v = all[at];
    for (int i = 2; i <= v.vars(); ++i) {
      if (!v.exp(i)) continue;
      for (int j = 1; j < i; ++j) {
        Monomial moved = v;
        Exponent t = moved.e[i - 1];
        moved.e[i - 1] = 0;
        moved.e[j - 1] = checked_add(moved.e[j - 1], t);
        if (std::find(all.begin(), all.end(), moved) == all.end()) all.push_back(moved);
      }
    }
  }
  return MonomialIdeal::make(u.vars(), all);
}

// definitional strong-Borel-type check on every monomial of I up to `upto`
inline bool sbt_exhaustive(const MonomialIdeal& I, Degree upto) {
  DegreeSlices slices(I);
  for (Degree k = 1; k <= upto; ++k) {
    for (const Monomial& w : slices.slice(k)) {
      for (int i = 2; i <= I.n; ++i) {
        if (!w.exp(i)) continue;
        for (int j = 1; j < i; ++j) {
          bool some = false;
          Monomial base = w.with_var_zeroed(i);
          for (Exponent t = 1; t <= w.exp(i) && !some; ++t)
            if (I.contains(base.mul_var(j, t))) some = true;
          if (!some) return false;
        }
      }
    }
  }
  return true;
}

// definitional d-fixed check on every monomial of I up to `upto`
inline bool dfixed_exhaustive(const MonomialIdeal& I, const DSequence& d, Degree upto) {
  DegreeSlices slices(I);
  for (Degree k = 1; k <= upto; ++k) {
    for (const Monomial& w : slices.slice(k)) {
      for (int i = 2; i <= I.n; ++i) {
        if (!w.exp(i)) continue;
        for (Exponent t : values_leq_d(w.exp(i), d, 1))
          for (int j = 1; j < i; ++j) {
            Monomial moved = w;
            moved.e[i - 1] -= t;
            moved.e[j - 1] = checked_add(moved.e[j - 1], t);
            if (!I.contains(moved)) return false;
          }
      }
    }
  }
  return true;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  int pick(int lo, int hi) {
    return static_cast<int>(lo + gen() % (hi - lo + 1));
  }
  Monomial monomial(int n, Degree max_deg) {
    Monomial u = Monomial::unit(n);
    Degree deg = static_cast<Degree>(pick(0, static_cast<int>(max_deg)));
    for (Degree step = 0; step < deg; ++step)
      u = u.mul_var(pick(1, n));
    return u;
  }
  MonomialIdeal ideal(int n, int gens, Degree max_deg) {
    std::vector<Monomial> g;
    for (int i = 0; i < gens; ++i) {
      Monomial u = monomial(n, max_deg);
      if (!u.is_unit()) g.push_back(u);
    }
    if (g.empty()) g.push_back(Monomial::power(n, 1, 1));
    return MonomialIdeal::make(n, g);
  }
  DSequence dseq() {
    static const std::vector<std::vector<Exponent>> pool = {
        {1}, {1, 2}, {1, 3}, {1, 2, 4}, {1, 3, 9}, {1, 2, 4, 12}, {1, 2, 6}};
    return DSequence::make(pool[gen() % pool.size()]);
  }
  // a random d-fixed (hence Borel-type) ideal
  MonomialIdeal borel_type_ideal(int n, Degree max_deg) {
    std::vector<Monomial> seeds;
    int count = pick(1, 2);
    for (int i = 0; i < count; ++i) {
      Monomial u = monomial(n, max_deg);
      if (!u.is_unit()) seeds.push_back(u);
    }
    if (seeds.empty()) seeds.push_back(Monomial::power(n, pick(1, n), pick(1, (int)max_deg)));
    return dfixed_closure(seeds, dseq());
  }
};

}  // namespace mical::oracle

#endif
