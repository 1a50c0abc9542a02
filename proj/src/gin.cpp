#include "mical/gin.hpp"

#include <algorithm>
#include <set>

namespace mical {

LefschetzReport check_lefschetz(const MonomialIdeal& I, bool strong) {
  if (!I.is_artinian()) throw std::domain_error("check_lefschetz needs an Artinian ideal");
  LefschetzReport rep;
  rep.element = I.n;
  DegreeSlices slices(I);
  // top degree of the quotient
  Degree top = 0;
  for (Degree k = 0;; ++k) {
    if (slices.standard_count(k) == 0) {
      top = k ? k - 1 : 0;
      break;
    }
  }
  HilbertFn H = hilbert_quotient(I, top);
  for (Degree b = 1; b <= top; ++b) {
    if (!strong && b > 1) break;
    for (Degree t = 0; t + b <= top; ++t) {
      bool need_inj = H.value(t) <= H.value(t + b);
      bool need_surj = H.value(t) >= H.value(t + b);
      if (need_inj) {
        for (const Monomial& m : standard_monomials(I, t)) {
          if (slices.member(m.mul_var(I.n, b))) {
            rep.failures.push_back({t, b, true, m});
            break;
          }
        }
      }
      if (need_surj) {
        for (const Monomial& w : standard_monomials(I, t + b)) {
          if (w.exp(I.n) < b) {
            rep.failures.push_back({t, b, false, w});
            break;
          }
        }
      }
    }
  }
  rep.holds = rep.failures.empty();
  return rep;
}

AlmostRevlexResult is_almost_revlex(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero())
    throw std::domain_error("is_almost_revlex needs a proper nonzero ideal");
  for (const Monomial& g : I.gens) {
    for (const Monomial& w : all_monomials(I.n, g.degree())) {
      if (!revlex_greater(w, g)) break;  // revlex-descending enumeration
      if (!I.contains(w)) return {false, std::make_pair(g, w)};
    }
  }
  return {true, std::nullopt};
}

bool is_revlex_segment(const std::vector<Monomial>& set, int n) {
  if (set.empty()) return true;
  Degree d = set.front().degree();
  for (const Monomial& u : set)
    if (u.degree() != d) throw std::invalid_argument("revlex segment needs equal degrees");
  std::vector<Monomial> sorted = set;
  std::sort(sorted.begin(), sorted.end(), revlex_greater);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> all = all_monomials(n, d);
  if (sorted.size() > all.size()) return false;
  return std::equal(sorted.begin(), sorted.end(), all.begin());
}

// ---- closed-form generator families --------------------------------------

namespace {

void emit(std::vector<Monomial>& out, long long e1, long long e2, long long e3,
          long long braces = 0) {
  // base * {x1,x2}^braces
  if (e1 < 0 || e2 < 0 || e3 < 0) throw std::logic_error("negative exponent in family");
  for (long long a = 0; a <= braces; ++a) {
    Monomial m = Monomial::unit(3);
    m.e[0] = static_cast<Exponent>(e1 + a);
    m.e[1] = static_cast<Exponent>(e2 + braces - a);
    m.e[2] = static_cast<Exponent>(e3);
    out.push_back(m);
  }
}

std::vector<Monomial> gin_family(int d1, int d2, int d3) {
  std::vector<Monomial> g;
  if (d1 == d2 && d2 == d3) {
    int d = d1;
    emit(g, d - 2, 0, 0, 2);
    if (d % 2) {
      for (int j = 1; j <= (d - 3) / 2; ++j) {
        emit(g, d - 2 * j - 1, 3 * j + 1, 0);
        emit(g, d - 2 * j - 2, 3 * j + 2, 0);
      }
      emit(g, 0, (3 * d - 1) / 2, 0);
      emit(g, 0, (3 * d - 3) / 2, 1);
      for (int j = 1; j <= (d - 3) / 2; ++j)
        emit(g, 0, (3 * d - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
    } else {
      for (int j = 1; j <= (d - 4) / 2; ++j) {
        emit(g, d - 2 * j - 1, 3 * j + 1, 0);
        emit(g, d - 2 * j - 2, 3 * j + 2, 0);
      }
      emit(g, 1, (3 * d - 4) / 2, 0);
      emit(g, 0, (3 * d - 2) / 2, 0);
      for (int j = 1; j <= (d - 2) / 2; ++j)
        emit(g, 0, 3 * d / 2 - 3 * j, 2 * j, 2 * j - 1);
    }
    for (int j = 1; j <= d; ++j) emit(g, 0, 0, d - 2 + 2 * j, d - j);
  } else if (d1 == d2 && 2 * d1 <= d3 + 1) {
    int d = d1;
    emit(g, d, 0, 0);
    for (int j = 0; j <= d - 1; ++j) emit(g, d - j - 1, 2 * j + 1, 0);
    for (int j = 0; j <= d - 2; ++j)
      emit(g, 0, 2 * d - 2 * j - 2, d3 - 2 * d + 2 * j + 2, j);
    for (int j = 1; j <= d; ++j) emit(g, 0, 0, d3 + 2 * j - 2, d - j);
  } else if (d1 == d2) {
    int d = d1;
    emit(g, d, 0, 0);
    emit(g, d - 1, 1, 0);
    for (int j = 1; j <= d3 - d - 1; ++j) emit(g, d - j - 1, 2 * j + 1, 0);
    if (d3 % 2 == 0) {
      for (int j = 1; j <= (2 * d - d3) / 2; ++j) {
        emit(g, 2 * d - d3 - 2 * j + 1, 2 * d3 - 2 * d + 3 * j - 2, 0);
        emit(g, 2 * d - d3 - 2 * j, 2 * d3 - 2 * d + 3 * j - 1, 0);
      }
      // the x2 exponent keeps the family homogeneous within its slice
      for (int j = 1; j <= (2 * d - d3 - 2) / 2; ++j)
        emit(g, 0, (2 * d + d3) / 2 - 3 * j, 2 * j, 2 * j - 1);
    } else {
      for (int j = 1; j <= (2 * d - d3 - 1) / 2; ++j) {
        emit(g, 2 * d - d3 - 2 * j + 1, 2 * d3 - 2 * d + 3 * j - 2, 0);
        emit(g, 2 * d - d3 - 2 * j, 2 * d3 - 2 * d + 3 * j - 1, 0);
      }
      emit(g, 0, (2 * d + d3 - 1) / 2, 0);
      emit(g, 0, (2 * d + d3 - 3) / 2, 1);
      for (int j = 1; j <= (2 * d - d3 - 3) / 2; ++j)
        emit(g, 0, (2 * d + d3 - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
    }
    for (int j = 1; j <= d3 - d; ++j)
      emit(g, 0, 2 * d3 - 2 * d + 2 - 2 * j, 2 * d - d3 - 2 + 2 * j, 2 * d - d3 + j - 2);
    for (int j = 1; j <= d; ++j) emit(g, 0, 0, d3 - 2 + 2 * j, d - j);
  } else if (d2 == d3) {
    int d = d2;
    emit(g, d1, 0, 0);
    if (d1 % 2 == 0) {
      for (int j = 1; j <= (d1 - 2) / 2; ++j) {
        emit(g, d1 - 2 * j + 1, d - d1 - 2 + 3 * j, 0);
        emit(g, d1 - 2 * j, d - d1 - 1 + 3 * j, 0);
      }
      emit(g, 1, (d1 + 2 * d - 4) / 2, 0);
      emit(g, 0, (d1 + 2 * d - 2) / 2, 0);
      for (int j = 1; j <= (d1 - 2) / 2; ++j)
        emit(g, 0, (d1 + 2 * d) / 2 - 3 * j, 2 * j, 2 * j - 1);
    } else {
      for (int j = 1; j <= (d1 - 1) / 2; ++j) {
        emit(g, d1 - 2 * j + 1, d - d1 - 2 + 3 * j, 0);
        emit(g, d1 - 2 * j, d - d1 - 1 + 3 * j, 0);
      }
      emit(g, 0, (d1 + 2 * d - 1) / 2, 0);
      emit(g, 0, (d1 + 2 * d - 3) / 2, 1);
      for (int j = 1; j <= (d1 - 3) / 2; ++j)
        emit(g, 0, (d1 + 2 * d - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
    }
    for (int j = 1; j <= d - d1; ++j)
      emit(g, 0, d - d1 - j + 1, d1 - 2 + 2 * j, d1 - 1);
    for (int j = 1; j <= d1; ++j) emit(g, 0, 0, 2 * d - d1 - 2 + 2 * j, d1 - j);
  } else if (d1 + d2 <= d3 + 1) {
    emit(g, d1, 0, 0);
    for (int j = 1; j <= d1 - 1; ++j) emit(g, d1 - j, d2 - d1 + 2 * j - 1, 0);
    emit(g, 0, d1 + d2 - 1, 0);
    emit(g, 0, d1 + d2 - 2, d3 - d1 - d2 + 2);
    for (int j = 1; j <= d1 - 2; ++j)
      emit(g, 0, d1 + d2 - 2 * j - 2, d3 - d1 - d2 + 2 * j + 2, j);
    for (int j = 1; j <= d2 - d1; ++j)
      emit(g, 0, d2 - d1 + 1 - j, d3 + d1 - d2 - 2 + 2 * j, d1 - 1);
    for (int j = 1; j <= d1; ++j) emit(g, 0, 0, d3 + d2 - d1 + 2 * j - 2, d1 - j);
  } else {
    int alpha = d1 + d2 - d3;
    emit(g, d1, 0, 0);
    for (int j = 1; j <= d3 - d2; ++j) emit(g, d1 - j, d2 - d1 + 2 * j - 1, 0);
    int pair_top = alpha % 2 ? (alpha - 1) / 2 : (alpha - 2) / 2;
    for (int j = 1; j <= pair_top; ++j) {
      emit(g, alpha - 2 * j, 2 * d3 - d1 - d2 + 3 * j - 1, 0);
      emit(g, alpha - 2 * j + 1, 2 * d3 - d1 - d2 + 3 * j - 2, 0);
    }
    int s = d1 + d2 + d3;
    if (alpha % 2 == 0) {
      emit(g, 0, (s - 2) / 2, 0);
      emit(g, 1, (s - 4) / 2, 0);
      for (int j = 1; j <= (alpha - 2) / 2; ++j)
        emit(g, 0, s / 2 - 3 * j, 2 * j, 2 * j - 1);
    } else {
      emit(g, 0, (s - 1) / 2, 0);
      emit(g, 0, (s - 3) / 2, 1);
      for (int j = 1; j <= (alpha - 3) / 2; ++j)
        emit(g, 0, (s - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
    }
    for (int j = 1; j <= d3 - d2; ++j)
      emit(g, 0, 2 * d3 - d1 - d2 - 2 * j + 2, alpha + 2 * j - 2, alpha + j - 2);
    for (int j = 1; j <= d2 - d1; ++j)
      emit(g, 0, d2 - d1 - j + 1, d1 + d3 - d2 + 2 * j - 2, d1 - 1);
    for (int j = 1; j <= d1; ++j) emit(g, 0, 0, d2 + d3 - d1 - 2 + 2 * j, d1 - j);
  }
  return g;
}

}  // namespace

MonomialIdeal closed_form_gin(int d1, int d2, int d3) {
  if (!(2 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::domain_error("closed_form_gin needs 2 <= d1 <= d2 <= d3");
  MonomialIdeal J = MonomialIdeal::make(3, gin_family(d1, d2, d3));
  // the family must be strongly stable with the CI Hilbert function
  {
    bool ok = true;
    for (const Monomial& g : J.gens) {
      for (int i = 2; i <= 3 && ok; ++i) {
        if (!g.exp(i)) continue;
        Monomial base = g;
        base.e[i - 1] -= 1;
        for (int j = 1; j < i; ++j)
          if (!J.contains(base.mul_var(j))) ok = false;
      }
    }
    if (!ok) throw std::logic_error("closed-form family is not strongly stable");
    Degree top = static_cast<Degree>(d1 + d2 + d3 - 3);
    if (hilbert_quotient(J, top) != hilbert_ci({d1, d2, d3}))
      throw std::logic_error("closed-form family has the wrong Hilbert function");
  }
  return J;
}

unsigned long long generator_count(int d1, int d2, int d3) {
  if (!(2 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::domain_error("generator_count needs 2 <= d1 <= d2 <= d3");
  unsigned long long mu;
  if (d1 == d2 && d2 == d3) {
    unsigned long long d = d1;
    mu = d % 2 ? 1 + d * (d + 1) / 2 + (d + 1) * (d + 1) / 4
               : 1 + d * (d + 1) / 2 + d * (d + 2) / 4;
  } else if (d1 == d2 && 2 * d1 <= d3 + 1) {
    unsigned long long d = d1;
    mu = d * d + d + 1;
  } else if (d1 == d2) {
    unsigned long long d = d1, e = 2 * d - d3;
    mu = d3 % 2 == 0 ? d * (d + 1) - (e / 2) * (e / 2) + 1
                     : d * (d + 1) - (e * e - 1) / 4 + 1;
  } else if (d2 == d3) {
    unsigned long long a = d1, d = d2;
    mu = d1 % 2 == 0 ? a * (d + 1) - (a / 2) * (a / 2) + 1
                     : a * (d + 1) - (a * a - 1) / 4 + 1;
  } else if (d1 + d2 <= d3 + 1) {
    mu = 1ULL + d1 + 1ULL * d1 * d2;
  } else {
    unsigned long long alpha = d1 + d2 - d3;
    mu = alpha % 2 == 0 ? 1ULL * d1 * (d2 + 1) - (alpha / 2) * (alpha / 2) + 1
                        : 1ULL * d1 * (d2 + 1) - (alpha * alpha - 1) / 4 + 1;
  }
  if (mu != closed_form_gin(d1, d2, d3).gens.size())
    throw std::logic_error("generator count formula disagrees with the family");
  return mu;
}

// ---- constructive search --------------------------------------------------

namespace {

struct GinSearch {
  int n;
  std::vector<int> degrees;
  HilbertFn H;
  Degree kmax;  // degree of the final generator x_n^{kmax}
  GinOptions opt;
  unsigned long long nodes = 0;
  Degree deepest = 0;
  Degree first_degree;  // smallest degree with a nonempty slice
  std::vector<MonomialIdeal> found;
  std::set<std::string> seen;
  std::vector<Monomial> additions;  // accumulated minimal generators

  explicit GinSearch(const std::vector<int>& degs, const GinOptions& o)
      : n(static_cast<int>(degs.size())), degrees(degs), opt(o) {
    H = hilbert_ci(degrees);
    Degree top = 0;
    for (int d : degrees) top += d - 1;
    kmax = top + 1;
    first_degree = static_cast<Degree>(*std::min_element(degrees.begin(), degrees.end()));
  }

  long long target(Degree k) const {
    return static_cast<long long>(count_monomials(n, k)) - H.value(k);
  }

  void tick() {
    if (++nodes > opt.node_budget)
      throw GinBudgetExceeded("construct_gin: node budget exceeded", deepest);
  }

  bool in_sorted(const std::vector<Monomial>& v, const Monomial& m) const {
    return std::binary_search(v.begin(), v.end(), m, revlex_greater);
  }

  // every strongly-stable raise of m must already be present
  bool raises_present(const Monomial& m, const std::vector<Monomial>& shad,
                      const std::vector<Monomial>& chosen) const {
    for (int i = 2; i <= n; ++i) {
      if (!m.exp(i)) continue;
      Monomial base = m;
      base.e[i - 1] -= 1;
      for (int j = 1; j < i; ++j) {
        Monomial up = base.mul_var(j);
        if (!in_sorted(shad, up) && !in_sorted(chosen, up)) return false;
      }
    }
    return true;
  }

  // multiplication by x_n^b must stay injective where dimensions grow
  bool injectivity_allows(const Monomial& m, Degree k) const {
    for (Degree b = 1; b <= m.exp(n) && b <= k; ++b)
      if (H.value(k - b) <= H.value(k)) return false;
    return true;
  }

  bool surjectivity_holds(const std::vector<Monomial>& slice, Degree k) const {
    Degree bmax = 0;
    for (Degree b = 1; b <= k; ++b)
      if (H.value(k - b) >= H.value(k)) bmax = std::max(bmax, b);
    if (!bmax) return true;
    for (const Monomial& w : all_monomials(n, k)) {
      if (in_sorted(slice, w)) continue;
      for (Degree b = 1; b <= bmax; ++b)
        if (H.value(k - b) >= H.value(k) && w.exp(n) < b) return false;
    }
    return true;
  }

  void finish() {
    MonomialIdeal J = MonomialIdeal::make(n, additions);
    std::string key = to_string(J);
    if (seen.count(key)) return;
    // the growth filters prune; only the complete predicates admit
    if (!full_predicates(J)) return;
    seen.insert(key);
    found.push_back(std::move(J));
  }

  bool full_predicates(const MonomialIdeal& J) {
    Degree top = kmax - 1;
    if (hilbert_quotient(J, top) != H) return false;
    for (const Monomial& g : J.gens)
      for (int i = 2; i <= n; ++i) {
        if (!g.exp(i)) continue;
        Monomial base = g;
        base.e[i - 1] -= 1;
        for (int j = 1; j < i; ++j)
          if (!J.contains(base.mul_var(j))) return false;
      }
    return check_lefschetz(J, /*strong=*/true).holds;
  }

  void grow(Degree k, const std::vector<Monomial>& prev_slice) {
    if (k > kmax) {
      finish();
      return;
    }
    deepest = std::max(deepest, k);
    std::vector<Monomial> shad = shadow(prev_slice, n);
    long long need = target(k) - static_cast<long long>(shad.size());
    if (need < 0) return;
    std::vector<Monomial> candidates;
    if (need > 0 || opt.forced_schedule) {
      for (const Monomial& w : all_monomials(n, k))
        if (!in_sorted(shad, w) && injectivity_allows(w, k)) candidates.push_back(w);
    }
    if (opt.forced_schedule) {
      DegreeSlices fs(*opt.forced_schedule);
      const std::vector<Monomial>& want = fs.slice(k);
      std::vector<Monomial> chosen;
      for (const Monomial& w : want)
        if (!in_sorted(shad, w)) chosen.push_back(w);
      if (static_cast<long long>(chosen.size()) != need) return;
      for (const Monomial& m : chosen)
        if (!in_sorted(candidates, m) || !raises_present(m, shad, chosen)) return;
      std::vector<Monomial> slice = shad;
      slice.insert(slice.end(), chosen.begin(), chosen.end());
      std::sort(slice.begin(), slice.end(), revlex_greater);
      if (!surjectivity_holds(slice, k)) return;
      std::size_t before = additions.size();
      additions.insert(additions.end(), chosen.begin(), chosen.end());
      grow(k + 1, slice);
      additions.resize(before);
      return;
    }
    if (need == 0) {
      if (!surjectivity_holds(shad, k)) return;
      grow(k + 1, shad);
      return;
    }
    if (static_cast<long long>(candidates.size()) < need) return;
    if (opt.revlex_first_slice && k == first_degree) {
      // the slice itself must be the revlex-top segment
      std::vector<Monomial> all = all_monomials(n, k);
      std::vector<Monomial> chosen(all.begin(), all.begin() + need);
      for (const Monomial& m : chosen)
        if (!in_sorted(candidates, m) || !raises_present(m, shad, chosen)) return;
      commit(k, shad, chosen);
      return;
    }
    std::vector<Monomial> chosen;
    pick(k, shad, candidates, 0, need, chosen);
  }

  void pick(Degree k, const std::vector<Monomial>& shad,
            const std::vector<Monomial>& candidates, std::size_t from, long long left,
            std::vector<Monomial>& chosen) {
    tick();
    if (left == 0) {
      commit(k, shad, chosen);
      return;
    }
    for (std::size_t idx = from;
         idx + static_cast<std::size_t>(left) <= candidates.size(); ++idx) {
      const Monomial& m = candidates[idx];
      if (!raises_present(m, shad, chosen)) continue;
      chosen.push_back(m);
      pick(k, shad, candidates, idx + 1, left - 1, chosen);
      chosen.pop_back();
    }
  }

  void commit(Degree k, const std::vector<Monomial>& shad,
              const std::vector<Monomial>& chosen) {
    std::vector<Monomial> slice = shad;
    slice.insert(slice.end(), chosen.begin(), chosen.end());
    std::sort(slice.begin(), slice.end(), revlex_greater);
    if (!surjectivity_holds(slice, k)) return;
    std::size_t before = additions.size();
    additions.insert(additions.end(), chosen.begin(), chosen.end());
    grow(k + 1, slice);
    additions.resize(before);
  }
};

}  // namespace

std::vector<MonomialIdeal> construct_gin(const std::vector<int>& degrees,
                                         const GinOptions& options) {
  if (degrees.size() < 2) throw std::domain_error("construct_gin needs n >= 2");
  for (int d : degrees)
    if (d < 2) throw std::domain_error("construct_gin needs degrees >= 2");
  GinSearch search(degrees, options);
  std::vector<Monomial> empty;
  search.grow(1, empty);
  if (search.found.empty())
    throw GinNoSolution("construct_gin: no ideal satisfies the constraints; deepest degree " +
                            std::to_string(search.deepest),
                        search.deepest);
  std::sort(search.found.begin(), search.found.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return to_string(a) < to_string(b);
            });
  return search.found;
}

bool verify_gin_schedule(const std::vector<int>& degrees, const MonomialIdeal& J,
                         const GinOptions& options) {
  GinOptions opt = options;
  opt.forced_schedule = &J;
  opt.revlex_first_slice = false;
  try {
    std::vector<MonomialIdeal> got = construct_gin(degrees, opt);
    return got.size() == 1 && got[0] == J;
  } catch (const GinNoSolution&) {
    return false;
  }
}

}  // namespace mical
