#include "mical/hilbert.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <list>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace mical {

Degree HilbertFn::top_nonzero() const {
  for (std::size_t k = h.size(); k-- > 0;)
    if (h[k]) return static_cast<Degree>(k);
  return 0;
}

HilbertFn hilbert_ci(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("hilbert_ci needs at least one degree");
  std::vector<long long> h{1};
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("hilbert_ci needs positive degrees");
    std::vector<long long> next(h.size() + d - 1, 0);
    for (std::size_t k = 0; k < h.size(); ++k)
      for (int i = 0; i < d; ++i) next[k + i] += h[k];
    h = std::move(next);
  }
  return HilbertFn{std::move(h)};
}

// ---- quotient Hilbert function ------------------------------------------

namespace {

class HilbertMemo {
 public:
  explicit HilbertMemo(std::size_t cap) : cap_(cap) {}

  const std::vector<long long>* find(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second.second);
    return &it->second.first;
  }

  void insert(const std::string& key, std::vector<long long> value) {
    if (map_.count(key)) return;
    order_.push_front(key);
    map_.emplace(key, std::make_pair(std::move(value), order_.begin()));
    if (map_.size() > cap_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

 private:
  std::size_t cap_;
  std::list<std::string> order_;
  std::unordered_map<std::string,
                     std::pair<std::vector<long long>, std::list<std::string>::iterator>>
      map_;
};

std::vector<long long> quotient_counts(const MonomialIdeal& I, Degree upto,
                                       HilbertMemo& memo) {
  std::vector<long long> h(upto + 1, 0);
  if (I.is_unit()) return h;
  if (I.is_zero()) {
    for (Degree k = 0; k <= upto; ++k)
      h[k] = static_cast<long long>(count_monomials(I.n, k));
    return h;
  }
  if (I.n == 1) {
    Degree a = I.gens[0].degree();
    for (Degree k = 0; k <= upto && k < a; ++k) h[k] = 1;
    return h;
  }
  std::string key = std::to_string(I.n) + ":" + to_string(I);
  if (const auto* hit = memo.find(key); hit && hit->size() >= h.size()) {
    std::copy(hit->begin(), hit->begin() + h.size(), h.begin());
    return h;
  }
  // split along x_n:  H(S/I, k) = H(S/(I : x_n), k-1) + H(S/(I + (x_n)), k)
  MonomialIdeal quot = colon(I, Monomial::power(I.n, I.n, 1));
  std::vector<Monomial> surviving;
  for (const Monomial& g : I.gens)
    if (!g.exp(I.n)) surviving.push_back(g.restricted(I.n - 1));
  MonomialIdeal modded = MonomialIdeal::make(I.n - 1, std::move(surviving));
  std::vector<long long> hq =
      upto ? quotient_counts(quot, upto - 1, memo) : std::vector<long long>{};
  std::vector<long long> hm = quotient_counts(modded, upto, memo);
  for (Degree k = 0; k <= upto; ++k)
    h[k] = (k ? hq[k - 1] : 0) + hm[k];
  memo.insert(key, h);
  return h;
}

}  // namespace

HilbertFn hilbert_quotient(const MonomialIdeal& I, Degree upto, std::size_t memo_capacity) {
  HilbertMemo memo(memo_capacity);
  HilbertFn H{quotient_counts(I, upto, memo)};
  // low-degree agreement with direct counting
  DegreeSlices slices(I);
  for (Degree k = 0; k <= std::min<Degree>(upto, 8); ++k) {
    if (H.h[k] != static_cast<long long>(slices.standard_count(k)))
      throw std::logic_error("hilbert_quotient disagrees with direct enumeration");
  }
  return H;
}

// ---- piecewise transcriptions -------------------------------------------

namespace {

struct Frac {
  long long num = 0;
  long long den = 1;
  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  bool integral() const { return den == 1; }
  std::string str() const {
    return integral() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

long long binom_s(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return static_cast<long long>(binomial(static_cast<unsigned long long>(n),
                                         static_cast<unsigned long long>(k)));
}

using Eval = std::function<std::optional<Frac>(long long)>;

struct Piece {
  std::string name;
  long long lo = 0, hi = -1;  // inclusive k-range as stated
  Eval f;
};

void run_pieces(PiecewiseReport& rep, const std::string& case_name,
                std::vector<long long> oracle, const std::vector<Piece>& pieces) {
  rep.case_name = case_name;
  rep.oracle = std::move(oracle);
  long long size = static_cast<long long>(rep.oracle.size());
  rep.values.assign(rep.oracle.size(), LLONG_MIN);
  for (const Piece& p : pieces) {
    long long lo = std::max<long long>(p.lo, 0);
    long long hi = std::min<long long>(p.hi, size - 1);
    for (long long k = lo; k <= hi; ++k) {
      std::optional<Frac> v = p.f(k);
      if (!v) {
        rep.divergences.push_back(
            {case_name + "#" + p.name, static_cast<Degree>(k), "unresolved", rep.oracle[k]});
        continue;
      }
      if (!v->integral() || v->num != rep.oracle[k])
        rep.divergences.push_back(
            {case_name + "#" + p.name, static_cast<Degree>(k), v->str(), rep.oracle[k]});
      if (rep.values[k] == LLONG_MIN && v->integral()) rep.values[k] = v->num;
    }
  }
  for (long long k = 0; k < size; ++k)
    if (rep.values[k] == LLONG_MIN)
      rep.divergences.push_back(
          {case_name + "#(uncovered)", static_cast<Degree>(k), "none", rep.oracle[k]});
}

// reference to an already-transcribed table entry
Eval table_ref(const PiecewiseReport* rep, std::function<long long(long long)> target) {
  return [rep, target](long long k) -> std::optional<Frac> {
    long long t = target(k);
    if (t < 0 || t >= static_cast<long long>(rep->values.size()) ||
        rep->values[t] == LLONG_MIN)
      return std::nullopt;
    return Frac(rep->values[t]);
  };
}

long long sum_range(long long jmax, std::function<long long(long long)> term) {
  long long s = 0;
  for (long long i = 1; i <= jmax; ++i) s += term(i);
  return s;
}

std::vector<long long> ci_values(const std::vector<int>& degrees, long long size) {
  HilbertFn H = hilbert_ci(degrees);
  std::vector<long long> v(size, 0);
  for (long long k = 0; k < size && k < static_cast<long long>(H.h.size()); ++k)
    v[k] = H.h[k];
  return v;
}

std::vector<long long> jk_oracle(const std::vector<int>& degrees, int n, long long size) {
  HilbertFn H = hilbert_ci(degrees);
  std::vector<long long> v(size, 0);
  for (long long k = 0; k < size; ++k)
    v[k] = static_cast<long long>(count_monomials(n, static_cast<Degree>(k))) -
           H.value(static_cast<Degree>(k));
  return v;
}

void require_triple(int d1, int d2, int d3) {
  if (!(2 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::domain_error("need 2 <= d1 <= d2 <= d3");
}

}  // namespace

PiecewiseReport piecewise_hilbert(int d1, int d2, int d3) {
  require_triple(d1, d2, d3);
  long long T = d1 + d2 + d3 - 3;
  PiecewiseReport rep;  // filled by run_pieces; referenced by symmetry pieces
  auto C2 = [](long long m) { return binom_s(m + 2, 2); };

  std::vector<Piece> pieces;
  std::string name;
  if (d1 == d2 && d2 == d3) {
    int d = d1;
    name = "hf(d,d,d)";
    pieces = {
        {"1", 0, d - 1, [&](long long k) { return Frac(C2(k)); }},
        {"2", d - 1, d - 1 + (d - 1) / 2,
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(C2(k) * 2 - 3 * j * (j + 1), 2);
         }},
        {"3", (3 * d - 3 + 1) / 2, T, table_ref(&rep, [=](long long k) { return 3 * d - 3 - k; })},
    };
  } else if (d1 == d2 && 2 * d1 <= d3 + 1) {
    int d = d1;
    name = "hf(d,d<d3|2d<=d3+1)";
    pieces = {
        {"1", 0, d - 1, [&](long long k) { return Frac(C2(k)); }},
        {"2", d - 1, 2 * d - 2,
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(binom_s(d + 1, 2) + sum_range(j, [&](long long i) { return d - i; }));
         }},
        {"3", 2 * d - 2, d3 - 1, [=](long long) { return Frac(1LL * d * d); }},
        {"4", d3, T, table_ref(&rep, [=](long long k) { return 2 * d + d3 - 3 - k; })},
    };
  } else if (d1 == d2) {
    int d = d1;
    name = "hf(d,d<d3|2d>d3+1)";
    pieces = {
        {"1", 0, d - 1, [&](long long k) { return Frac(C2(k)); }},
        {"2", d - 1, d - 1 + (d3 - d),
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(binom_s(d + 1, 2) + sum_range(j, [&](long long i) { return d - i; }));
         }},
        {"3", d3 - 1, d3 - 1 + (2 * d - d3 - 1) / 2,
         [=](long long k) {
           long long j = k - (d3 - 1);
           return Frac(binom_s(d + 1, 2) +
                       sum_range(d3 - d, [&](long long i) { return d - i; }) +
                       sum_range(j, [&](long long i) { return 2 * d - d3 - 2 * i; }));
         }},
        {"4", (d3 + 2 * d - 3 + 1) / 2, T,
         table_ref(&rep, [=](long long k) { return d3 + 2 * d - 3 - k; })},
    };
  } else if (d2 == d3) {
    int d = d2;
    name = "hf(d1<d2=d3)";
    pieces = {
        {"1", 0, d1 - 2, [&](long long k) { return Frac(C2(k)); }},
        {"2", d1 - 1, d1 - 1 + (d - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(binom_s(d1 + 1, 2) + j * d1);
         }},
        {"3", d - 1, d - 1 + (d1 - 1) / 2,
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(binom_s(d1 + 1, 2) + 1LL * d1 * (d - d1) +
                       sum_range(j, [&](long long i) { return d1 - 2 * i; }));
         }},
        {"4", (d1 + 2 * d - 3 + 1) / 2, T,
         table_ref(&rep, [=](long long k) { return d1 + 2 * d - 3 - k; })},
    };
  } else if (d1 + d2 <= d3 + 1) {
    name = "hf(d1<d2<d3|d1+d2<=d3+1)";
    pieces = {
        {"1", 0, d1 - 1, [&](long long k) { return Frac(C2(k)); }},
        {"2", d1 - 1, d1 - 1 + (d2 - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(binom_s(d1 + 1, 2) + j * d1);
         }},
        {"3", d2 - 1, d2 - 1 + (d1 - 1),
         [=](long long k) {
           long long j = k - (d2 - 1);
           return Frac(binom_s(d1 + 1, 2) + 1LL * d1 * (d2 - d1) +
                       sum_range(j, [&](long long i) { return d1 - i; }));
         }},
        {"4", d1 + d2 - 2, d3 - 1, [=](long long) { return Frac(1LL * d1 * d2); }},
        {"5", d3, T, table_ref(&rep, [=](long long k) { return d1 + d2 + d3 - 3 - k; })},
    };
  } else {
    int alpha = d1 + d2 - d3;
    name = "hf(d1<d2<d3|d1+d2>d3+1)";
    pieces = {
        {"1", 0, d1 - 2, [&](long long k) { return Frac(C2(k)); }},
        {"2", d1 - 1, d1 - 1 + (d2 - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(binom_s(d1 + 1, 2) + j * d1);
         }},
        {"3", d2 - 1, d2 - 1 + (d3 - d2),
         [=](long long k) {
           long long j = k - (d2 - 1);
           return Frac(binom_s(d1 + 1, 2) + 1LL * d1 * (d2 - d1) +
                       sum_range(j, [&](long long i) { return d1 - i; }));
         }},
        // printed with a constant summand over i = 1..d3-1
        {"4", d3 - 1, d3 - 1 + (alpha - 1) / 2,
         [=](long long k) {
           long long j = k - (d3 - 1);
           return Frac(binom_s(d1 + 1, 2) + 1LL * d1 * (d2 - d1) +
                       (d3 - 1) * (d1 - j) +
                       sum_range(j, [&](long long i) { return alpha - 2 * i; }));
         }},
        {"5", d3 - 1 + (alpha - 1) / 2 + 1, T,
         table_ref(&rep, [=](long long k) { return d1 + d2 + d3 - 3 - k; })},
    };
  }
  run_pieces(rep, name + "[" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                      std::to_string(d3) + "]",
             ci_values({d1, d2, d3}, T + 1), pieces);
  return rep;
}

PiecewiseReport piecewise_hilbert(int n, int d) {
  if (n < 1 || d < 2) throw std::domain_error("need n >= 1 and d >= 2");
  long long T = static_cast<long long>(n) * (d - 1);
  PiecewiseReport rep;
  std::vector<Piece> pieces = {
      {"1", 0, d - 1, [=](long long k) { return Frac(binom_s(k + n - 1, n - 1)); }},
      {"2", d, n * (d - 1) / 2,
       [=](long long k) {
         long long j = k - d;
         return Frac(binom_s(k + n - 1, n - 1) - n * binom_s(j + n - 1, n - 1));
       }},
      {"3", (n * (d - 1) + 1) / 2, T,
       table_ref(&rep, [=](long long k) { return n * (d - 1) - k; })},
  };
  run_pieces(rep, "hf(n,d)[" + std::to_string(n) + "," + std::to_string(d) + "]",
             ci_values(std::vector<int>(n, d), T + 1), pieces);
  return rep;
}

PiecewiseReport jk_counts(int d1, int d2, int d3) {
  require_triple(d1, d2, d3);
  long long T = d1 + d2 + d3 - 3;
  long long size = T + 3;
  PiecewiseReport rep;
  std::vector<Piece> pieces;
  std::string name;
  auto Sk = [&](long long k) {
    return static_cast<long long>(count_monomials(3, static_cast<Degree>(k)));
  };
  if (d1 == d2 && d2 == d3) {
    int d = d1;
    name = "jk(d,d,d)";
    pieces = {
        {"1", 0, d - 1, [](long long) { return Frac(0); }},
        {"2", d - 1, d - 1 + (3 * d - 1) / 2,
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(3 * j * (j + 1), 2);
         }},
        {"3", d % 2 == 0 ? (3 * d - 2) / 2 : (3 * d - 3) / 2,
         d % 2 == 0 ? (3 * d - 2) / 2 + (d - 2) / 2 : (3 * d - 3) / 2 + (d - 1) / 2,
         [=](long long k) {
           if (d % 2 == 0) {
             long long j = k - (3 * d - 2) / 2;
             return Frac(3LL * d * d + 3LL * d * (4 * j + 2), 8) + Frac(3 * j * (j + 1), 2);
           }
           long long j = k - (3 * d - 3) / 2;
           return Frac(3LL * (1LL * d * d - 1) + 12LL * j * d, 8) + Frac(3 * j * j, 2);
         }},
        {"4", 2 * d - 2, 2 * d - 2 + (d - 1),
         [=](long long k) {
           long long j = k - (2 * d - 2);
           return Frac(3LL * d * (d - 1), 2) + Frac(3 * j * d);
         }},
        {"5", 3 * d - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  } else if (d1 == d2 && 2 * d1 <= d3 + 1) {
    int d = d1;
    name = "jk(d,d<d3|2d<=d3+1)";
    pieces = {
        {"1", 0, d - 1, [](long long) { return Frac(0); }},
        {"2", d - 1, d - 1 + (d - 1),
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(j * (j + 1));
         }},
        {"3", 2 * d - 2, 2 * d - 2 + (d3 + 1 - 2 * d),
         [=](long long k) {
           long long j = k - (2 * d - 2);
           return Frac(1LL * d * (d - 1) + 2LL * d * j) + Frac(j * (j - 1), 2);
         }},
        {"4", d3 - 1, d3 - 1 + (d - 1),
         [=](long long k) {
           long long j = k - (d3 - 1);
           return Frac(1LL * d3 * (d3 + 1), 2) + Frac(-1LL * d * d + j * d3 + j * (j + 1));
         }},
        {"5", d + d3 - 2, d + d3 - 2 + d,
         [=](long long k) {
           long long j = k - (d + d3 - 2);
           return Frac(1LL * d3 * (d3 - 1), 2) + Frac(1LL * d * (d3 - 1) + j * (d3 + 2 * d));
         }},
        {"6", 2 * d + d3 - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  } else if (d1 == d2) {
    int d = d1;
    name = "jk(d,d<d3|2d>d3+1)";
    pieces = {
        {"1", 0, d - 1, [](long long) { return Frac(0); }},
        {"2", d - 1, d - 1 + (d3 - d),
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(j * (j + 1));
         }},
        {"3", d3 - 1, d3 - 1 + (2 * d - d3 - 1) / 2,
         [=](long long k) {
           long long j = k - (d3 - 1);
           return Frac(1LL * d3 * d3 + d3 - 1LL * d * d - d - 2LL * d * d3 +
                       j * (2 * d3 - d)) +
                  Frac(3 * j * (j + 1), 2);
         }},
        {"4", d3 % 2 == 0 ? (2 * d + d3 - 2) / 2 : (2 * d + d3 - 3) / 2,
         d3 % 2 == 0 ? (2 * d + d3 - 2) / 2 + (2 * d - d3 - 2) / 2
                     : (2 * d + d3 - 3) / 2 + (2 * d - d3 - 1) / 2,
         [=](long long k) {
           if (d3 % 2 == 0) {
             long long j = k - (2 * d + d3 - 2) / 2;
             return Frac(4LL * d * d + 3LL * d3 * d3 - 4LL * d * d3 + 4LL * d, 8) +
                    Frac(j * (2 * d + d3), 2) + Frac(3 * j * (j + 1), 2);
           }
           long long j = k - (2 * d + d3 - 3) / 2;
           return Frac(3LL * d3 * d3 + 4LL * d * d - 4LL * d * d3 - 3, 2) +
                  Frac(j * (2 * d + d3 - 3), 2) + Frac(3 * j * (j + 1), 2);
         }},
        {"5", 2 * d - 2, 2 * d - 2 + (d3 - d),
         [=](long long k) {
           long long j = k - (2 * d - 2);
           return Frac(3LL * d * d - 2LL * d) + Frac(1LL * d3 * (d3 + 1), 2) +
                  Frac(-2LL * d * d3 + (4LL * d - d3) * j + j * (j - 1));
         }},
        {"6", d3 + d - 2, d3 + d - 2 + (d - 1),
         [=](long long k) {
           long long j = k - (d3 + d - 2);
           return Frac(1LL * (d + d3) * (d + d3 - 1), 2) - Frac(1LL * d * (d + 1), 2) +
                  Frac(j * (2 * d + d3));
         }},
        {"7", 2 * d + d3 - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  } else if (d2 == d3) {
    int d = d2;
    name = "jk(d1<d2=d3)";
    pieces = {
        {"1", 0, d1 - 1, [](long long) { return Frac(0); }},
        {"2", d1 - 1, d1 - 1 + (d - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(j * (j + 1), 2);
         }},
        {"3", d - 1, d - 1 + (d1 - 1) / 2,
         [=](long long k) {
           long long j = k - (d - 1);
           return Frac(1LL * (d - d1) * (d - d1 - 1), 2) + Frac(j * (d - d1)) +
                  Frac(3 * j * (j + 1), 2);
         }},
        {"4", d1 % 2 == 0 ? (2 * d + d1 - 2) / 2 : (2 * d + d1 - 3) / 2,
         d1 % 2 == 0 ? (2 * d + d1 - 2) / 2 + (d1 - 2) / 2
                     : (2 * d + d1 - 3) / 2 + (d1 - 1) / 2,
         [=](long long k) {
           if (d1 % 2 == 0) {
             long long j = k - (2 * d + d1 - 2) / 2;
             return Frac(3LL * d1 * d1 + 2LL * d1 + 4LL * d * d + 4LL * d - 4LL * d * d1, 8) +
                    Frac(j * (2 * d + d1), 2) + Frac(3 * j * (j + 1), 2);
           }
           long long j = k - (2 * d + d1 - 3) / 2;
           return Frac(3LL * d1 * d1 + 4LL * d * d - 4LL * d * d1 - 3, 2) +
                  Frac(j * (2 * d + d1), 2) + Frac(3 * j * j, 2);
         }},
        {"5", d1 + d - 2, d1 + d - 2 + (d - d1),
         [=](long long k) {
           long long j = k - (d1 + d - 2);
           return Frac(1LL * d * (d - 1), 2) +
                  Frac(1LL * d1 * (d1 - 1) + j * (2 * d1 + d)) + Frac(j * (j - 1), 2);
         }},
        {"6", 2 * d - 2, 2 * d - 2 + (d1 - 1),
         [=](long long k) {
           long long j = k - (2 * d - 2);
           return Frac(2LL * d * (2 * d - 1) - 1LL * d1 * (d1 - 1), 2) +
                  Frac(j * (2 * d + d1));
         }},
        {"7", d1 + 2 * d - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  } else if (d1 + d2 <= d3 + 1) {
    name = "jk(d1<d2<d3|d1+d2<=d3+1)";
    pieces = {
        {"1", 0, d1 - 1, [](long long) { return Frac(0); }},
        {"2", d1 - 1, d1 - 1 + (d2 - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(j * (j + 1), 2);
         }},
        {"3", d2 - 1, d2 - 1 + (d1 - 1),
         [=](long long k) {
           long long j = k - (d2 - 1);
           return Frac(1LL * (d2 - d1) * (d2 - d1 - 1), 2) +
                  Frac(j * (d2 - d1) + j * (j + 1));
         }},
        {"4", d1 + d2 - 2, d1 + d2 - 2 + (d3 - d1 - d2 + 1),
         [=](long long k) {
           long long j = k - (d1 + d2 - 2);
           return Frac(1LL * d1 * d1 + 1LL * d2 * d2 - d1 - d2, 2) +
                  Frac(j * (d1 + d2)) + Frac(j * (j - 1), 2);
         }},
        {"5", d3 - 1, d3 - 1 + (d1 - 1),
         [=](long long k) {
           long long j = k - (d3 - 1);
           return Frac(1LL * d3 * d3 + d3 - 2LL * d1 * d2, 2) +
                  Frac(j * d3 + j * (j + 1));
         }},
        {"6", d1 + d3 - 2, d1 + d3 - 2 + (d2 - d1),
         [=](long long k) {
           long long j = k - (d1 + d3 - 2);
           return Frac(1LL * (d1 + d3) * (d1 + d3 - 1) + 1LL * d1 * d1 - d1 -
                           2LL * d1 * d2,
                       2) +
                  Frac(j * (d3 + 2 * d1)) + Frac(j * (j - 1), 2);
         }},
        {"7", d2 + d3 - 2, d2 + d3 - 2 + (d1 - 1),
         [=](long long k) {
           long long j = k - (d2 + d3 - 2);
           return Frac(1LL * (d2 + d3) * (d2 + d3 - 1) + 1LL * d1 * (d1 - 1), 2) +
                  Frac(j * (d1 + d2 + d3));
         }},
        {"8", d1 + d2 + d3 - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  } else {
    int alpha = d1 + d2 - d3;
    name = "jk(d1<d2<d3|d1+d2>d3+1)";
    pieces = {
        {"1", 0, d1 - 1, [](long long) { return Frac(0); }},
        {"2", d1 - 1, d1 - 1 + (d2 - d1),
         [=](long long k) {
           long long j = k - (d1 - 1);
           return Frac(j * (j + 1), 2);
         }},
        {"3", d2 - 1, d2 - 1 + (d3 - d2),
         [=](long long k) {
           long long j = k - (d2 - 1);
           return Frac(1LL * d2 * (d2 - 1) + j * (d2 - d1) + j * (j + 1));
         }},
        {"4", d3 - 1, d3 - 1 + (alpha - 1) / 2,
         [&rep, d1, d2, d3](long long k) -> std::optional<Frac> {
           long long j = k - (d3 - 1);
           auto base = table_ref(&rep, [=](long long) { return d3 - 1LL; })(k);
           if (!base) return std::nullopt;
           return *base + Frac(j * (2 * d3 - d1 - d2)) + Frac(3 * j * (j + 1), 2);
         }},
        {"5",
         (d1 + d2 + d3) % 2 == 0 ? (d1 + d2 + d3 - 2) / 2 : (d1 + d2 + d3 - 3) / 2,
         (d1 + d2 + d3) % 2 == 0 ? (d1 + d2 + d3 - 2) / 2 + (d1 + d2 - d3 - 2) / 2
                                 : (d1 + d2 + d3 - 3) / 2 + (d1 + d2 - d3 - 1) / 2,
         [&rep, d1, d2, d3](long long k) -> std::optional<Frac> {
           long long sum = d1 + d2 + d3;
           if (sum % 2 == 0) {
             long long j = k - (sum - 2) / 2;
             auto base = table_ref(&rep, [=](long long) { return (sum - 4) / 2; })(k);
             if (!base) return std::nullopt;
             return *base + Frac((j + 1) * sum, 2) + Frac(3 * j * (j + 1), 2);
           }
           long long j = k - (sum - 3) / 2;
           auto base = table_ref(&rep, [=](long long) { return (sum - 3) / 2; })(k);
           if (!base) return std::nullopt;
           return *base + Frac(j * sum, 2) + Frac(3 * j * j, 2);
         }},
        {"6", d1 + d2 - 2, d1 + d2 - 2 + (d3 - d2),
         [&rep, d1, d2, d3](long long k) -> std::optional<Frac> {
           long long j = k - (d1 + d2 - 2);
           auto base = table_ref(&rep, [=](long long) { return d1 + d2 - 2LL; })(k);
           if (!base) return std::nullopt;
           return *base + Frac(j * (2 * d1 + 2 * d2 - d3 - 1) + j * j);
         }},
        {"7", d1 + d3 - 2, d1 + d3 - 2 + (d2 - d1),
         [&rep, d1, d3](long long k) -> std::optional<Frac> {
           long long j = k - (d1 + d3 - 2);
           auto base = table_ref(&rep, [=](long long) { return d1 + d3 - 2LL; })(k);
           if (!base) return std::nullopt;
           return *base + Frac(j * (2 * d1 + d3 - 1)) + Frac(j * (j + 1), 2);
         }},
        // printed with the same k-offset as the previous piece and a
        // reference one past the covered range
        {"8", d1 + d3 - 2, d1 + d3 - 2 + (d1 - 1),
         [&rep, d1, d2, d3](long long k) -> std::optional<Frac> {
           long long j = k - (d1 + d3 - 2);
           auto base = table_ref(&rep, [=](long long) { return d2 + d3 - 1LL; })(k);
           if (!base) return std::nullopt;
           return *base + Frac(j * (d1 + d2 + d3));
         }},
        {"9", d1 + d2 + d3 - 2, size - 1, [&](long long k) { return Frac(Sk(k)); }},
    };
  }
  run_pieces(rep, name + "[" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                      std::to_string(d3) + "]",
             jk_oracle({d1, d2, d3}, 3, size), pieces);
  return rep;
}

PiecewiseReport jk_counts(int n, int d) {
  if (n < 1 || d < 2) throw std::domain_error("need n >= 1 and d >= 2");
  long long T = static_cast<long long>(n) * (d - 1);
  long long size = T + 3;
  PiecewiseReport rep;
  long long ceil_half = (T + 1) / 2;
  long long floor_half = T / 2;
  std::vector<Piece> pieces = {
      {"1", 0, d - 1, [](long long) { return Frac(0); }},
      {"2", d, floor_half,
       [=](long long k) {
         long long j = k - d;
         return Frac(n * binom_s(j + n - 1, n - 1));
       }},
      {"3", ceil_half, 1LL * (n - 1) * (d - 1) - 1,
       [=](long long k) {
         long long j = k - ceil_half;
         return Frac(binom_s(ceil_half + j + n - 1, n - 1) -
                     binom_s(floor_half - j + n - 1, n - 1) +
                     n * binom_s(floor_half - d - j - n, n - 1));
       }},
      {"4", 1LL * (n - 1) * (d - 1), T,
       [=](long long k) {
         long long j = k - 1LL * (n - 1) * (d - 1);
         return Frac(binom_s(1LL * (n - 1) * d + j, n - 1) -
                     binom_s(n - 1 + d - 1 - j, n - 1));
       }},
      {"5", T + 1, size - 1,
       [=](long long k) {
         return Frac(static_cast<long long>(count_monomials(n, static_cast<Degree>(k))));
       }},
  };
  run_pieces(rep, "jk(n,d)[" + std::to_string(n) + "," + std::to_string(d) + "]",
             jk_oracle(std::vector<int>(n, d), n, size), pieces);
  return rep;
}

std::vector<std::string> piecewise_diagnostic_lines(int max_d) {
  // aggregate per (case, piece): count of divergent k and one witness
  struct Agg {
    int count = 0;
    std::string witness;
  };
  std::vector<std::pair<std::string, Agg>> order;
  auto note = [&](const PiecewiseReport& rep) {
    for (const PieceDivergence& d : rep.divergences) {
      std::string key = d.piece;
      auto it = std::find_if(order.begin(), order.end(),
                             [&](const auto& p) { return p.first == key; });
      if (it == order.end()) {
        order.push_back({key, Agg{}});
        it = order.end() - 1;
      }
      it->second.count += 1;
      if (it->second.witness.empty())
        it->second.witness = "k=" + std::to_string(d.k) + " formula=" + d.formula +
                             " product=" + std::to_string(d.oracle);
    }
  };
  for (int d1 = 2; d1 <= max_d; ++d1)
    for (int d2 = d1; d2 <= max_d; ++d2)
      for (int d3 = d2; d3 <= max_d; ++d3) {
        note(piecewise_hilbert(d1, d2, d3));
        note(jk_counts(d1, d2, d3));
      }
  for (int n = 2; n <= 5; ++n)
    for (int d = 2; d <= (n <= 3 ? max_d : 4); ++d) {
      note(piecewise_hilbert(n, d));
      note(jk_counts(n, d));
    }
  std::vector<std::string> lines;
  for (const auto& [key, agg] : order)
    lines.push_back(key + ": " + std::to_string(agg.count) +
                    " divergent value(s); first at " + agg.witness);
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace mical
