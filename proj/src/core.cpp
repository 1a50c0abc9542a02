#include "mical/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace mical {

void throw_overflow(const std::string& what) {
  throw std::overflow_error("exponent overflow: " + what);
}

Exponent checked_add(Exponent a, Exponent b) {
  unsigned long long s = static_cast<unsigned long long>(a) + b;
  if (s > std::numeric_limits<Exponent>::max()) throw_overflow("addition");
  return static_cast<Exponent>(s);
}

Degree checked_degree(unsigned long long v) {
  if (v > std::numeric_limits<Degree>::max()) throw_overflow("degree accumulation");
  return static_cast<Degree>(v);
}

unsigned long long checked_mul64(unsigned long long a, unsigned long long b) {
  if (b != 0 && a > std::numeric_limits<unsigned long long>::max() / b)
    throw std::overflow_error("64-bit product overflow");
  return a * b;
}

Monomial Monomial::power(int n, int i, Exponent k) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  Monomial u = unit(n);
  u.e[i - 1] = k;
  return u;
}

Degree Monomial::degree() const {
  unsigned long long d = 0;
  for (Exponent x : e) d += x;
  if (d > std::numeric_limits<Degree>::max()) throw_overflow("degree");
  return static_cast<Degree>(d);
}

bool Monomial::is_unit() const {
  for (Exponent x : e)
    if (x) return false;
  return true;
}

int Monomial::max_var() const {
  for (int i = vars(); i >= 1; --i)
    if (e[i - 1]) return i;
  return 0;
}

bool Monomial::divides(const Monomial& w) const {
  for (int i = 0; i < vars(); ++i)
    if (e[i] > w.e[i]) return false;
  return true;
}

Monomial Monomial::mul(const Monomial& w) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) r.e[i] = checked_add(r.e[i], w.e[i]);
  return r;
}

Monomial Monomial::mul_var(int i, Exponent k) const {
  Monomial r(*this);
  r.e[i - 1] = checked_add(r.e[i - 1], k);
  return r;
}

Monomial Monomial::div_exact(const Monomial& w) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) {
    if (w.e[i] > r.e[i]) throw std::invalid_argument("division is not exact");
    r.e[i] -= w.e[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& w) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) r.e[i] = std::min(r.e[i], w.e[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& w) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) r.e[i] = std::max(r.e[i], w.e[i]);
  return r;
}

Monomial Monomial::colon_by(const Monomial& w) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) r.e[i] -= std::min(r.e[i], w.e[i]);
  return r;
}

Monomial Monomial::with_var_zeroed(int i) const {
  Monomial r(*this);
  r.e[i - 1] = 0;
  return r;
}

Monomial Monomial::restricted(int m) const {
  if (max_var() > m) throw std::invalid_argument("monomial does not lie in the subring");
  Monomial r;
  r.e.assign(e.begin(), e.begin() + m);
  return r;
}

Monomial Monomial::extended(int n) const {
  if (n < vars()) throw std::invalid_argument("extension must not shrink the ring");
  Monomial r(*this);
  r.e.resize(n, 0);
  return r;
}

bool revlex_greater(const Monomial& u, const Monomial& v) {
  // last nonzero entry of e(u) - e(v) negative  <=>  u > v
  for (int i = u.vars() - 1; i >= 0; --i) {
    if (u.e[i] != v.e[i]) return u.e[i] < v.e[i];
  }
  return false;
}

bool revlex_less(const Monomial& u, const Monomial& v) { return revlex_greater(v, u); }

bool canonical_less(const Monomial& u, const Monomial& v) {
  Degree du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  return revlex_greater(u, v);
}

static void all_monomials_rec(int i, Degree rest, Monomial& cur,
                              std::vector<Monomial>& out) {
  if (i == 0) {
    cur.e[0] = rest;
    out.push_back(cur);
    cur.e[0] = 0;
    return;
  }
  // small exponents on the late variables first: revlex descending
  for (Degree k = 0; k <= rest; ++k) {
    cur.e[i] = k;
    all_monomials_rec(i - 1, rest - k, cur, out);
  }
  cur.e[i] = 0;
}

std::vector<Monomial> all_monomials(int n, Degree k) {
  std::vector<Monomial> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(count_monomials(n, k)));
  Monomial cur = Monomial::unit(n);
  all_monomials_rec(n - 1, k, cur, out);
  return out;
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    unsigned long long num = n - k + i;
    unsigned long long g = std::__gcd(num, i);
    num /= g;
    unsigned long long den = i / g;  // divides r exactly since gcd(num, den) = 1
    r /= den;
    if (num != 0 && r > std::numeric_limits<unsigned long long>::max() / num)
      throw std::overflow_error("binomial overflow");
    r *= num;
  }
  return r;
}

unsigned long long count_monomials(int n, Degree k) {
  return binomial(static_cast<unsigned long long>(k) + n - 1, n - 1);
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (const Monomial& u : monomials) {
    bool divisible = false;
    for (const Monomial& g : kept) {
      if (g.degree() > u.degree()) break;  // kept is degree-sorted
      if (g.divides(u)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(u);
  }
  return kept;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> monomials) {
  for (const Monomial& u : monomials)
    if (u.vars() != n) throw std::invalid_argument("mixed ambient variable counts");
  MonomialIdeal I;
  I.n = n;
  I.gens = minimalize(std::move(monomials));
  return I;
}

MonomialIdeal MonomialIdeal::whole_ring(int n) {
  return make(n, {Monomial::unit(n)});
}

bool MonomialIdeal::contains(const Monomial& w) const {
  Degree dw = w.degree();
  for (const Monomial& g : gens) {
    if (g.degree() > dw) return false;
    if (g.divides(w)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  if (n != J.n) throw std::invalid_argument("ambient mismatch");
  for (const Monomial& g : J.gens)
    if (!contains(g)) return false;
  return true;
}

Degree MonomialIdeal::degree() const {
  if (!is_proper_nonzero()) throw std::domain_error("deg(I) needs a proper nonzero ideal");
  Degree d = 0;
  for (const Monomial& g : gens) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::max_var() const {
  if (!is_proper_nonzero()) throw std::domain_error("m(I) needs a proper nonzero ideal");
  int m = 0;
  for (const Monomial& g : gens) m = std::max(m, g.max_var());
  return m;
}

Degree MonomialIdeal::q_bound() const {
  return static_cast<Degree>(max_var()) * (degree() - 1) + 1;
}

bool MonomialIdeal::is_artinian() const {
  if (is_unit()) return true;
  // Artinian iff a pure power of every variable is among the generators.
  std::vector<bool> seen(n, false);
  for (const Monomial& g : gens) {
    int support = 0, last = 0;
    for (int i = 1; i <= n; ++i)
      if (g.exp(i)) { ++support; last = i; }
    if (support == 1) seen[last - 1] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) return false;
  return true;
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("ambient mismatch");
  std::vector<Monomial> all = I.gens;
  all.insert(all.end(), J.gens.begin(), J.gens.end());
  return MonomialIdeal::make(I.n, std::move(all));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("ambient mismatch");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.n);
  std::vector<Monomial> prods;
  prods.reserve(I.gens.size() * J.gens.size());
  for (const Monomial& u : I.gens)
    for (const Monomial& v : J.gens) prods.push_back(u.mul(v));
  return MonomialIdeal::make(I.n, std::move(prods));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("positive power required");
  MonomialIdeal P = I;
  for (int i = 1; i < k; ++i) P = ideal_product(P, I);
  return P;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("ambient mismatch");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.n);
  std::vector<Monomial> lcms;
  lcms.reserve(I.gens.size() * J.gens.size());
  for (const Monomial& u : I.gens)
    for (const Monomial& v : J.gens) lcms.push_back(u.lcm(v));
  return MonomialIdeal::make(I.n, std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
  if (I.n != v.vars()) throw std::invalid_argument("ambient mismatch");
  std::vector<Monomial> quots;
  quots.reserve(I.gens.size());
  for (const Monomial& g : I.gens) quots.push_back(g.colon_by(v));
  return MonomialIdeal::make(I.n, std::move(quots));
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("ambient mismatch");
  if (J.is_zero()) return MonomialIdeal::whole_ring(I.n);
  MonomialIdeal R = colon(I, J.gens[0]);
  for (std::size_t k = 1; k < J.gens.size(); ++k)
    R = ideal_intersection(R, colon(I, J.gens[k]));
  return R;
}

MonomialIdeal saturate(const MonomialIdeal& I, int j) {
  if (j < 1 || j > I.n) throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> dropped;
  dropped.reserve(I.gens.size());
  for (const Monomial& g : I.gens) dropped.push_back(g.with_var_zeroed(j));
  return MonomialIdeal::make(I.n, std::move(dropped));
}

MonomialIdeal truncate(const MonomialIdeal& I, Degree e) {
  std::vector<Monomial> out;
  for (const Monomial& g : I.gens) {
    Degree d = g.degree();
    if (d >= e) {
      out.push_back(g);
    } else {
      for (const Monomial& w : all_monomials(I.n, e - d)) out.push_back(g.mul(w));
    }
  }
  return MonomialIdeal::make(I.n, std::move(out));
}

std::vector<Monomial> shadow(const std::vector<Monomial>& set, int n) {
  if (!set.empty()) {
    Degree d = set.front().degree();
    for (const Monomial& u : set)
      if (u.degree() != d) throw std::invalid_argument("shadow needs equal degrees");
  }
  std::vector<Monomial> out;
  out.reserve(set.size() * n);
  for (const Monomial& u : set)
    for (int i = 1; i <= n; ++i) out.push_back(u.mul_var(i));
  std::sort(out.begin(), out.end(), revlex_greater);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, Degree k) {
  std::vector<Monomial> out;
  for (const Monomial& w : all_monomials(I.n, k))
    if (!I.contains(w)) out.push_back(w);
  return out;
}

DegreeSlices::DegreeSlices(const MonomialIdeal& I) : ideal_(I) {}

const std::vector<Monomial>& DegreeSlices::slice(Degree k) {
  while (slices_.size() <= k) {
    Degree d = static_cast<Degree>(slices_.size());
    std::vector<Monomial> s =
        d == 0 ? std::vector<Monomial>{} : shadow(slices_[d - 1], ideal_.n);
    for (const Monomial& g : ideal_.gens)
      if (g.degree() == d) s.push_back(g);
    std::sort(s.begin(), s.end(), revlex_greater);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    slices_.push_back(std::move(s));
  }
  return slices_[k];
}

bool DegreeSlices::member(const Monomial& w) {
  const std::vector<Monomial>& s = slice(w.degree());
  return std::binary_search(s.begin(), s.end(), w, revlex_greater);
}

unsigned long long DegreeSlices::standard_count(Degree k) {
  return count_monomials(ideal_.n, k) - slice(k).size();
}

// ---- parsing / printing ------------------------------------------------

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

unsigned long long parse_number(Cursor& c, const char* what) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    throw ParseError(std::string("expected ") + what, c.i);
  unsigned long long v = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    v = v * 10 + (c.s[c.i] - '0');
    if (v > std::numeric_limits<Exponent>::max())
      throw ParseError(std::string(what) + " overflow", start);
    ++c.i;
  }
  return v;
}

Monomial parse_monomial_at(Cursor& c, int n) {
  Monomial u = Monomial::unit(n);
  if (c.peek() == '1') {
    c.take();
    return u;
  }
  for (;;) {
    c.skip_ws();
    std::size_t at = c.i;
    if (c.peek() != 'x') throw ParseError("expected 'x<i>' factor", c.i);
    c.take();
    unsigned long long idx = parse_number(c, "variable index");
    if (idx < 1 || idx > static_cast<unsigned long long>(n))
      throw ParseError("variable index out of range", at);
    Exponent k = 1;
    if (c.peek() == '^') {
      c.take();
      unsigned long long ex = parse_number(c, "exponent");
      if (ex < 1) throw ParseError("exponent must be positive", at);
      k = static_cast<Exponent>(ex);
    }
    u.e[idx - 1] = checked_add(u.e[idx - 1], k);
    if (c.peek() != '*') break;
    c.take();
  }
  return u;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("ambient variable count must be >= 1");
  Cursor c{text};
  Monomial u = parse_monomial_at(c, n);
  if (!c.eof()) throw ParseError("trailing input", c.i);
  return u;
}

MonomialIdeal parse_ideal(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("ambient variable count must be >= 1");
  Cursor c{text};
  if (c.peek() != '(') throw ParseError("expected '('", c.i);
  c.take();
  std::vector<Monomial> gens;
  if (c.peek() == ')') {
    c.take();  // "()" is the zero ideal
  } else {
    for (;;) {
      gens.push_back(parse_monomial_at(c, n));
      char ch = c.peek();
      if (ch == ',') {
        c.take();
        continue;
      }
      if (ch == ')') {
        c.take();
        break;
      }
      throw ParseError("expected ',' or ')'", c.i);
    }
  }
  if (!c.eof()) throw ParseError("trailing input", c.i);
  return MonomialIdeal::make(n, std::move(gens));
}

int scan_max_index(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      int v = 0;
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + (text[j] - '0');
        ++j;
      }
      best = std::max(best, v);
    }
  }
  return best;
}

std::string to_string(const Monomial& u) {
  if (u.is_unit()) return "1";
  std::string s;
  for (int i = 1; i <= u.vars(); ++i) {
    if (!u.exp(i)) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (u.exp(i) > 1) {
      s += '^';
      s += std::to_string(u.exp(i));
    }
  }
  return s;
}

std::string to_string(const MonomialIdeal& I) {
  std::string s = "(";
  for (std::size_t k = 0; k < I.gens.size(); ++k) {
    if (k) s += ',';
    s += to_string(I.gens[k]);
  }
  s += ')';
  return s;
}

}  // namespace mical
