#ifndef MICAL_CORE_HPP
#define MICAL_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Monomials with fixed ambient variable count and monomial ideals given by
// their minimal generating set.  Everything here is immutable value data;
// all operations are pure functions.

namespace mical {

using Exponent = std::uint32_t;
using Degree = std::uint32_t;

// Exceeding 32-bit exponents/degrees is reported, never wrapped.
[[noreturn]] void throw_overflow(const std::string& what);

Exponent checked_add(Exponent a, Exponent b);
// Narrow a 64-bit accumulation back to Degree, reporting overflow.
Degree checked_degree(unsigned long long v);
unsigned long long checked_mul64(unsigned long long a, unsigned long long b);

struct Monomial {
  std::vector<Exponent> e;  // e[i] is the exponent of x_{i+1}

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : e(std::move(exps)) {}

  static Monomial unit(int n) { return Monomial(std::vector<Exponent>(n, 0)); }
  // x_i^k, 1-based i
  static Monomial power(int n, int i, Exponent k);

  int vars() const { return static_cast<int>(e.size()); }
  Degree degree() const;
  bool is_unit() const;
  // max index (1-based) of a variable with nonzero exponent; 0 for the unit
  int max_var() const;
  Exponent exp(int i) const { return e[i - 1]; }  // 1-based

  bool divides(const Monomial& w) const;
  Monomial mul(const Monomial& w) const;
  Monomial mul_var(int i, Exponent k = 1) const;
  // requires w | *this
  Monomial div_exact(const Monomial& w) const;
  Monomial gcd(const Monomial& w) const;
  Monomial lcm(const Monomial& w) const;
  // *this / gcd(*this, w); the generator image under (I : w)
  Monomial colon_by(const Monomial& w) const;
  Monomial with_var_zeroed(int i) const;
  // image in K[x_1..m] (requires max_var() <= m)
  Monomial restricted(int m) const;
  // image in K[x_1..n'] for n' >= vars()
  Monomial extended(int n) const;

  bool operator==(const Monomial& w) const { return e == w.e; }
  bool operator!=(const Monomial& w) const { return !(*this == w); }
};

// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n, restricted
// to monomials of equal degree: u > v iff the last nonzero entry of
// e(u) - e(v) is negative.  x_1^d is the maximum of degree d, x_n^d the
// minimum.
bool revlex_greater(const Monomial& u, const Monomial& v);
bool revlex_less(const Monomial& u, const Monomial& v);

// Canonical generator order: degree ascending, then revlex descending.
bool canonical_less(const Monomial& u, const Monomial& v);

// All monomials of degree k in n variables, revlex descending.
std::vector<Monomial> all_monomials(int n, Degree k);

// Count of monomials of degree k in n variables: C(k+n-1, n-1).
unsigned long long count_monomials(int n, Degree k);

// Exact binomial coefficient in 64 bits; throws on overflow.
unsigned long long binomial(unsigned long long n, unsigned long long k);

struct MonomialIdeal {
  int n = 0;                     // ambient variable count
  std::vector<Monomial> gens;    // minimal, sorted canonically

  MonomialIdeal() = default;

  // Minimalizes and sorts.  All monomials must have `vars() == n`.
  static MonomialIdeal make(int n, std::vector<Monomial> monomials);
  static MonomialIdeal zero(int n) { MonomialIdeal I; I.n = n; return I; }
  static MonomialIdeal whole_ring(int n);

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_unit(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  bool contains(const Monomial& w) const;   // some generator divides w
  bool contains(const MonomialIdeal& J) const;

  // max generator degree / max variable index; domain errors on zero/unit
  Degree degree() const;
  int max_var() const;
  // m(I) * (deg(I) - 1) + 1
  Degree q_bound() const;

  // true iff I contains a power of every variable
  bool is_artinian() const;

  bool operator==(const MonomialIdeal& J) const { return n == J.n && gens == J.gens; }
  bool operator!=(const MonomialIdeal& J) const { return !(*this == J); }
};

// The inclusion-minimal subset of `monomials` generating the same ideal.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_power(const MonomialIdeal& I, int k);
MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J);
// (I : v)
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v);
// (I : J) as the intersection of (I : v) over generators v of J
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);
// (I : x_j^infty); generators with their x_j exponent dropped
MonomialIdeal saturate(const MonomialIdeal& I, int j);
// I_{>=e}: the ideal generated by the monomials of I of degree >= e
MonomialIdeal truncate(const MonomialIdeal& I, Degree e);

// {x_i * u : u in set}, deduplicated; requires equal degrees
std::vector<Monomial> shadow(const std::vector<Monomial>& set, int n);

// All degree-k monomials not in I, revlex descending.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, Degree k);

// Degree slices of an ideal, computed incrementally: the degree-(k+1) slice
// is shadow(slice k) united with the degree-(k+1) generators.  Slices are
// sorted revlex descending for binary-searched membership.
class DegreeSlices {
 public:
  explicit DegreeSlices(const MonomialIdeal& I);
  const std::vector<Monomial>& slice(Degree k);
  bool member(const Monomial& w);
  unsigned long long standard_count(Degree k);

 private:
  const MonomialIdeal ideal_;
  std::vector<std::vector<Monomial>> slices_;  // slices_[k]
};

// ---- text format ------------------------------------------------------
//
// monomial  :=  "1"  |  factor ("*" factor)*
// factor    :=  "x"<i>  |  "x"<i>"^"<e>        1 <= i <= n, e >= 1
// ideal     :=  "(" monomial ("," monomial)* ")"   |   "()"
//
// Whitespace is insignificant.  Serialization uses the canonical generator
// order and omits "^1".

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos);
};

Monomial parse_monomial(const std::string& text, int n);
MonomialIdeal parse_ideal(const std::string& text, int n);
// Largest variable index mentioned in a monomial/ideal text; 0 if none.
int scan_max_index(const std::string& text);

std::string to_string(const Monomial& u);
std::string to_string(const MonomialIdeal& I);

}  // namespace mical

#endif
