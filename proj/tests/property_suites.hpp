#ifndef MICAL_TESTS_PROPERTY_SUITES_HPP
#define MICAL_TESTS_PROPERTY_SUITES_HPP

#include "mical/borel.hpp"
#include "mical/dfixed.hpp"
#include "oracles.hpp"

// Randomized property suites shared by the unit tests and the acceptance
// gate.  Each returns {cases run, violations found}.

namespace mical::suites {

struct Tally {
  int cases = 0;
  int violations = 0;
  void count(bool ok) {
    ++cases;
    if (!ok) ++violations;
  }
};

// sums, intersections, products and colons of Borel-type ideals stay Borel
// type
inline Tally closure_laws_borel(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    int n = rng.pick(2, 4);
    MonomialIdeal I = rng.borel_type_ideal(n, 6), J = rng.borel_type_ideal(n, 6);
    t.count(is_borel_type(ideal_sum(I, J)).holds);
    t.count(is_borel_type(ideal_intersection(I, J)).holds);
    t.count(is_borel_type(ideal_product(I, J)).holds);
    MonomialIdeal K = rng.ideal(n, 2, 4);
    MonomialIdeal C = colon_ideal(I, K);
    if (C.is_proper_nonzero()) t.count(is_borel_type(C).holds);
  }
  return t;
}

// sums, intersections and products of strong-Borel-type ideals stay SBT
inline Tally closure_laws_sbt(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    int n = rng.pick(2, 4);
    Monomial u = rng.monomial(n, 6), v = rng.monomial(n, 6);
    if (u.is_unit() || v.is_unit()) continue;
    MonomialIdeal I = sbt_principal(u), J = sbt_principal(v);
    t.count(is_sbt(ideal_sum(I, J)).holds);
    t.count(is_sbt(ideal_intersection(I, J)).holds);
    t.count(is_sbt(ideal_product(I, J)).holds);
  }
  return t;
}

// truncations at and above the regularity are stable
inline Tally truncation_stability(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    MonomialIdeal I = rng.borel_type_ideal(rng.pick(2, 4), 6);
    Degree reg = regularity_min_stable(I);
    for (Degree e = reg; e <= reg + 2; ++e) t.count(is_stable(truncate(I, e)).holds);
  }
  return t;
}

// reg(I+J), reg(I cap J) <= max(reg I, reg J);
// reg(I*J) <= reg I + reg J;  reg(I^k) <= k reg(I)
inline Tally regularity_inequalities(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    int n = rng.pick(2, 4);
    MonomialIdeal I = rng.borel_type_ideal(n, 5), J = rng.borel_type_ideal(n, 5);
    Degree ri = regularity_min_stable(I), rj = regularity_min_stable(J);
    t.count(regularity_min_stable(ideal_sum(I, J)) <= std::max(ri, rj));
    t.count(regularity_min_stable(ideal_intersection(I, J)) <= std::max(ri, rj));
    int n3 = rng.pick(2, 3);
    MonomialIdeal A = rng.borel_type_ideal(n3, 4), B = rng.borel_type_ideal(n3, 4);
    Degree ra = regularity_min_stable(A), rb = regularity_min_stable(B);
    t.count(regularity_min_stable(ideal_product(A, B)) <= ra + rb);
    for (int k = 2; k <= 3; ++k)
      t.count(regularity_min_stable(ideal_power(A, k)) <= static_cast<Degree>(k) * ra);
  }
  return t;
}

// containment and product law for principal d-fixed ideals of powers of the
// last variable, with the digitwise carry criterion for equality
inline Tally principal_containments(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    DSequence d = rng.dseq();
    int n = rng.pick(2, 3);
    Exponent a = static_cast<Exponent>(rng.pick(1, 29));
    Exponent b = static_cast<Exponent>(rng.pick(1, 30));
    if (a > b) std::swap(a, b);
    if (a == b) b += 1;
    t.count(principal_dfixed(Monomial::power(n, n, a), d)
                .contains(principal_dfixed(Monomial::power(n, n, b), d)));
    Exponent p = static_cast<Exponent>(rng.pick(1, 12));
    Exponent q = static_cast<Exponent>(rng.pick(1, 12));
    MonomialIdeal sum = principal_dfixed(Monomial::power(n, n, p + q), d);
    MonomialIdeal prod = ideal_product(principal_dfixed(Monomial::power(n, n, p), d),
                                       principal_dfixed(Monomial::power(n, n, q), d));
    t.count(prod.contains(sum));
    DDecomposition dp = decompose(p, d), dq = decompose(q, d);
    bool no_carry = true;
    for (int j = 0; j + 1 < static_cast<int>(dp.digits.size()); ++j)
      if (dp.digits[j] + dq.digits[j] >= d.ratio(j)) no_carry = false;
    t.count((sum == prod) == no_carry);
  }
  return t;
}

// products of d-fixed ideals are d-fixed, and d-fixed ideals are Borel type
inline Tally dfixed_closure_laws(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    DSequence d = rng.dseq();
    int n = rng.pick(2, 3);
    Monomial u = rng.monomial(n, 6), v = rng.monomial(n, 6);
    if (u.is_unit() || v.is_unit()) continue;
    MonomialIdeal I = principal_dfixed(u, d), J = principal_dfixed(v, d);
    t.count(is_dfixed(ideal_product(I, J), d).holds);
    t.count(is_dfixed(ideal_sum(I, J), d).holds);
    t.count(is_borel_type(I).holds);
  }
  return t;
}

// the classification hierarchy never inverts
inline Tally classification_hierarchy(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  DSequence one = DSequence::make({1});
  Tally t;
  while (t.cases < rounds) {
    int n = rng.pick(2, 4);
    MonomialIdeal R = rng.ideal(n, 3, 5);
    if (!R.is_proper_nonzero()) continue;
    MonomialIdeal SS = dfixed_closure(R.gens, one);  // strongly stable closure
    t.count(is_strongly_stable(SS).holds);
    t.count(is_stable(SS).holds);
    t.count(is_sbt(SS).holds);
    t.count(is_borel_type(SS).holds);
    if (is_sbt(R).holds) t.count(is_borel_type(R).holds);
    if (is_strongly_stable(R).holds) t.count(is_stable(R).holds && is_sbt(R).holds);
  }
  return t;
}

// the closed-form regularity respects the linear bound n(deg u - 1) + 1
inline Tally pardue_bound(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    DSequence d = rng.dseq();
    int n = rng.pick(2, 5);
    Monomial u = rng.monomial(n, 25);
    if (u.is_unit()) continue;
    PardueReport r = pardue_regularity(u, d);
    t.count(r.regularity <= static_cast<Degree>(n) * (u.degree() - 1) + 1);
  }
  return t;
}

// reg of a d-fixed ideal generated by powers of variables is at most the
// closed-form regularity of its last block
inline Tally powers_regularity_bound(unsigned long long seed, int rounds) {
  oracle::Rng rng(seed);
  Tally t;
  while (t.cases < rounds) {
    DSequence d = rng.dseq();
    int n = rng.pick(2, 3);
    int r = rng.pick(1, n);
    std::vector<std::pair<int, Exponent>> pairs;
    int idx = 0;
    Exponent expo = 0;
    for (int q = 0; q < r; ++q) {
      idx = rng.pick(idx + 1, n - (r - q - 1));
      expo = static_cast<Exponent>(rng.pick(static_cast<int>(expo) + 1,
                                            static_cast<int>(expo) + 5));
      pairs.emplace_back(idx, expo);
    }
    PowersReport rep = powers_of_variables(pairs, d, n);
    if (!rep.ideal.is_proper_nonzero()) continue;
    const auto& last = rep.pairs.back();
    Degree last_reg =
        pardue_regularity(Monomial::power(n, last.first, last.second), d).regularity;
    t.count(regularity_min_stable(rep.ideal) <= last_reg);
  }
  return t;
}

// the colon inclusion chain on the three-power example
inline Tally colon_inclusion_chain() {
  Tally t;
  DSequence d = DSequence::parse("1|2|4|12");
  int n = 5;
  std::vector<std::pair<int, Exponent>> pairs = {{2, 7}, {3, 10}, {5, 17}};
  std::vector<MonomialIdeal> parts;
  for (const auto& [i, a] : pairs)
    parts.push_back(principal_dfixed(Monomial::power(n, i, a), d));
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    MonomialIdeal partial = MonomialIdeal::zero(n);
    for (std::size_t e = 0; e <= q; ++e) partial = ideal_sum(partial, parts[e]);
    std::vector<Monomial> mq, nq;
    for (int i = 1; i <= pairs[q].first; ++i) mq.push_back(Monomial::power(n, i, 1));
    int lo = q == 0 ? 1 : pairs[q - 1].first + 1;
    for (int i = lo; i <= pairs[q].first; ++i) nq.push_back(Monomial::power(n, i, 1));
    MonomialIdeal Mq = MonomialIdeal::make(n, mq), Nq = MonomialIdeal::make(n, nq);
    MonomialIdeal lhs = ideal_sum(colon_ideal(parts[q], Mq), partial);
    MonomialIdeal mid = colon_ideal(partial, Mq);
    MonomialIdeal rhs = colon_ideal(partial, Nq);
    MonomialIdeal rhs2 = ideal_sum(colon_ideal(parts[q], Nq), partial);
    t.count(mid.contains(lhs));
    t.count(rhs.contains(mid));
    t.count(rhs == rhs2);
  }
  return t;
}

}  // namespace mical::suites

#endif
