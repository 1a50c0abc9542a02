#include "mical/borel.hpp"

#include <algorithm>

namespace mical {

namespace {

void require_proper(const MonomialIdeal& I, const char* who) {
  if (!I.is_proper_nonzero())
    throw std::domain_error(std::string(who) + " needs a proper nonzero ideal");
}

}  // namespace

ClassificationResult is_stable(const MonomialIdeal& I) {
  require_proper(I, "is_stable");
  for (const Monomial& g : I.gens) {
    int m = g.max_var();
    if (m <= 1) continue;
    Monomial base = g;
    base.e[m - 1] -= 1;  // g / x_m
    for (int j = 1; j < m; ++j) {
      if (!I.contains(base.mul_var(j))) {
        return {false, ExchangeWitness{g, m, j}};
      }
    }
  }
  return {true, std::nullopt};
}

ClassificationResult is_strongly_stable(const MonomialIdeal& I) {
  require_proper(I, "is_strongly_stable");
  for (const Monomial& g : I.gens) {
    for (int i = 2; i <= I.n; ++i) {
      if (!g.exp(i)) continue;
      Monomial base = g;
      base.e[i - 1] -= 1;  // g / x_i
      for (int j = 1; j < i; ++j) {
        if (!I.contains(base.mul_var(j))) {
          return {false, ExchangeWitness{g, i, j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

// Does some t satisfy x_j^t * h in I, where h = g / x_i^{nu_i(g)}?  A
// generator w fits iff w divides x_j^t * h for large enough t, i.e. iff w
// divides h in every variable other than x_j; the needed t is then
// nu_j(w) - nu_j(h), which is at most deg(I).
bool exchange_exists(const MonomialIdeal& I, const Monomial& h, int j,
                     std::optional<Exponent> t_cap) {
  for (const Monomial& w : I.gens) {
    bool fits = true;
    for (int v = 1; v <= I.n; ++v) {
      if (v == j) continue;
      if (w.exp(v) > h.exp(v)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    Exponent need = w.exp(j) > h.exp(j) ? w.exp(j) - h.exp(j) : 0;
    if (!t_cap || need <= *t_cap) return true;
  }
  return false;
}

ClassificationResult borel_exchange_route(const MonomialIdeal& I, bool bounded) {
  for (const Monomial& g : I.gens) {
    for (int i = 2; i <= I.n; ++i) {
      if (!g.exp(i)) continue;
      Monomial h = g.with_var_zeroed(i);
      std::optional<Exponent> cap;
      if (bounded) cap = g.exp(i);
      for (int j = 1; j < i; ++j) {
        if (!exchange_exists(I, h, j, cap)) {
          return {false, ExchangeWitness{g, i, j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool borel_saturation_route(const MonomialIdeal& I) {
  // (I : x_i^oo) subset (I : x_j^oo) for all j < i
  std::vector<MonomialIdeal> sats;
  sats.reserve(I.n);
  for (int i = 1; i <= I.n; ++i) sats.push_back(saturate(I, i));
  for (int i = 2; i <= I.n; ++i)
    for (int j = 1; j < i; ++j)
      if (!sats[j - 1].contains(sats[i - 1])) return false;
  return true;
}

}  // namespace

ClassificationResult is_borel_type(const MonomialIdeal& I) {
  require_proper(I, "is_borel_type");
  ClassificationResult r = borel_exchange_route(I, /*bounded=*/false);
  if (r.holds != borel_saturation_route(I))
    throw std::logic_error("Borel-type routes disagree");
  return r;
}

ClassificationResult is_sbt(const MonomialIdeal& I) {
  require_proper(I, "is_sbt");
  return borel_exchange_route(I, /*bounded=*/true);
}

SequentialChain sequential_chain(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("sequential_chain needs a nonzero ideal");
  SequentialChain chain;
  MonomialIdeal cur = I;
  int prev_pivot = I.n + 1;
  while (!cur.is_unit()) {
    int pivot = cur.max_var();
    if (pivot >= prev_pivot) throw std::logic_error("chain pivots must strictly decrease");
    chain.links.push_back({cur, pivot});
    prev_pivot = pivot;
    cur = saturate(cur, pivot);
  }
  return chain;
}

namespace {

// Generators of I re-read inside K[x_1..m]; all of them must already live
// there.  An ideal with no generators becomes the zero ideal of the subring,
// which only happens for the terminal link where we want the whole ring.
MonomialIdeal restrict_to_subring(const MonomialIdeal& I, int m) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) gens.push_back(g.restricted(m));
  return MonomialIdeal::make(m, std::move(gens));
}

}  // namespace

ChainRegularityReport regularity_via_chain(const MonomialIdeal& I) {
  if (!is_borel_type(I)) throw std::domain_error("regularity_via_chain needs a Borel-type ideal");
  SequentialChain chain = sequential_chain(I);
  ChainRegularityReport report;
  for (int l = 0; l < chain.length(); ++l) {
    int m = chain.links[l].pivot;
    MonomialIdeal J = restrict_to_subring(chain.links[l].ideal, m);
    MonomialIdeal Jsat = l + 1 < chain.length()
                             ? restrict_to_subring(chain.links[l + 1].ideal, m)
                             : MonomialIdeal::whole_ring(m);
    // J^sat/J vanishes beyond q(J).  Once the scan passes every generator
    // degree, equal slices stay equal (both sides then grow by shadow
    // alone), so the scan can stop there instead of at the full bound.
    Degree bound = J.is_proper_nonzero() ? J.q_bound() : 0;
    Degree settled = 0;
    for (const Monomial& g : J.gens) settled = std::max(settled, g.degree());
    for (const Monomial& g : Jsat.gens) settled = std::max(settled, g.degree());
    DegreeSlices sj(J), ssat(Jsat);
    Degree s = 0;
    unsigned long long top = 0;
    Degree k = 0;
    for (; k <= bound; ++k) {
      const std::vector<Monomial>& a = ssat.slice(k);
      const std::vector<Monomial>& b = sj.slice(k);
      unsigned long long diff = a.size() - b.size();
      if (diff > 0) {
        s = k;
        top = diff;
      } else if (k >= settled) {
        break;
      }
    }
    if (k > bound)
      throw std::logic_error("saturation quotient does not vanish by the degree bound");
    report.links.push_back({m, s, top});
    report.regularity = std::max(report.regularity, s + 1);
  }
  return report;
}

namespace {

// I_{>=e} is stable iff every degree-e monomial w of I satisfies
// x_j * w / x_{m(w)} in I for all j < m(w); the minimal generators of the
// truncation are a subset of the degree-e slice, and stable ideals satisfy
// the exchange for all members, so checking the whole slice is equivalent.
bool truncation_stable(DegreeSlices& slices, const std::vector<Monomial>& slice_e) {
  for (const Monomial& w : slice_e) {
    int m = w.max_var();
    if (m <= 1) continue;
    Monomial base = w;
    base.e[m - 1] -= 1;
    for (int j = 1; j < m; ++j) {
      if (!slices.member(base.mul_var(j))) return false;
    }
  }
  return true;
}

}  // namespace

Degree regularity_min_stable(const MonomialIdeal& I) {
  if (!is_borel_type(I)) throw std::domain_error("regularity_min_stable needs a Borel-type ideal");
  Degree lo = I.degree();
  Degree hi = I.q_bound();
  DegreeSlices slices(I);
  for (Degree e = lo; e <= hi; ++e) {
    if (truncation_stable(slices, slices.slice(e))) return e;
  }
  throw std::logic_error("no stable truncation up to q(I)");
}

Degree q_bound(const MonomialIdeal& I) { return I.q_bound(); }

}  // namespace mical
