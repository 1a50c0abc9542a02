#ifndef MICAL_BOREL_HPP
#define MICAL_BOREL_HPP

#include <optional>

#include "mical/core.hpp"

// Stability classifications of monomial ideals, their sequential saturation
// chain, and Castelnuovo-Mumford regularity by two independent combinatorial
// routes (chain socle degrees vs. smallest stable truncation).

namespace mical {

// A failed exchange: generator g, the variable x_i whose exponent was moved,
// and the smaller index j < i it was moved to.
struct ExchangeWitness {
  Monomial generator;
  int i = 0;
  int j = 0;
};

struct ClassificationResult {
  bool holds = true;
  std::optional<ExchangeWitness> witness;  // set iff !holds
  explicit operator bool() const { return holds; }
};

// x_j * g / x_{m(g)} in I for every generator g and j < m(g).
ClassificationResult is_stable(const MonomialIdeal& I);

// x_j * g / x_i in I for every generator g, every i with nu_i(g) > 0, j < i.
ClassificationResult is_strongly_stable(const MonomialIdeal& I);

// Borel type: for every generator g and j < i with nu_i(g) > 0 there is a
// t > 0 with x_j^t * g / x_i^{nu_i(g)} in I.  Decided two independent ways
// (exchange condition on generators, and the saturation comparison
// (I : x_i^oo) subset (I : x_j^oo) for all j < i); both must agree.
ClassificationResult is_borel_type(const MonomialIdeal& I);

// Strong Borel type: as Borel type but the exchange exponent is bounded,
// t <= nu_i(g).
ClassificationResult is_sbt(const MonomialIdeal& I);

// The ascending chain I = I_0 c I_1 c ... c I_r = S with
// I_{l+1} = (I_l : x_{n_l}^oo), n_l = m(I_l).  Pivots strictly decrease.
struct SequentialChain {
  struct Link {
    MonomialIdeal ideal;
    int pivot = 0;  // n_l
  };
  std::vector<Link> links;  // proper links only; the terminal ideal is S
  int length() const { return static_cast<int>(links.size()); }
};

SequentialChain sequential_chain(const MonomialIdeal& I);

// Per-link socle data of the chain. For each link, J_l is generated by
// G(I_l) inside S_l = K[x_1..x_{n_l}] and J_l^sat by G(I_{l+1}); s_l is the
// top degree of a monomial of J_l^sat not in J_l and top_dim_l the number of
// such monomials in that degree.  reg(I) = max_l s_l + 1.
struct ChainRegularityReport {
  struct LinkData {
    int pivot = 0;                // n_l, the subring variable count
    Degree s = 0;                 // s(J_l^sat / J_l)
    unsigned long long top_dim = 0;
  };
  std::vector<LinkData> links;
  Degree regularity = 0;
};

ChainRegularityReport regularity_via_chain(const MonomialIdeal& I);

// min { e >= deg(I) : I_{>=e} is stable }; agrees with the chain route on
// Borel-type ideals.
Degree regularity_min_stable(const MonomialIdeal& I);

// m(I) * (deg(I) - 1) + 1, the linear regularity bound.
Degree q_bound(const MonomialIdeal& I);

}  // namespace mical

#endif
