#ifndef MICAL_HILBERT_HPP
#define MICAL_HILBERT_HPP

#include <string>

#include "mical/core.hpp"

// Hilbert functions of complete intersections and of monomial quotients.
// The generating-function product is the single source of truth; the
// closed piecewise formulas are kept as literal transcriptions and every
// deviation from the product is surfaced as a named diagnostic.

namespace mical {

struct HilbertFn {
  std::vector<long long> h;  // h[k] = H(k); zero beyond the stored range
  long long value(Degree k) const {
    return k < h.size() ? h[k] : 0;
  }
  Degree top_nonzero() const;
  bool operator==(const HilbertFn& o) const { return h == o.h; }
};

// H(S/(f_1..f_n), t) = prod_i (1 + t + .. + t^{d_i - 1}) for a regular
// sequence of degrees d_i.
HilbertFn hilbert_ci(const std::vector<int>& degrees);

// H(S/I, k) for k = 0..upto via the pivot-variable splitting
// H(S/I, k) = H(S/(I : x_n), k-1) + H(S/(I + (x_n)), k), memoized on the
// canonical ideal form; cross-checked against direct standard-monomial
// counting in low degrees.
HilbertFn hilbert_quotient(const MonomialIdeal& I, Degree upto,
                           std::size_t memo_capacity = 1 << 15);

// ---- piecewise transcriptions -------------------------------------------

struct PieceDivergence {
  std::string piece;        // e.g. "hf(d,d,d3|2d<=d3+1)#2"
  Degree k = 0;
  std::string formula;      // transcribed value ("17", "3/2", "unresolved")
  long long oracle = 0;
};

struct PiecewiseReport {
  std::string case_name;
  std::vector<long long> values;   // first-match transcription; LLONG_MIN where unassigned
  std::vector<long long> oracle;   // from hilbert_ci
  std::vector<PieceDivergence> divergences;
  bool clean() const { return divergences.empty(); }
};

// Piecewise Hilbert function of a complete intersection K[x1,x2,x3]/(f1,f2,f3),
// case selected by the order relations among 2 <= d1 <= d2 <= d3.
PiecewiseReport piecewise_hilbert(int d1, int d2, int d3);
// Piecewise Hilbert function of an (n,d)-complete intersection.
PiecewiseReport piecewise_hilbert(int n, int d);

// Piecewise |J_k| (monomial counts of the revlex generic initial ideal per
// degree); oracle is C(k+n-1, n-1) - H(k).
PiecewiseReport jk_counts(int d1, int d2, int d3);
PiecewiseReport jk_counts(int n, int d);

// One line per divergent (case, piece), aggregated over a sweep; used to
// regenerate the committed diagnostics file.
std::vector<std::string> piecewise_diagnostic_lines(int max_d);

}  // namespace mical

#endif
