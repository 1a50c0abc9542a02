#ifndef MICAL_DFIXED_HPP
#define MICAL_DFIXED_HPP

#include <optional>

#include "mical/core.hpp"

// Divisibility sequences 1 = d_0 | d_1 | ... | d_s, the digit expansion of
// integers in them, d-fixed ideal generation (closed products and the move
// closure that certifies them), the regularity formula for principal
// d-fixed ideals, and socle computations.

namespace mical {

struct DSequence {
  std::vector<Exponent> terms;  // strictly increasing, terms[0] == 1, each divides the next

  static DSequence make(std::vector<Exponent> terms);
  // text form "1|2|4|12"
  static DSequence parse(const std::string& text);
  std::string str() const;

  int top_index() const { return static_cast<int>(terms.size()) - 1; }  // s
  Exponent term(int t) const { return terms[t]; }
  // d_{t+1}/d_t, the bound on digit t (digit s is unbounded)
  Exponent ratio(int t) const { return terms[t + 1] / terms[t]; }
};

struct DDecomposition {
  std::vector<Exponent> digits;  // a_0..a_s
  Exponent reconstruct(const DSequence& d) const;
};

// The unique expansion a = sum a_t d_t with 0 <= a_t < d_{t+1}/d_t for t < s.
DDecomposition decompose(Exponent a, const DSequence& d);

// digitwise comparison of the expansions
bool leq_d(Exponent a, Exponent b, const DSequence& d);

// All t >= lo whose expansion is digitwise at most that of `bound`,
// ascending.
std::vector<Exponent> values_leq_d(Exponent bound, const DSequence& d, Exponent lo = 0);

// Given a <=_d b and b = b1 + b2, produce (a1, a2) with a = a1 + a2,
// a1 <=_d b1 and a2 <=_d b2 (the smallest such a1).  Throws if the
// precondition fails.
std::pair<Exponent, Exponent> split_leq_d(Exponent a, Exponent b, Exponent b1,
                                          Exponent b2, const DSequence& d);

// ---- d-fixed ideals ----------------------------------------------------

// The smallest d-fixed ideal containing u, via the block product
// prod_q prod_t ({x_1^{d_t},..,x_{i_q}^{d_t}})^{alpha_{q,t}} over the
// variable blocks x_{i_1}^{alpha_1} ... x_{i_r}^{alpha_r} of u.
MonomialIdeal principal_dfixed(const Monomial& u, const DSequence& d);

// Fixpoint of the moves x_j^t * g / x_i^t (j < i, 1 <= t <=_d nu_i(g))
// applied to minimal generators.  This is the defining closure; the closed
// product forms are checked against it.
MonomialIdeal dfixed_closure(const std::vector<Monomial>& gens, const DSequence& d);

struct DfixedWitness {
  Monomial generator;
  int i = 0;
  int j = 0;
  Exponent t = 0;
};

struct DfixedResult {
  bool holds = true;
  std::optional<DfixedWitness> witness;
  explicit operator bool() const { return holds; }
};

// Every move of every minimal generator stays inside I.
DfixedResult is_dfixed(const MonomialIdeal& I, const DSequence& d);

// ---- strong Borel type generation --------------------------------------

// SBT(u) = prod_q ({x_1^{alpha_q},..,x_{i_q}^{alpha_q}}).
MonomialIdeal sbt_principal(const Monomial& u);

struct SbtRegularityReport {
  std::vector<Degree> chi;  // per block
  Degree regularity = 0;
};

// reg(SBT(u)) = max_q chi_q + 1 with
// chi_q = alpha_1 + .. + alpha_{q-1} + (alpha_q - 1) i_q; requires the block
// exponents of u to be weakly decreasing.
SbtRegularityReport sbt_regularity(const Monomial& u);

// ---- regularity of principal d-fixed ideals -----------------------------

struct PardueReport {
  struct Block {
    int index = 0;                  // i_q
    Exponent exponent = 0;          // alpha_q
    std::vector<Exponent> digits;   // alpha_{q,t}
    int s = 0;                      // max t with alpha_{q,t} != 0
    Degree partial = 0;             // d_{q,s_q} = sum_{e<=q} sum_{j>=s_q} alpha_{e,j} d_j
    Degree D = 0;                   // partial + (i_q - 1)(d_{s_q} - 1)
  };
  Exponent x1_offset = 0;  // alpha_1 when x_1 divides u (stripped first)
  std::vector<Block> blocks;
  Degree regularity = 0;
};

// Closed-form regularity of the principal d-fixed ideal of u.
PardueReport pardue_regularity(const Monomial& u, const DSequence& d);

// ---- socles -------------------------------------------------------------

struct SocleReport {
  // basis monomials of (0 : m) in S/I, grouped by degree (only nonzero
  // degrees listed, ascending)
  std::vector<std::pair<Degree, std::vector<Monomial>>> by_degree;
  Degree max_degree = 0;  // 0 also when the only socle degree is 0
};

// Degree-by-degree enumeration; w is in the socle iff w is standard and
// x_i * w lies in I for every i.  Requires an Artinian ideal.
SocleReport socle_bruteforce(const MonomialIdeal& I);

// Standard monomials of I lying in J, grouped by degree: the monomial basis
// of (J + I)/I.  Requires I Artinian.
SocleReport socle_basis_mod(const MonomialIdeal& I, const MonomialIdeal& J);

// Closed-form socle of S/<x_n^alpha>_d: the ideal J with Soc = (J+I)/I as a
// sum of pieces J_t over the nonzero digits of alpha, with the predicted
// socle degree e_t and dimension h_t of each piece.
struct PrincipalSocle {
  struct Piece {
    int t = 0;
    MonomialIdeal ideal;            // J_t
    Degree degree = 0;              // e_t = q_t + (n-1)(d_t - 1) - 1
    unsigned long long dim = 0;     // h_t
  };
  MonomialIdeal J;
  std::vector<Piece> pieces;
};

PrincipalSocle socle_principal_power(Exponent alpha, const DSequence& d, int n);

// Closed-form socle of S/<u>_d for u = x_{i_1}^{a_1}..x_{i_r}^{a_r} with
// 2 <= i_1 and i_r = n: J as a sum of pieces J_{(lambda,t)} over the index
// set P_a(I), plus the predicted degree of each piece and the overall top
// socle degree.
struct DfixedSocle {
  struct Piece {
    std::vector<int> lambda;        // block positions, lambda.back() == r
    std::vector<int> t;             // strictly increasing digit positions
    MonomialIdeal ideal;
    Degree degree = 0;
  };
  MonomialIdeal J;
  std::vector<Piece> pieces;
  Degree max_degree = 0;            // d_{r,s_r} + (n-1)(d_{s_r} - 1) - 1
};

DfixedSocle socle_dfixed(const Monomial& u, const DSequence& d);

// ---- d-fixed ideals generated by powers of variables --------------------

struct PowersReport {
  // absorbed input: strictly increasing indices and exponents
  std::vector<std::pair<int, Exponent>> pairs;
  // per retained pair q, the admissible digit-split tuples (gamma_1..gamma_q)
  std::vector<std::vector<std::vector<Exponent>>> gamma_tuples;
  MonomialIdeal ideal;
};

// <x_{i_1}^{a_1}, .., x_{i_r}^{a_r}>_d assembled blockwise from the
// gamma-tuple enumeration; always equal to the sum of the principal d-fixed
// ideals of the inputs (asserted).
PowersReport powers_of_variables(std::vector<std::pair<int, Exponent>> pairs,
                                 const DSequence& d, int n);

// variable blocks (i_q, alpha_q) of a monomial, increasing index order
std::vector<std::pair<int, Exponent>> variable_blocks(const Monomial& u);

}  // namespace mical

#endif
