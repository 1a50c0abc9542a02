#ifndef MICAL_GIN_HPP
#define MICAL_GIN_HPP

#include <optional>

#include "mical/core.hpp"
#include "mical/hilbert.hpp"

// Generic initial ideals of complete intersections, characterized
// combinatorially: strongly stable monomial ideals with the complete
// intersection Hilbert function for which x_n is a strong Lefschetz element.
// Closed-form generator families exist for n = 3; the degree-by-degree
// constructor recovers them and handles the small n >= 4 cases.

namespace mical {

// Multiplication by x_n^b as a map (S/I)_t -> (S/I)_{t+b} on monomial bases:
// injective iff no standard monomial of degree t lands in I, surjective iff
// every standard monomial of degree t+b is divisible by x_n^b.  Dimension
// counts decide which of the two each (t, b) must satisfy.
struct LefschetzReport {
  struct Failure {
    Degree t = 0;
    Degree b = 0;
    bool needed_injective = false;  // else surjective
    Monomial witness;
  };
  int element = 0;  // always the last variable
  bool holds = true;
  std::vector<Failure> failures;
  explicit operator bool() const { return holds; }
};

LefschetzReport check_lefschetz(const MonomialIdeal& I, bool strong);

struct AlmostRevlexResult {
  bool holds = true;
  // a minimal generator and a same-degree monomial preceding it that is
  // missing from the ideal
  std::optional<std::pair<Monomial, Monomial>> witness;
  explicit operator bool() const { return holds; }
};

// Every same-degree monomial revlex-greater than a minimal generator lies in
// the ideal.
AlmostRevlexResult is_almost_revlex(const MonomialIdeal& I);

// The set is the revlex-top segment of its degree.
bool is_revlex_segment(const std::vector<Monomial>& set, int n);

// Closed-form generic initial ideal of a complete intersection
// (f1, f2, f3) in K[x1,x2,x3] with the strong Lefschetz property,
// 2 <= d1 <= d2 <= d3; strongly stable with the CI Hilbert function
// (both asserted).
MonomialIdeal closed_form_gin(int d1, int d2, int d3);

// Closed-form count of minimal generators; asserted against the generator
// list.
unsigned long long generator_count(int d1, int d2, int d3);

struct GinOptions {
  unsigned long long node_budget = 1'000'000;
  // Restrict the first nonempty degree slice to the revlex segment (the
  // regime in which that slice is known to be revlex).
  bool revlex_first_slice = false;
  // Verification mode: follow this ideal's slices instead of searching.
  const MonomialIdeal* forced_schedule = nullptr;
};

struct GinSearchError : std::runtime_error {
  Degree deepest_degree;
  GinSearchError(const std::string& msg, Degree deepest)
      : std::runtime_error(msg), deepest_degree(deepest) {}
};
struct GinBudgetExceeded : GinSearchError {
  using GinSearchError::GinSearchError;
};
struct GinNoSolution : GinSearchError {
  using GinSearchError::GinSearchError;
};

// All strongly stable ideals with the CI Hilbert function of `degrees` for
// which x_n is a strong Lefschetz element, grown degree by degree from the
// shadow; deduplicated and canonically sorted.
std::vector<MonomialIdeal> construct_gin(const std::vector<int>& degrees,
                                         const GinOptions& options = {});

// Feed `J` through the constructor as a forced schedule; true iff every
// growth constraint and the final predicates accept it.
bool verify_gin_schedule(const std::vector<int>& degrees, const MonomialIdeal& J,
                         const GinOptions& options = {});

}  // namespace mical

#endif
