#ifndef MICAL_TESTS_GIN_GOLDENS_HPP
#define MICAL_TESTS_GIN_GOLDENS_HPP

#include "mical/core.hpp"

// Expected generator lists for the generic-initial-ideal golden cases,
// written out independently of the library's closed-form table.

namespace mical::goldens {

inline void braces(std::vector<Monomial>& out, int, const Monomial& base, int j) {
  for (int a = 0; a <= j; ++a)
    out.push_back(base.mul_var(1, a).mul_var(2, j - a));
}

inline Monomial M(const std::string& s, int n) { return parse_monomial(s, n); }

// (d1,d2,d3) -> expected Gin, for the ten documented triples
inline MonomialIdeal gin_golden(int d1, int d2, int d3) {
  std::vector<Monomial> g;
  auto id = [&]() { return MonomialIdeal::make(3, g); };
  if (d1 == 3 && d2 == 3 && d3 == 9) {
    for (const char* s : {"x1^3", "x1^2*x2", "x1*x2^3", "x2^5", "x2^4*x3^5",
                          "x1*x2^2*x3^7", "x2^3*x3^7", "x3^13"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x3^9", 3), 2);
    braces(g, 3, M("x3^11", 3), 1);
    return id();
  }
  if (d1 == 3 && d2 == 4 && d3 == 9) {
    for (const char* s :
         {"x1^3", "x1^2*x2^2", "x1*x2^4", "x2^6", "x2^5*x3^4", "x3^14"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x2^3*x3^6", 3), 1);
    braces(g, 3, M("x2*x3^8", 3), 2);
    braces(g, 3, M("x3^10", 3), 2);
    braces(g, 3, M("x3^12", 3), 1);
    return id();
  }
  if (d1 == 5 && d2 == 5 && d3 == 5) {
    braces(g, 3, M("x1^3", 3), 2);
    for (const char* s : {"x1^2*x2^4", "x1*x2^5", "x2^7", "x3*x2^6", "x3^13"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x2^3*x3^3", 3), 2);
    braces(g, 3, M("x3^5", 3), 4);
    braces(g, 3, M("x3^7", 3), 3);
    braces(g, 3, M("x3^9", 3), 2);
    braces(g, 3, M("x3^11", 3), 1);
    return id();
  }
  if (d1 == 6 && d2 == 6 && d3 == 6) {
    braces(g, 3, M("x1^4", 3), 2);
    for (const char* s : {"x1^3*x2^4", "x1^2*x2^5", "x1*x2^7", "x2^8", "x3^16"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x2^6*x3^2", 3), 1);
    braces(g, 3, M("x2^3*x3^4", 3), 3);
    braces(g, 3, M("x3^6", 3), 5);
    braces(g, 3, M("x3^8", 3), 4);
    braces(g, 3, M("x3^10", 3), 3);
    braces(g, 3, M("x3^12", 3), 2);
    braces(g, 3, M("x3^14", 3), 1);
    return id();
  }
  if (d1 == 4 && d2 == 4 && d3 == 6) {
    for (const char* s :
         {"x1^4", "x1^3*x2", "x1^2*x2^3", "x1*x2^5", "x2^6", "x3^12"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x3^2*x2^4", 3), 1);
    braces(g, 3, M("x3^4*x2^2", 3), 2);
    braces(g, 3, M("x3^6", 3), 3);
    braces(g, 3, M("x3^8", 3), 2);
    braces(g, 3, M("x3^10", 3), 1);
    return id();
  }
  if (d1 == 4 && d2 == 4 && d3 == 5) {
    for (const char* s : {"x1^4", "x1^3*x2", "x1^2*x2^3", "x1*x2^4", "x2^6",
                          "x2^5*x3", "x3^11"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x3^3*x2^2", 3), 2);
    braces(g, 3, M("x3^5", 3), 3);
    braces(g, 3, M("x3^7", 3), 2);
    braces(g, 3, M("x3^9", 3), 1);
    return id();
  }
  if (d1 == 4 && d2 == 6 && d3 == 6) {
    for (const char* s : {"x1^4", "x1^3*x2^3", "x1^2*x2^4", "x2^7", "x1*x2^6",
                          "x3^2*x1*x2^5", "x3^2*x2^6", "x3^14"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x3^4*x2^2", 3), 3);
    braces(g, 3, M("x3^6*x2", 3), 3);
    braces(g, 3, M("x3^8", 3), 3);
    braces(g, 3, M("x3^10", 3), 2);
    braces(g, 3, M("x3^12", 3), 1);
    return id();
  }
  if (d1 == 3 && d2 == 6 && d3 == 6) {
    for (const char* s :
         {"x1^3", "x1^2*x2^4", "x1*x2^5", "x2^7", "x3*x2^6", "x3^13"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x3^3*x2^3", 3), 2);
    braces(g, 3, M("x3^5*x2^2", 3), 2);
    braces(g, 3, M("x3^7*x2", 3), 2);
    braces(g, 3, M("x3^9", 3), 2);
    braces(g, 3, M("x3^11", 3), 1);
    return id();
  }
  if (d1 == 3 && d2 == 5 && d3 == 6) {
    for (const char* s : {"x1^3", "x1^2*x2^3", "x1*x2^5", "x2^6", "x3^12"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x2^4*x3^2", 3), 1);
    braces(g, 3, M("x2^2*x3^4", 3), 2);
    braces(g, 3, M("x2*x3^6", 3), 2);
    braces(g, 3, M("x3^8", 3), 2);
    braces(g, 3, M("x3^10", 3), 1);
    return id();
  }
  if (d1 == 4 && d2 == 5 && d3 == 6) {
    for (const char* s : {"x1^4", "x1^3*x2^2", "x1^2*x2^4", "x1*x2^5", "x2^7",
                          "x3*x2^6", "x3^13"})
      g.push_back(M(s, 3));
    braces(g, 3, M("x2^3*x3^3", 3), 2);
    braces(g, 3, M("x2*x3^5", 3), 3);
    braces(g, 3, M("x3^7", 3), 3);
    braces(g, 3, M("x3^9", 3), 2);
    braces(g, 3, M("x3^11", 3), 1);
    return id();
  }
  throw std::invalid_argument("no golden for this triple");
}

// the quadrics in four and five variables, and both cubic forms in four
inline MonomialIdeal quadric4() {
  return parse_ideal(
      "(x1^2,x1*x2,x2^2,x1*x3,x2*x3^2,x3^3,x2*x3*x4,x3^2*x4,"
      "x1*x4^3,x2*x4^3,x3*x4^3,x4^5)",
      4);
}

inline MonomialIdeal quadric5() {
  return parse_ideal(
      "(x1^2,x1*x2,x2^2,x1*x3,x2*x3,"
      "x3^3,x3^2*x4,x1*x4^2,x2*x4^2,x3*x4^2,x4^3,"
      "x3^2*x5^2,x1*x4*x5^2,x2*x4*x5^2,x3*x4*x5^2,x4^2*x5^2,"
      "x1*x5^4,x2*x5^4,x3*x5^4,x4*x5^4,x5^6)",
      5);
}

inline MonomialIdeal cubic4_form(bool second) {
  std::vector<Monomial> g;
  braces(g, 4, M("1", 4), 3);
  if (!second) {
    braces(g, 4, M("x3^2", 4), 2);
    for (const char* s : {"x1*x3^4", "x2*x3^4", "x3^5", "x1*x3^3*x4", "x2*x3^3*x4",
                          "x3^4*x4"})
      g.push_back(M(s, 4));
  } else {
    for (const char* s : {"x1^2*x3^2", "x1*x2*x3^2", "x1*x3^3", "x3^3*x2^2",
                          "x3^4*x2", "x3^5", "x4*x3^2*x2^2", "x4*x3^3*x2", "x4*x3^4"})
      g.push_back(M(s, 4));
  }
  g.push_back(M("x3^3*x4^3", 4));
  braces(g, 4, M("x3*x4^3", 4), 2);
  braces(g, 4, M("x3^2*x4^3", 4), 1);
  for (const char* s : {"x1^2*x4^5", "x1*x2*x4^5", "x2^2*x4^5", "x1*x3*x4^5",
                        "x2*x3*x4^5", "x3^2*x4^5", "x1*x4^7", "x2*x4^7", "x3*x4^7",
                        "x4^9"})
    g.push_back(M(s, 4));
  return MonomialIdeal::make(4, g);
}

}  // namespace mical::goldens

#endif
