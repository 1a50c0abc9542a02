// Python bindings for the main operations.  Ideals cross the boundary as
// their canonical text form plus exponent vectors; reports become dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mical/borel.hpp"
#include "mical/dfixed.hpp"
#include "mical/gin.hpp"
#include "mical/hilbert.hpp"

namespace py = pybind11;
using namespace mical;

namespace {

py::dict classification_dict(const ClassificationResult& r) {
  py::dict d;
  d["holds"] = r.holds;
  if (!r.holds) {
    d["witness_generator"] = to_string(r.witness->generator);
    d["witness_i"] = r.witness->i;
    d["witness_j"] = r.witness->j;
  }
  return d;
}

py::list exponents_list(const MonomialIdeal& I) {
  py::list out;
  for (const Monomial& g : I.gens) {
    py::list e;
    for (Exponent x : g.e) e.append(x);
    out.append(e);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_mical, m) {
  m.doc() = "monomial ideal combinatorics";

  py::class_<Monomial>(m, "Monomial")
      .def(py::init([](const std::string& text, int n) { return parse_monomial(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_property_readonly("exponents", [](const Monomial& u) { return u.e; })
      .def_property_readonly("degree", &Monomial::degree)
      .def_property_readonly("max_var", &Monomial::max_var)
      .def("__str__", [](const Monomial& u) { return to_string(u); })
      .def("__repr__", [](const Monomial& u) { return "Monomial(" + to_string(u) + ")"; })
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init([](const std::string& text, int n) { return parse_ideal(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_readonly("n", &MonomialIdeal::n)
      .def_property_readonly("gens",
                             [](const MonomialIdeal& I) {
                               std::vector<std::string> out;
                               for (const Monomial& g : I.gens) out.push_back(to_string(g));
                               return out;
                             })
      .def_property_readonly("exponents", &exponents_list)
      .def("contains",
           [](const MonomialIdeal& I, const std::string& mono) {
             return I.contains(parse_monomial(mono, I.n));
           })
      .def("is_artinian", &MonomialIdeal::is_artinian)
      .def("__str__", [](const MonomialIdeal& I) { return to_string(I); })
      .def("__repr__",
           [](const MonomialIdeal& I) { return "MonomialIdeal(" + to_string(I) + ")"; })
      .def("__eq__",
           [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; });

  m.def("parse_ideal", &parse_ideal, py::arg("text"), py::arg("n"));
  m.def("infer_vars", &scan_max_index, py::arg("text"));

  m.def("ideal_sum", &ideal_sum);
  m.def("ideal_product", &ideal_product);
  m.def("ideal_intersection", &ideal_intersection);
  m.def(
      "saturate", [](const MonomialIdeal& I, int j) { return mical::saturate(I, j); },
      py::arg("ideal"), py::arg("var"));
  m.def(
      "truncate", [](const MonomialIdeal& I, Degree e) { return mical::truncate(I, e); },
      py::arg("ideal"), py::arg("degree"));
  m.def(
      "colon",
      [](const MonomialIdeal& I, const std::string& mono) {
        return colon(I, parse_monomial(mono, I.n));
      },
      py::arg("ideal"), py::arg("monomial"));
  m.def("standard_monomials", [](const MonomialIdeal& I, Degree k) {
    std::vector<std::string> out;
    for (const Monomial& w : standard_monomials(I, k)) out.push_back(to_string(w));
    return out;
  });

  m.def("is_stable", [](const MonomialIdeal& I) { return classification_dict(is_stable(I)); });
  m.def("is_strongly_stable",
        [](const MonomialIdeal& I) { return classification_dict(is_strongly_stable(I)); });
  m.def("is_borel_type",
        [](const MonomialIdeal& I) { return classification_dict(is_borel_type(I)); });
  m.def("is_sbt", [](const MonomialIdeal& I) { return classification_dict(is_sbt(I)); });

  m.def("sequential_chain", [](const MonomialIdeal& I) {
    py::list out;
    for (const auto& link : sequential_chain(I).links)
      out.append(py::make_tuple(link.pivot, link.ideal));
    return out;
  });

  m.def("regularity", [](const MonomialIdeal& I) {
    ChainRegularityReport rep = regularity_via_chain(I);
    Degree ms = regularity_min_stable(I);
    py::dict d;
    d["chain"] = rep.regularity;
    d["min_stable"] = ms;
    d["agree"] = rep.regularity == ms;
    std::vector<Degree> svals;
    for (const auto& link : rep.links) svals.push_back(link.s);
    d["s_values"] = svals;
    return d;
  });
  m.def("q_bound", &q_bound);

  py::class_<DSequence>(m, "DSequence")
      .def(py::init([](const std::string& text) { return DSequence::parse(text); }),
           py::arg("text"))
      .def("__str__", [](const DSequence& d) { return d.str(); });

  m.def("decompose", [](Exponent a, const DSequence& d) { return decompose(a, d).digits; });
  m.def("leq_d", &leq_d);
  m.def("split_leq_d", &split_leq_d);

  m.def("principal_dfixed", [](const std::string& mono, const DSequence& d, int n) {
    return principal_dfixed(parse_monomial(mono, n), d);
  });
  m.def("dfixed_closure", [](const std::vector<std::string>& gens, const DSequence& d, int n) {
    std::vector<Monomial> parsed;
    for (const std::string& s : gens) parsed.push_back(parse_monomial(s, n));
    return dfixed_closure(parsed, d);
  });
  m.def("is_dfixed",
        [](const MonomialIdeal& I, const DSequence& d) { return is_dfixed(I, d).holds; });
  m.def("sbt_principal", [](const std::string& mono, int n) {
    return sbt_principal(parse_monomial(mono, n));
  });
  m.def("sbt_regularity", [](const std::string& mono, int n) {
    SbtRegularityReport r = sbt_regularity(parse_monomial(mono, n));
    py::dict d;
    d["chi"] = r.chi;
    d["regularity"] = r.regularity;
    return d;
  });
  m.def("pardue_regularity", [](const std::string& mono, const DSequence& d, int n) {
    PardueReport r = pardue_regularity(parse_monomial(mono, n), d);
    py::dict out;
    out["regularity"] = r.regularity;
    out["x1_offset"] = r.x1_offset;
    py::list blocks;
    for (const auto& b : r.blocks) {
      py::dict bd;
      bd["index"] = b.index;
      bd["exponent"] = b.exponent;
      bd["digits"] = b.digits;
      bd["D"] = b.D;
      blocks.append(bd);
    }
    out["blocks"] = blocks;
    return out;
  });

  m.def("socle_bruteforce", [](const MonomialIdeal& I) {
    py::dict out;
    SocleReport rep = socle_bruteforce(I);
    py::list by_degree;
    for (const auto& [deg, basis] : rep.by_degree) {
      std::vector<std::string> names;
      for (const Monomial& w : basis) names.push_back(to_string(w));
      by_degree.append(py::make_tuple(deg, names));
    }
    out["by_degree"] = by_degree;
    out["max_degree"] = rep.max_degree;
    return out;
  });
  m.def("socle_closed_form", [](const std::string& mono, const DSequence& d, int n) {
    Monomial u = parse_monomial(mono, n);
    auto blocks = variable_blocks(u);
    py::dict out;
    py::list pieces;
    MonomialIdeal J = MonomialIdeal::zero(n);
    if (blocks.size() == 1 && blocks[0].first == n) {
      auto cf = socle_principal_power(blocks[0].second, d, n);
      J = cf.J;
      for (const auto& p : cf.pieces) {
        py::dict pd;
        pd["t"] = p.t;
        pd["degree"] = p.degree;
        pd["dim"] = p.dim;
        pieces.append(pd);
      }
    } else {
      auto cf = socle_dfixed(u, d);
      J = cf.J;
      for (const auto& p : cf.pieces) {
        py::dict pd;
        pd["lambda"] = p.lambda;
        pd["t"] = p.t;
        pd["degree"] = p.degree;
        pieces.append(pd);
      }
    }
    out["pieces"] = pieces;
    out["J"] = J;
    return out;
  });
  m.def("powers_of_variables",
        [](const std::vector<std::pair<int, Exponent>>& pairs, const DSequence& d, int n) {
          return powers_of_variables(pairs, d, n).ideal;
        });

  m.def("hilbert_ci", [](const std::vector<int>& degrees) { return hilbert_ci(degrees).h; });
  m.def(
      "hilbert_quotient",
      [](const MonomialIdeal& I, Degree upto) { return hilbert_quotient(I, upto).h; },
      py::arg("ideal"), py::arg("upto"));

  m.def("closed_form_gin", &closed_form_gin);
  m.def("generator_count", &generator_count);
  m.def(
      "construct_gin",
      [](const std::vector<int>& degrees, bool revlex_first_slice,
         unsigned long long budget) {
        GinOptions opt;
        opt.revlex_first_slice = revlex_first_slice;
        opt.node_budget = budget;
        return construct_gin(degrees, opt);
      },
      py::arg("degrees"), py::arg("revlex_first_slice") = false,
      py::arg("budget") = 1'000'000ULL);
  m.def(
      "check_lefschetz",
      [](const MonomialIdeal& I, bool strong) {
        LefschetzReport r = check_lefschetz(I, strong);
        py::dict d;
        d["holds"] = r.holds;
        py::list fails;
        for (const auto& f : r.failures)
          fails.append(py::make_tuple(f.t, f.b, f.needed_injective ? "injective" : "surjective",
                                      to_string(f.witness)));
        d["failures"] = fails;
        return d;
      },
      py::arg("ideal"), py::arg("strong") = true);
  m.def("is_almost_revlex",
        [](const MonomialIdeal& I) { return is_almost_revlex(I).holds; });
}
