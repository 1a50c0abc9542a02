// Command-line surface: every library operation behind the text grammar,
// with human-readable output or a stable JSON envelope.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mical/borel.hpp"
#include "mical/dfixed.hpp"
#include "mical/gin.hpp"
#include "mical/hilbert.hpp"

using namespace mical;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json mono_json(const Monomial& u) {
  json j = json::array();
  for (Exponent e : u.e) j.push_back(e);
  return j;
}

json ideal_json(const MonomialIdeal& I) {
  json j;
  j["n"] = I.n;
  json gens = json::array(), pretty = json::array();
  for (const Monomial& g : I.gens) {
    gens.push_back(mono_json(g));
    pretty.push_back(to_string(g));
  }
  j["gens"] = gens;
  j["pretty"] = pretty;
  return j;
}

json witness_json(const ExchangeWitness& w) {
  return json{{"generator", to_string(w.generator)}, {"i", w.i}, {"j", w.j}};
}

struct Output {
  bool as_json = false;
  json result;
  std::vector<std::string> errors;
  std::vector<std::string> notes;
  std::ostringstream text;

  void error(const std::string& msg) { errors.push_back(msg); }

  int emit(const std::string& command, std::chrono::steady_clock::time_point t0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (as_json) {
      json envelope;
      envelope["schema_version"] = kSchemaVersion;
      envelope["command"] = command;
      envelope["ok"] = errors.empty();
      json diags = json::array();
      for (const std::string& e : errors)
        diags.push_back({{"level", "error"}, {"message", e}});
      for (const std::string& n : notes)
        diags.push_back({{"level", "note"}, {"message", n}});
      envelope["diagnostics"] = diags;
      envelope["elapsed_ms"] = ms;
      envelope["result"] = result;
      std::cout << envelope.dump(2) << "\n";
    } else {
      std::cout << text.str();
      for (const std::string& n : notes) std::cout << "note: " << n << "\n";
      for (const std::string& e : errors) std::cout << "error: " << e << "\n";
    }
    return errors.empty() ? 0 : 1;
  }
};

int resolve_n(int n_flag, bool infer, const std::string& text) {
  if (infer) {
    int n = scan_max_index(text);
    if (n < 1) throw std::invalid_argument("cannot infer the variable count from the input");
    return n;
  }
  if (n_flag < 1)
    throw std::invalid_argument("pass --n <count> (or --infer-n to infer it)");
  return n_flag;
}

std::string verdict(const ClassificationResult& r) {
  if (r.holds) return "yes";
  std::ostringstream os;
  os << "no (witness: generator " << to_string(r.witness->generator) << ", move x"
     << r.witness->i << " -> x" << r.witness->j << ")";
  return os.str();
}

// ---- repro: the golden values, regenerated -------------------------------

std::string repro_report() {
  std::ostringstream os;
  const DSequence d = DSequence::parse("1|2|4|12");
  MonomialIdeal running =
      parse_ideal("(x1^7,x1^5*x2,x1^2*x2^4,x1*x2^6,x1^5*x3^2,x1*x2^4*x3^2)", 4);

  os << "[regularity]\n";
  auto both = [&](const MonomialIdeal& I) {
    ChainRegularityReport rep = regularity_via_chain(I);
    Degree min_stable = regularity_min_stable(I);
    std::ostringstream line;
    line << rep.regularity
         << (rep.regularity == min_stable ? " (both routes)" : " (ROUTES DISAGREE)");
    return line.str();
  };
  os << "saturation-chain example: " << both(running) << "\n";
  os << "(x1^2,x2^2): " << both(parse_ideal("(x1^2,x2^2)", 2)) << "\n";
  os << "SBT(x2^7*x3^6): " << both(sbt_principal(parse_monomial("x2^7*x3^6", 3)))
     << ", formula " << sbt_regularity(parse_monomial("x2^7*x3^6", 3)).regularity << "\n";
  os << "<x3^21>_d: " << both(principal_dfixed(parse_monomial("x3^21", 3), d))
     << ", formula " << pardue_regularity(parse_monomial("x3^21", 3), d).regularity << "\n";
  os << "<x1^2*x2^16*x3^9>_d: formula "
     << pardue_regularity(parse_monomial("x1^2*x2^16*x3^9", 3), d).regularity << "\n";

  os << "\n[principal ideals]\n";
  os << "<x3^21>_d = " << to_string(principal_dfixed(parse_monomial("x3^21", 3), d)) << "\n";
  os << "<x1^2*x2^9*x3^16>_d = "
     << to_string(principal_dfixed(parse_monomial("x1^2*x2^9*x3^16", 3), d)) << "\n";
  os << "SBT(x2^7*x3^6) = " << to_string(sbt_principal(parse_monomial("x2^7*x3^6", 3)))
     << "\n";
  auto powers = powers_of_variables({{2, 7}, {3, 10}, {5, 17}}, d, 5);
  os << "<x2^7,x3^10,x5^17>_d = " << to_string(powers.ideal) << "\n";
  os << "closure agreement: "
     << (powers.ideal == dfixed_closure({parse_monomial("x2^7", 5),
                                         parse_monomial("x3^10", 5),
                                         parse_monomial("x5^17", 5)},
                                        d)
             ? "yes"
             : "NO")
     << "\n";

  os << "\n[socle]\n";
  {
    auto cf = socle_principal_power(21, d, 3);
    os << "x3^21 socle degrees:";
    for (const auto& p : cf.pieces) os << " " << p.degree << "(dim " << p.dim << ")";
    MonomialIdeal P = principal_dfixed(parse_monomial("x3^21", 3), d);
    os << "; brute force agrees: "
       << (socle_basis_mod(P, cf.J).by_degree == socle_bruteforce(P).by_degree ? "yes" : "NO")
       << "\n";
    Monomial u = parse_monomial("x2^9*x3^16", 3);
    auto general = socle_dfixed(u, d);
    os << "x2^9*x3^16 socle pieces: " << general.pieces.size() << ", top degree "
       << general.max_degree;
    MonomialIdeal Q = principal_dfixed(u, d);
    os << "; brute force agrees: "
       << (socle_basis_mod(Q, general.J).by_degree == socle_bruteforce(Q).by_degree ? "yes"
                                                                                    : "NO")
       << "\n";
  }

  os << "\n[hilbert]\n";
  auto series = [&](const std::vector<int>& degs) {
    std::ostringstream line;
    for (long long v : hilbert_ci(degs).h) line << v << " ";
    return line.str();
  };
  os << "(3,3,3): " << series({3, 3, 3}) << "\n";
  os << "(2,2,2,2): " << series({2, 2, 2, 2}) << "\n";

  os << "\n[gin closed forms]\n";
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{3, 3, 9},
                                                        {3, 4, 9},
                                                        {5, 5, 5},
                                                        {6, 6, 6},
                                                        {4, 4, 6},
                                                        {4, 4, 5},
                                                        {4, 6, 6},
                                                        {3, 6, 6},
                                                        {3, 5, 6},
                                                        {4, 5, 6}}) {
    os << "(" << a << "," << b << "," << c << ") mu=" << generator_count(a, b, c) << " "
       << to_string(closed_form_gin(a, b, c)) << "\n";
  }

  os << "\n[gin constructed]\n";
  {
    auto q4 = construct_gin({2, 2, 2, 2});
    os << "(2,2,2,2): " << q4.size() << " solution(s) " << to_string(q4[0]) << "\n";
    GinOptions opt;
    opt.revlex_first_slice = true;
    auto q5 = construct_gin({2, 2, 2, 2, 2}, opt);
    os << "(2,2,2,2,2): " << q5.size() << " solution(s) " << to_string(q5[0]) << "\n";
    auto c4 = construct_gin({3, 3, 3, 3}, opt);
    os << "(3,3,3,3): " << c4.size() << " solution(s)\n";
    for (const auto& J : c4) os << "  " << to_string(J) << "\n";
  }

  os << "\n[lefschetz]\n";
  {
    MonomialIdeal W = parse_ideal(
        "(x1^3,x1^2*x2,x1*x2^2,x2^4,x1^2*x3^2,x2^3*x3^2,x1*x2*x3^3,"
        "x1*x3^4,x2^2*x3^4,x2*x3^5,x3^7)",
        3);
    os << "weak-only ideal: weak " << (check_lefschetz(W, false).holds ? "passes" : "FAILS");
    LefschetzReport strong = check_lefschetz(W, true);
    os << ", strong " << (strong.holds ? "PASSES" : "fails at");
    for (const auto& f : strong.failures) os << " (t=" << f.t << ",b=" << f.b << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial ideal combinatorics"};
  app.require_subcommand(1);
  Output out;

  int n_flag = 0;
  bool infer_n = false;
  std::string dseq_text;
  auto add_common = [&](CLI::App* sub, bool with_d = false) {
    sub->add_flag("--json", out.as_json, "emit a JSON envelope");
    sub->add_option("--n", n_flag, "ambient variable count");
    sub->add_flag("--infer-n", infer_n, "infer the variable count from the largest index");
    if (with_d) sub->add_option("--d", dseq_text, "d-sequence, e.g. 1|2|4|12");
  };

  std::string ideal_text, mono_text, powers_text, golden_path;
  std::vector<int> degree_args;
  Degree upto = 12;
  bool weak_only = false, revlex_start = false, write_golden = false, check_closure = false;
  bool piecewise = false;
  unsigned long long budget = 1'000'000;
  if (const char* env = std::getenv("MICAL_GIN_BUDGET"))
    budget = std::strtoull(env, nullptr, 10);

  auto* classify = app.add_subcommand("classify", "stability classifications of an ideal");
  classify->add_option("ideal", ideal_text)->required();
  add_common(classify, true);

  auto* chain = app.add_subcommand("chain", "sequential saturation chain");
  chain->add_option("ideal", ideal_text)->required();
  add_common(chain);

  auto* reg = app.add_subcommand("reg", "regularity by both routes");
  reg->add_option("ideal", ideal_text)->required();
  add_common(reg);

  auto* dgen = app.add_subcommand("dfixed-gen", "principal d-fixed ideal of a monomial");
  dgen->add_option("monomial", mono_text)->required();
  dgen->add_flag("--check", check_closure, "cross-check against the move closure");
  add_common(dgen, true);

  auto* sgen = app.add_subcommand("sbt-gen", "principal strong-Borel-type ideal");
  sgen->add_option("monomial", mono_text)->required();
  add_common(sgen);

  auto* pard = app.add_subcommand("pardue", "closed-form regularity of <u>_d");
  pard->add_option("monomial", mono_text)->required();
  add_common(pard, true);

  auto* soc = app.add_subcommand("socle", "socle of S/<u>_d, closed form and brute force");
  soc->add_option("monomial", mono_text)->required();
  add_common(soc, true);

  auto* pow = app.add_subcommand("powers", "d-fixed ideal generated by powers of variables");
  pow->add_option("powers", powers_text, "comma list of pure powers, e.g. x2^7,x3^10")
      ->required();
  add_common(pow, true);

  auto* hil = app.add_subcommand("hilbert", "Hilbert functions");
  hil->add_option("degrees", degree_args, "complete-intersection degrees");
  hil->add_option("--ideal", ideal_text, "monomial quotient instead");
  hil->add_option("--upto", upto, "top degree for quotient evaluation");
  hil->add_flag("--piecewise", piecewise, "also evaluate the closed piecewise tables");
  add_common(hil);

  auto* gcl = app.add_subcommand("gin-closed", "closed-form generic initial ideal (n=3)");
  gcl->add_option("degrees", degree_args, "d1 d2 d3")->expected(3);
  add_common(gcl);

  auto* gco = app.add_subcommand("gin-construct", "degree-by-degree Gin constructor");
  gco->add_option("degrees", degree_args, "d1 .. dn")->expected(-2);
  gco->add_flag("--revlex-start", revlex_start,
                "restrict the first slice to the revlex segment");
  gco->add_option("--budget", budget, "search node budget");
  add_common(gco);

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz element check for x_n");
  lef->add_option("ideal", ideal_text)->required();
  lef->add_flag("--weak", weak_only, "check only the weak property");
  add_common(lef);

  auto* arl = app.add_subcommand("almost-revlex", "almost-revlex check");
  arl->add_option("ideal", ideal_text)->required();
  add_common(arl);

  auto* rep = app.add_subcommand("repro", "regenerate the golden values and diff");
  rep->add_option("--golden", golden_path, "golden file to diff against");
  rep->add_flag("--write", write_golden, "write the golden file instead of diffing");
  rep->add_flag("--json", out.as_json, "emit a JSON envelope");

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (classify->parsed()) {
      int n = resolve_n(n_flag, infer_n, ideal_text);
      MonomialIdeal I = parse_ideal(ideal_text, n);
      auto st = is_stable(I), ss = is_strongly_stable(I), bt = is_borel_type(I),
           sbt = is_sbt(I);
      out.text << "stable:          " << verdict(st) << "\n";
      out.text << "strongly stable: " << verdict(ss) << "\n";
      out.text << "strong Borel:    " << verdict(sbt) << "\n";
      out.text << "Borel type:      " << verdict(bt) << "\n";
      out.result["stable"] = st.holds;
      out.result["strongly_stable"] = ss.holds;
      out.result["sbt"] = sbt.holds;
      out.result["borel_type"] = bt.holds;
      for (auto [name, r] :
           std::initializer_list<std::pair<const char*, const ClassificationResult*>>{
               {"stable", &st}, {"strongly_stable", &ss}, {"sbt", &sbt}, {"borel_type", &bt}})
        if (!r->holds) out.result[std::string(name) + "_witness"] = witness_json(*r->witness);
      if (!dseq_text.empty()) {
        DSequence d = DSequence::parse(dseq_text);
        auto df = is_dfixed(I, d);
        out.text << "d-fixed (" << d.str() << "): ";
        if (df.holds) {
          out.text << "yes\n";
        } else {
          out.text << "no (witness: generator " << to_string(df.witness->generator)
                   << ", move x" << df.witness->i << "^" << df.witness->t << " -> x"
                   << df.witness->j << ")\n";
          out.result["dfixed_witness"] = {{"generator", to_string(df.witness->generator)},
                                          {"i", df.witness->i},
                                          {"j", df.witness->j},
                                          {"t", df.witness->t}};
        }
        out.result["dfixed"] = df.holds;
      }
    } else if (chain->parsed()) {
      int n = resolve_n(n_flag, infer_n, ideal_text);
      SequentialChain c = sequential_chain(parse_ideal(ideal_text, n));
      json links = json::array();
      for (const auto& link : c.links) {
        out.text << "pivot x" << link.pivot << ": " << to_string(link.ideal) << "\n";
        links.push_back({{"pivot", link.pivot}, {"ideal", ideal_json(link.ideal)}});
      }
      out.result["links"] = links;
      out.result["length"] = c.length();
    } else if (reg->parsed()) {
      int n = resolve_n(n_flag, infer_n, ideal_text);
      MonomialIdeal I = parse_ideal(ideal_text, n);
      ChainRegularityReport cr = regularity_via_chain(I);
      Degree ms = regularity_min_stable(I);
      if (cr.regularity != ms) out.error("regularity routes disagree");
      out.text << "regularity: " << cr.regularity << " (chain) / " << ms
               << " (min stable truncation)\n";
      json svals = json::array();
      out.text << "s-values:";
      for (const auto& link : cr.links) {
        out.text << " " << link.s;
        svals.push_back(link.s);
      }
      out.text << "\n";
      json corners = json::array();
      for (const auto& link : cr.links)
        corners.push_back({{"pivot", link.pivot}, {"s", link.s}, {"dim", link.top_dim}});
      out.result["regularity"] = cr.regularity;
      out.result["s_values"] = svals;
      out.result["corner_candidates"] = corners;
      out.result["q_bound"] = I.q_bound();
    } else if (dgen->parsed()) {
      int n = resolve_n(n_flag, infer_n, mono_text);
      if (dseq_text.empty()) throw std::invalid_argument("pass --d");
      DSequence d = DSequence::parse(dseq_text);
      Monomial u = parse_monomial(mono_text, n);
      MonomialIdeal I = principal_dfixed(u, d);
      if (check_closure && dfixed_closure({u}, d) != I)
        out.error("closure oracle disagrees with the block product");
      out.text << to_string(I) << "\n";
      out.result["ideal"] = ideal_json(I);
    } else if (sgen->parsed()) {
      int n = resolve_n(n_flag, infer_n, mono_text);
      Monomial u = parse_monomial(mono_text, n);
      MonomialIdeal I = sbt_principal(u);
      out.text << to_string(I) << "\n";
      out.result["ideal"] = ideal_json(I);
      auto blocks = variable_blocks(u);
      bool weakly_dec = true;
      for (std::size_t q = 1; q < blocks.size(); ++q)
        if (blocks[q - 1].second < blocks[q].second) weakly_dec = false;
      if (weakly_dec) {
        auto r = sbt_regularity(u);
        out.text << "regularity " << r.regularity << "\n";
        out.result["regularity"] = r.regularity;
      }
    } else if (pard->parsed()) {
      int n = resolve_n(n_flag, infer_n, mono_text);
      if (dseq_text.empty()) throw std::invalid_argument("pass --d");
      DSequence d = DSequence::parse(dseq_text);
      PardueReport r = pardue_regularity(parse_monomial(mono_text, n), d);
      out.text << "regularity: " << r.regularity << "\n";
      json blocks = json::array();
      for (const auto& b : r.blocks) {
        out.text << "block x" << b.index << "^" << b.exponent << ": D = " << b.D << "\n";
        blocks.push_back({{"index", b.index},
                          {"exponent", b.exponent},
                          {"digits", b.digits},
                          {"s", b.s},
                          {"D", b.D}});
      }
      if (r.x1_offset) out.text << "x1 offset: " << r.x1_offset << "\n";
      out.result["regularity"] = r.regularity;
      out.result["x1_offset"] = r.x1_offset;
      out.result["blocks"] = blocks;
    } else if (soc->parsed()) {
      int n = resolve_n(n_flag, infer_n, mono_text);
      if (dseq_text.empty()) throw std::invalid_argument("pass --d");
      DSequence d = DSequence::parse(dseq_text);
      Monomial u = parse_monomial(mono_text, n);
      MonomialIdeal I = principal_dfixed(u, d);
      auto blocks = variable_blocks(u);
      json pieces = json::array();
      MonomialIdeal J = MonomialIdeal::zero(n);
      if (blocks.size() == 1 && blocks[0].first == n) {
        auto cf = socle_principal_power(blocks[0].second, d, n);
        J = cf.J;
        for (const auto& p : cf.pieces) {
          out.text << "piece t=" << p.t << ": degree " << p.degree << ", dim " << p.dim
                   << "\n";
          pieces.push_back({{"t", p.t}, {"degree", p.degree}, {"dim", p.dim}});
        }
      } else {
        auto cf = socle_dfixed(u, d);
        J = cf.J;
        for (const auto& p : cf.pieces) {
          out.text << "piece lambda=(";
          for (std::size_t i = 0; i < p.lambda.size(); ++i)
            out.text << (i ? "," : "") << p.lambda[i];
          out.text << ") t=(";
          for (std::size_t i = 0; i < p.t.size(); ++i) out.text << (i ? "," : "") << p.t[i];
          out.text << "): degree " << p.degree << "\n";
          pieces.push_back({{"lambda", p.lambda}, {"t", p.t}, {"degree", p.degree}});
        }
      }
      SocleReport brute = socle_bruteforce(I);
      SocleReport closed = socle_basis_mod(I, J);
      bool agree = brute.by_degree == closed.by_degree;
      if (!agree) out.error("closed-form socle disagrees with brute force");
      out.text << "socle dimensions by degree:";
      json dims = json::array();
      for (const auto& [deg, basis] : brute.by_degree) {
        out.text << " " << deg << ":" << basis.size();
        dims.push_back({{"degree", deg}, {"dim", basis.size()}});
      }
      out.text << "\n";
      out.result["pieces"] = pieces;
      out.result["dimensions"] = dims;
      out.result["max_degree"] = brute.max_degree;
    } else if (pow->parsed()) {
      if (dseq_text.empty()) throw std::invalid_argument("pass --d");
      DSequence d = DSequence::parse(dseq_text);
      int n = resolve_n(n_flag, infer_n, powers_text);
      std::vector<std::pair<int, Exponent>> pairs;
      std::stringstream ss(powers_text);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        Monomial u = parse_monomial(piece, n);
        auto blocks = variable_blocks(u);
        if (blocks.size() != 1)
          throw std::invalid_argument("powers must be pure powers of single variables");
        pairs.push_back(blocks[0]);
      }
      PowersReport r = powers_of_variables(pairs, d, n);
      out.text << to_string(r.ideal) << "\n";
      out.result["ideal"] = ideal_json(r.ideal);
      json tuples = json::array();
      for (const auto& per_q : r.gamma_tuples) tuples.push_back(per_q);
      out.result["gamma_tuples"] = tuples;
    } else if (hil->parsed()) {
      if (!ideal_text.empty()) {
        int n = resolve_n(n_flag, infer_n, ideal_text);
        HilbertFn H = hilbert_quotient(parse_ideal(ideal_text, n), upto);
        out.text << "H:";
        for (long long v : H.h) out.text << " " << v;
        out.text << "\n";
        out.result["values"] = H.h;
      } else if (!degree_args.empty()) {
        HilbertFn H = hilbert_ci(degree_args);
        out.text << "H:";
        for (long long v : H.h) out.text << " " << v;
        out.text << "\n";
        out.result["values"] = H.h;
        if (piecewise && degree_args.size() == 3) {
          PiecewiseReport pr =
              piecewise_hilbert(degree_args[0], degree_args[1], degree_args[2]);
          out.result["piecewise_case"] = pr.case_name;
          out.result["piecewise_divergences"] = pr.divergences.size();
          out.text << pr.case_name << ": " << pr.divergences.size() << " divergence(s)\n";
          for (const auto& dv : pr.divergences)
            out.notes.push_back(dv.piece + " at k=" + std::to_string(dv.k) + ": formula " +
                                dv.formula + ", product " + std::to_string(dv.oracle));
        }
      } else {
        throw std::invalid_argument("pass degrees or --ideal");
      }
    } else if (gcl->parsed()) {
      MonomialIdeal J = closed_form_gin(degree_args[0], degree_args[1], degree_args[2]);
      out.text << to_string(J) << "\n";
      out.text << "minimal generators: " << J.gens.size() << "\n";
      out.result["ideal"] = ideal_json(J);
      out.result["generator_count"] =
          generator_count(degree_args[0], degree_args[1], degree_args[2]);
    } else if (gco->parsed()) {
      GinOptions opt;
      opt.node_budget = budget;
      opt.revlex_first_slice = revlex_start;
      std::vector<MonomialIdeal> sols = construct_gin(degree_args, opt);
      out.text << sols.size() << " solution(s)\n";
      json list = json::array();
      for (const auto& J : sols) {
        out.text << to_string(J) << "\n";
        list.push_back(ideal_json(J));
      }
      out.result["solutions"] = sols.size();
      out.result["ideals"] = list;
    } else if (lef->parsed()) {
      int n = resolve_n(n_flag, infer_n, ideal_text);
      LefschetzReport r = check_lefschetz(parse_ideal(ideal_text, n), !weak_only);
      out.text << (weak_only ? "weak" : "strong") << " Lefschetz element x" << r.element
               << ": " << (r.holds ? "yes" : "no") << "\n";
      json fails = json::array();
      for (const auto& f : r.failures) {
        out.text << "  fails at (t=" << f.t << ", b=" << f.b << "), "
                 << (f.needed_injective ? "injectivity" : "surjectivity") << ", witness "
                 << to_string(f.witness) << "\n";
        fails.push_back({{"t", f.t},
                         {"b", f.b},
                         {"needed", f.needed_injective ? "injective" : "surjective"},
                         {"witness", to_string(f.witness)}});
      }
      out.result["holds"] = r.holds;
      out.result["failures"] = fails;
    } else if (arl->parsed()) {
      int n = resolve_n(n_flag, infer_n, ideal_text);
      AlmostRevlexResult r = is_almost_revlex(parse_ideal(ideal_text, n));
      out.text << "almost revlex: " << (r.holds ? "yes" : "no") << "\n";
      out.result["holds"] = r.holds;
      if (!r.holds) {
        out.text << "  generator " << to_string(r.witness->first) << " missing predecessor "
                 << to_string(r.witness->second) << "\n";
        out.result["witness"] = {{"generator", to_string(r.witness->first)},
                                 {"missing", to_string(r.witness->second)}};
      }
    } else if (rep->parsed()) {
      std::string report = repro_report();
      if (write_golden) {
        if (golden_path.empty()) throw std::invalid_argument("pass --golden with --write");
        std::ofstream f(golden_path);
        f << report;
        out.text << "wrote " << golden_path << "\n";
      } else if (!golden_path.empty()) {
        std::ifstream f(golden_path);
        if (!f.good()) throw std::invalid_argument("cannot read " + golden_path);
        std::stringstream buf;
        buf << f.rdbuf();
        if (buf.str() == report) {
          out.text << "repro: no diffs\n";
          out.result["diffs"] = 0;
        } else {
          out.error("repro differs from the golden file");
          std::istringstream got(report), want(buf.str());
          std::string a, b;
          int line = 0;
          while (std::getline(want, b)) {
            ++line;
            if (!std::getline(got, a)) a = "<missing>";
            if (a != b)
              out.notes.push_back("line " + std::to_string(line) + ": got '" + a +
                                  "', want '" + b + "'");
          }
        }
      } else {
        out.text << report;
      }
    }
  } catch (const std::exception& e) {
    out.error(e.what());
  }
  return out.emit(command, t0);
}
