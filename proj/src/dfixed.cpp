#include "mical/dfixed.hpp"

#include <algorithm>
#include <set>

namespace mical {

DSequence DSequence::make(std::vector<Exponent> terms) {
  if (terms.empty() || terms[0] != 1)
    throw std::invalid_argument("d-sequence must start with 1");
  for (std::size_t t = 1; t < terms.size(); ++t) {
    if (terms[t] <= terms[t - 1] || terms[t] % terms[t - 1] != 0)
      throw std::invalid_argument("d-sequence must be strictly increasing and divisible");
  }
  DSequence d;
  d.terms = std::move(terms);
  return d;
}

DSequence DSequence::parse(const std::string& text) {
  std::vector<Exponent> terms;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t bar = text.find('|', i);
    std::string piece = text.substr(i, bar == std::string::npos ? bar : bar - i);
    if (piece.empty()) throw std::invalid_argument("empty term in d-sequence");
    unsigned long long v = 0;
    for (char ch : piece) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("d-sequence terms must be integers");
      v = v * 10 + (ch - '0');
      if (v > 0xffffffffULL) throw std::overflow_error("d-sequence term overflow");
    }
    terms.push_back(static_cast<Exponent>(v));
    if (bar == std::string::npos) break;
    i = bar + 1;
  }
  return make(std::move(terms));
}

std::string DSequence::str() const {
  std::string s;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) s += '|';
    s += std::to_string(terms[t]);
  }
  return s;
}

Exponent DDecomposition::reconstruct(const DSequence& d) const {
  unsigned long long a = 0;
  for (std::size_t t = 0; t < digits.size(); ++t)
    a += checked_mul64(digits[t], d.term(static_cast<int>(t)));
  return checked_degree(a);
}

DDecomposition decompose(Exponent a, const DSequence& d) {
  DDecomposition out;
  out.digits.assign(d.terms.size(), 0);
  Exponent rest = a;
  for (int t = d.top_index(); t >= 0; --t) {
    out.digits[t] = rest / d.term(t);
    rest %= d.term(t);
  }
  return out;
}

bool leq_d(Exponent a, Exponent b, const DSequence& d) {
  DDecomposition da = decompose(a, d), db = decompose(b, d);
  for (std::size_t t = 0; t < da.digits.size(); ++t)
    if (da.digits[t] > db.digits[t]) return false;
  return true;
}

std::vector<Exponent> values_leq_d(Exponent bound, const DSequence& d, Exponent lo) {
  DDecomposition db = decompose(bound, d);
  std::vector<Exponent> vals{0};
  for (int t = 0; t <= d.top_index(); ++t) {
    std::vector<Exponent> next;
    next.reserve(vals.size() * (db.digits[t] + 1));
    for (Exponent v : vals)
      for (Exponent c = 0; c <= db.digits[t]; ++c)
        next.push_back(v + c * d.term(t));
    vals = std::move(next);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::remove_if(vals.begin(), vals.end(), [&](Exponent v) { return v < lo; }),
             vals.end());
  return vals;
}

std::pair<Exponent, Exponent> split_leq_d(Exponent a, Exponent b, Exponent b1,
                                          Exponent b2, const DSequence& d) {
  if (b1 + b2 != b || !leq_d(a, b, d))
    throw std::invalid_argument("split_leq_d needs a <=_d b and b = b1 + b2");
  for (Exponent a1 : values_leq_d(b1, d)) {
    if (a1 > a) break;
    Exponent a2 = a - a1;
    if (leq_d(a1, b1, d) && leq_d(a2, b2, d)) return {a1, a2};
  }
  throw std::logic_error("split_leq_d: no admissible split found");
}

std::vector<std::pair<int, Exponent>> variable_blocks(const Monomial& u) {
  std::vector<std::pair<int, Exponent>> blocks;
  for (int i = 1; i <= u.vars(); ++i)
    if (u.exp(i)) blocks.emplace_back(i, u.exp(i));
  return blocks;
}

namespace {

// ({x_lo^{k}, .., x_hi^{k}}) as an ideal of K[x_1..n]
MonomialIdeal power_block(int n, int lo, int hi, Exponent k) {
  std::vector<Monomial> gens;
  for (int v = lo; v <= hi; ++v) gens.push_back(Monomial::power(n, v, k));
  return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal multiply_power_blocks(MonomialIdeal acc, int lo, int hi,
                                    const DDecomposition& digits, const DSequence& d) {
  for (int t = 0; t < static_cast<int>(digits.digits.size()); ++t)
    for (Exponent rep = 0; rep < digits.digits[t]; ++rep)
      acc = ideal_product(acc, power_block(acc.n, lo, hi, d.term(t)));
  return acc;
}

}  // namespace

MonomialIdeal principal_dfixed(const Monomial& u, const DSequence& d) {
  if (u.is_unit()) throw std::domain_error("principal_dfixed needs a nonunit monomial");
  int n = u.vars();
  MonomialIdeal I = MonomialIdeal::whole_ring(n);
  for (const auto& [iq, alpha] : variable_blocks(u))
    I = multiply_power_blocks(std::move(I), 1, iq, decompose(alpha, d), d);
  return I;
}

MonomialIdeal dfixed_closure(const std::vector<Monomial>& gens, const DSequence& d) {
  if (gens.empty()) throw std::invalid_argument("dfixed_closure needs generators");
  int n = gens.front().vars();
  MonomialIdeal I = MonomialIdeal::make(n, gens);
  for (;;) {
    std::vector<Monomial> added;
    for (const Monomial& g : I.gens) {
      for (int i = 2; i <= n; ++i) {
        if (!g.exp(i)) continue;
        for (Exponent t : values_leq_d(g.exp(i), d, 1)) {
          for (int j = 1; j < i; ++j) {
            Monomial moved = g;
            moved.e[i - 1] -= t;
            moved.e[j - 1] = checked_add(moved.e[j - 1], t);
            if (!I.contains(moved)) added.push_back(moved);
          }
        }
      }
    }
    if (added.empty()) return I;
    added.insert(added.end(), I.gens.begin(), I.gens.end());
    I = MonomialIdeal::make(n, std::move(added));
  }
}

DfixedResult is_dfixed(const MonomialIdeal& I, const DSequence& d) {
  if (!I.is_proper_nonzero()) throw std::domain_error("is_dfixed needs a proper nonzero ideal");
  for (const Monomial& g : I.gens) {
    for (int i = 2; i <= I.n; ++i) {
      if (!g.exp(i)) continue;
      for (Exponent t : values_leq_d(g.exp(i), d, 1)) {
        for (int j = 1; j < i; ++j) {
          Monomial moved = g;
          moved.e[i - 1] -= t;
          moved.e[j - 1] = checked_add(moved.e[j - 1], t);
          if (!I.contains(moved)) return {false, DfixedWitness{g, i, j, t}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

MonomialIdeal sbt_principal(const Monomial& u) {
  if (u.is_unit()) throw std::domain_error("sbt_principal needs a nonunit monomial");
  int n = u.vars();
  MonomialIdeal I = MonomialIdeal::whole_ring(n);
  for (const auto& [iq, alpha] : variable_blocks(u))
    I = ideal_product(I, power_block(n, 1, iq, alpha));
  return I;
}

SbtRegularityReport sbt_regularity(const Monomial& u) {
  auto blocks = variable_blocks(u);
  if (blocks.empty()) throw std::domain_error("sbt_regularity needs a nonunit monomial");
  for (std::size_t q = 1; q < blocks.size(); ++q)
    if (blocks[q - 1].second < blocks[q].second)
      throw std::domain_error("sbt_regularity needs weakly decreasing block exponents");
  SbtRegularityReport rep;
  unsigned long long prefix = 0;
  for (const auto& [iq, alpha] : blocks) {
    Degree chi =
        checked_degree(prefix + static_cast<unsigned long long>(alpha - 1) * iq);
    rep.chi.push_back(chi);
    rep.regularity = std::max<Degree>(rep.regularity, chi + 1);
    prefix += alpha;
  }
  return rep;
}

PardueReport pardue_regularity(const Monomial& u, const DSequence& d) {
  if (u.is_unit()) throw std::domain_error("pardue_regularity needs a nonunit monomial");
  PardueReport rep;
  auto blocks = variable_blocks(u);
  if (blocks.front().first == 1) {
    rep.x1_offset = blocks.front().second;  // <u>_d = x_1^{a_1} <u'>_d
    blocks.erase(blocks.begin());
  }
  if (blocks.empty()) {
    rep.regularity = rep.x1_offset;
    return rep;
  }
  int s_max = d.top_index();
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    PardueReport::Block b;
    b.index = blocks[q].first;
    b.exponent = blocks[q].second;
    b.digits = decompose(b.exponent, d).digits;
    for (int t = 0; t <= s_max; ++t)
      if (b.digits[t]) b.s = t;
    unsigned long long partial = 0;
    for (std::size_t e = 0; e <= q; ++e) {
      DDecomposition de = decompose(blocks[e].second, d);
      for (int j = b.s; j <= s_max; ++j)
        partial += static_cast<unsigned long long>(de.digits[j]) * d.term(j);
    }
    b.partial = checked_degree(partial);
    b.D = checked_degree(partial + static_cast<unsigned long long>(b.index - 1) *
                                       (d.term(b.s) - 1));
    rep.blocks.push_back(std::move(b));
  }
  Degree best = 0;
  for (const auto& b : rep.blocks) best = std::max(best, b.D);
  rep.regularity = rep.x1_offset + best;
  return rep;
}

// ---- socles -------------------------------------------------------------

namespace {

// A socle monomial w has nu_i(w) = nu_i(g) - 1 for some generator g dividing
// x_i * w but not w, so each exponent is below the largest generator exponent
// of its variable.  That bounds the scan even off the Artinian case.
template <typename Keep>
SocleReport socle_scan(const MonomialIdeal& I, Keep keep) {
  if (!I.is_proper_nonzero()) throw std::domain_error("socle needs a proper nonzero ideal");
  unsigned long long bound = 0;
  for (int i = 1; i <= I.n; ++i) {
    Exponent top = 0;
    for (const Monomial& g : I.gens) top = std::max(top, g.exp(i));
    if (top == 0) return {};  // nothing is killed by x_i
    bound += top - 1;
  }
  DegreeSlices slices(I);
  SocleReport rep;
  for (Degree k = 0; k <= bound; ++k) {
    std::vector<Monomial> std_k;
    {
      const std::vector<Monomial>& ideal_k = slices.slice(k);
      for (const Monomial& w : all_monomials(I.n, k))
        if (!std::binary_search(ideal_k.begin(), ideal_k.end(), w, revlex_greater))
          std_k.push_back(w);
    }
    if (std_k.empty()) break;
    std::vector<Monomial> basis;
    for (const Monomial& w : std_k)
      if (keep(slices, w)) basis.push_back(w);
    if (!basis.empty()) {
      rep.max_degree = k;
      rep.by_degree.emplace_back(k, std::move(basis));
    }
  }
  return rep;
}

}  // namespace

SocleReport socle_bruteforce(const MonomialIdeal& I) {
  int n = I.n;
  return socle_scan(I, [n](DegreeSlices& slices, const Monomial& w) {
    for (int i = 1; i <= n; ++i)
      if (!slices.member(w.mul_var(i))) return false;
    return true;
  });
}

SocleReport socle_basis_mod(const MonomialIdeal& I, const MonomialIdeal& J) {
  return socle_scan(I, [&J](DegreeSlices&, const Monomial& w) { return J.contains(w); });
}

PrincipalSocle socle_principal_power(Exponent alpha, const DSequence& d, int n) {
  if (alpha < 1) throw std::domain_error("socle_principal_power needs alpha >= 1");
  if (n < 2) throw std::domain_error("socle_principal_power needs n >= 2");
  DDecomposition da = decompose(alpha, d);
  int s = d.top_index();
  PrincipalSocle out;
  out.J = MonomialIdeal::zero(n);
  for (int t = 0; t <= s; ++t) {
    if (!da.digits[t]) continue;
    // J_t = (x_1..x_n)^{d_t - 1} (m^{[d_t]})^{alpha_t - 1} prod_{j>t} (m^{[d_j]})^{alpha_j}
    Monomial corner = Monomial::unit(n);
    for (int v = 1; v <= n; ++v) corner.e[v - 1] = d.term(t) - 1;
    MonomialIdeal Jt = MonomialIdeal::make(n, {corner});
    for (Exponent rep = 1; rep < da.digits[t]; ++rep)
      Jt = ideal_product(Jt, power_block(n, 1, n, d.term(t)));
    for (int j = t + 1; j <= s; ++j)
      for (Exponent rep = 0; rep < da.digits[j]; ++rep)
        Jt = ideal_product(Jt, power_block(n, 1, n, d.term(j)));
    PrincipalSocle::Piece piece;
    piece.t = t;
    piece.ideal = Jt;
    unsigned long long q_t = 0;
    for (int j = t; j <= s; ++j)
      q_t += static_cast<unsigned long long>(da.digits[j]) * d.term(j);
    piece.degree =
        checked_degree(q_t + static_cast<unsigned long long>(n - 1) * (d.term(t) - 1) - 1);
    piece.dim = binomial(n + da.digits[t] - 2, n - 1);
    for (int j = t + 1; j <= s; ++j)
      piece.dim = checked_mul64(piece.dim, binomial(n + da.digits[j] - 1, n - 1));
    out.J = ideal_sum(out.J, Jt);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

DfixedSocle socle_dfixed(const Monomial& u, const DSequence& d) {
  if (u.is_unit()) throw std::domain_error("socle_dfixed needs a nonunit monomial");
  int n = u.vars();
  auto blocks = variable_blocks(u);
  int r = static_cast<int>(blocks.size());
  if (blocks.front().first < 2)
    throw std::domain_error("socle_dfixed needs 2 <= i_1 (x_1 must not divide u)");
  if (blocks.back().first != n)
    throw std::domain_error("socle_dfixed needs i_r = n");
  int s = d.top_index();
  std::vector<std::vector<Exponent>> digits(r);
  for (int q = 0; q < r; ++q) digits[q] = decompose(blocks[q].second, d).digits;
  auto block_index = [&](int q) { return blocks[q - 1].first; };  // i_q, 1-based q

  DfixedSocle out;
  out.J = MonomialIdeal::zero(n);

  // enumerate P_a(I): lambda_1 < .. < lambda_a = r, t_1 < .. < t_a,
  // digit (lambda_nu, t_nu) nonzero
  std::vector<int> lambda, tvec;
  auto assemble_piece = [&]() {
    int a = static_cast<int>(lambda.size());
    // run factors prod_e (x_{i_{lambda_{e-1}}+1} .. x_{i_{lambda_e}})^{d_{t_e}-1}
    Monomial runs = Monomial::unit(n);
    for (int e = 0; e < a; ++e) {
      int lo = e == 0 ? 1 : block_index(lambda[e - 1]) + 1;
      int hi = block_index(lambda[e]);
      for (int v = lo; v <= hi; ++v)
        runs.e[v - 1] = checked_add(runs.e[v - 1], d.term(tvec[e]) - 1);
    }
    MonomialIdeal piece = MonomialIdeal::make(n, {runs});
    for (int nu = 0; nu < a; ++nu) {
      int lq = lambda[nu];
      int ilq = block_index(lq);
      int tnu = tvec[nu];
      if (nu + 1 < a)
        piece = ideal_product(piece, power_block(n, 1, ilq, d.term(tvec[nu + 1])));
      for (int j = tnu + 1; j <= s; ++j)
        for (Exponent rep = 0; rep < digits[lq - 1][j]; ++rep)
          piece = ideal_product(piece, power_block(n, 1, ilq, d.term(j)));
      for (Exponent rep = 1; rep < digits[lq - 1][tnu]; ++rep)
        piece = ideal_product(piece, power_block(n, 1, ilq, d.term(tnu)));
      int prev = nu == 0 ? 0 : lambda[nu - 1];
      for (int q = prev + 1; q < lq; ++q)
        for (int j = tnu; j <= s; ++j)
          for (Exponent rep = 0; rep < digits[q - 1][j]; ++rep)
            piece = ideal_product(piece, power_block(n, 1, block_index(q), d.term(j)));
    }
    // predicted socle degree of the piece
    unsigned long long dsum = 0;
    for (int nu = 0; nu < a; ++nu) {
      int prev = nu == 0 ? 0 : lambda[nu - 1];
      for (int q = prev + 1; q <= lambda[nu]; ++q)
        for (int j = tvec[nu]; j <= s; ++j)
          dsum += static_cast<unsigned long long>(digits[q - 1][j]) * d.term(j);
    }
    unsigned long long deg = dsum;
    for (int nu = 0; nu < a; ++nu) {
      int prev_i = nu == 0 ? 0 : block_index(lambda[nu - 1]);
      deg += static_cast<unsigned long long>(block_index(lambda[nu]) - prev_i) *
             (d.term(tvec[nu]) - 1);
    }
    deg -= d.term(tvec[0]);
    DfixedSocle::Piece p;
    p.lambda = lambda;
    p.t = tvec;
    p.ideal = piece;
    p.degree = checked_degree(deg);
    out.J = ideal_sum(out.J, p.ideal);
    out.pieces.push_back(std::move(p));
  };

  auto rec = [&](auto&& self, int next_lambda, int min_t) -> void {
    if (!lambda.empty() && lambda.back() == r) {
      assemble_piece();
      return;
    }
    for (int l = next_lambda; l <= r; ++l) {
      for (int t = min_t; t <= s; ++t) {
        if (!digits[l - 1][t]) continue;
        lambda.push_back(l);
        tvec.push_back(t);
        self(self, l + 1, t + 1);
        lambda.pop_back();
        tvec.pop_back();
      }
    }
  };
  rec(rec, 1, 0);

  int s_r = 0;
  for (int t = 0; t <= s; ++t)
    if (digits[r - 1][t]) s_r = t;
  unsigned long long drs = 0;
  for (int q = 0; q < r; ++q)
    for (int j = s_r; j <= s; ++j)
      drs += static_cast<unsigned long long>(digits[q][j]) * d.term(j);
  out.max_degree =
      checked_degree(drs + static_cast<unsigned long long>(n - 1) * (d.term(s_r) - 1) - 1);
  return out;
}

// ---- powers of variables -------------------------------------------------

PowersReport powers_of_variables(std::vector<std::pair<int, Exponent>> pairs,
                                 const DSequence& d, int n) {
  if (pairs.empty()) throw std::invalid_argument("powers_of_variables needs input pairs");
  for (auto& [i, a] : pairs) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    if (a < 1) throw std::invalid_argument("exponents must be positive");
  }
  // absorption: <x_j^a> is contained in <x_{j'}^b> whenever j <= j', a >= b
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<int, Exponent>> kept;
  for (const auto& p : pairs) {
    bool absorbed = false;
    for (const auto& q : pairs) {
      if (q == p) continue;
      if (p.first <= q.first && p.second >= q.second &&
          (p.second > q.second || p.first < q.first)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(p);
  }
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (std::size_t q = 1; q < kept.size(); ++q)
    if (kept[q].first <= kept[q - 1].first || kept[q].second <= kept[q - 1].second)
      throw std::invalid_argument("pairs are not strictly increasing after absorption");

  PowersReport rep;
  rep.pairs = kept;
  rep.ideal = MonomialIdeal::zero(n);
  rep.gamma_tuples.resize(kept.size());

  int r = static_cast<int>(kept.size());
  int s = d.top_index();
  for (int q = 1; q <= r; ++q) {
    Exponent alpha_q = kept[q - 1].second;
    DDecomposition budget = decompose(alpha_q, d);
    // Split the digit vector of alpha_q across the q variable blocks with no
    // carries; block partial sums must stay below the earlier exponents.
    // (Carrying splits, though they also sum to alpha_q, would produce
    // monomials outside the move closure.)
    std::vector<std::vector<Exponent>> rows(q, std::vector<Exponent>(s + 1, 0));
    MonomialIdeal Iq = MonomialIdeal::zero(n);
    std::vector<Exponent> remaining = budget.digits;
    auto row_value = [&](const std::vector<Exponent>& row) {
      unsigned long long v = 0;
      for (int t = 0; t <= s; ++t) v += static_cast<unsigned long long>(row[t]) * d.term(t);
      return static_cast<Exponent>(v);
    };
    auto emit_part = [&]() {
      MonomialIdeal part = MonomialIdeal::whole_ring(n);
      for (int b = 1; b <= q; ++b) {
        int lo = b == 1 ? 1 : kept[b - 2].first + 1;
        int hi = kept[b - 1].first;
        for (int t = 0; t <= s; ++t)
          for (Exponent repn = 0; repn < rows[b - 1][t]; ++repn)
            part = ideal_product(part, power_block(n, lo, hi, d.term(t)));
      }
      Iq = ideal_sum(Iq, part);
      std::vector<Exponent> values;
      for (int b = 0; b < q; ++b) values.push_back(row_value(rows[b]));
      auto& tuples = rep.gamma_tuples[q - 1];
      if (std::find(tuples.begin(), tuples.end(), values) == tuples.end())
        tuples.push_back(values);
    };
    auto rec = [&](auto&& self, int e, int t, Exponent sum) -> void {
      if (e == q) {
        rows[q - 1] = remaining;
        emit_part();
        return;
      }
      if (t > s) {
        Exponent nsum = sum + row_value(rows[e - 1]);
        if (nsum < kept[e - 1].second) self(self, e + 1, 0, nsum);
        return;
      }
      for (Exponent c = 0; c <= remaining[t]; ++c) {
        rows[e - 1][t] = c;
        remaining[t] -= c;
        self(self, e, t + 1, sum);
        remaining[t] += c;
        rows[e - 1][t] = 0;
      }
    };
    rec(rec, 1, 0, 0);
    rep.ideal = ideal_sum(rep.ideal, Iq);
  }

  // the gamma form must agree with the sum of principal d-fixed ideals
  MonomialIdeal check = MonomialIdeal::zero(n);
  for (const auto& [i, a] : kept)
    check = ideal_sum(check, principal_dfixed(Monomial::power(n, i, a), d));
  if (rep.ideal != check)
    throw std::logic_error("powers_of_variables: block form disagrees with principal sum");
  return rep;
}

}  // namespace mical
