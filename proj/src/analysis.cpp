#include "pqhopf/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pqhopf/integrals.hpp"

namespace pqhopf {

std::uint32_t chi(std::uint32_t r, std::uint64_t n) { return n % r == 0 ? r : 1; }

std::uint32_t predicted_indicator(bool commutative_and_cocommutative, std::uint32_t p, std::uint32_t q,
                                  std::uint64_t n) {
  const std::uint64_t value = commutative_and_cocommutative ? std::uint64_t{chi(p, n)} * chi(q, n) : chi(p, n);
  return static_cast<std::uint32_t>(value % p);
}

std::uint32_t predicted_indicator(const HopfData& h, std::uint32_t p, std::uint32_t q, std::uint64_t n) {
  return predicted_indicator(is_commutative(h) && is_cocommutative(h), p, q, n);
}

std::string method_id(Method m) {
  switch (m) {
    case Method::Trace: return "trace";
    case Method::Integral: return "integral";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view id) {
  for (Method m : {Method::Trace, Method::Integral, Method::Both})
    if (method_id(m) == id) return m;
  throw AnalysisError("unknown method '" + std::string(id) + "'");
}

AlgebraInfo describe(const Presentation& pres, const HopfData& h) {
  AlgebraInfo info;
  info.family = family_id(pres.family);
  info.p = pres.p;
  info.q = pres.q;
  info.delta = pres.delta;
  info.q_divides_p_minus_1 = pres.q_divides_p_minus_1;
  if (pres.xi) info.xi = pres.xi->coeffs();
  info.commutative = is_commutative(h);
  info.cocommutative = is_cocommutative(h);
  return info;
}

bool IndicatorReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.matches_prediction; });
}

bool IndicatorReport::all_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.methods_agree.value_or(true); });
}

std::vector<Elem> IndicatorReport::values() const {
  std::vector<Elem> out;
  for (const auto& e : entries) out.push_back(e.value.value());
  return out;
}

std::vector<std::optional<std::uint32_t>> IndicatorReport::residues() const {
  std::vector<std::optional<std::uint32_t>> out;
  for (const auto& e : entries) out.push_back(e.residue);
  return out;
}

IndicatorReport indicator_sequence(const HopfData& h, const AlgebraInfo& info, unsigned n_max, Method method) {
  if (n_max < 1) throw AnalysisError("n_max must be at least 1");
  const Field& f = h.F();
  IndicatorReport report;
  report.info = info;
  report.method = method;

  std::optional<IntegralPair> pair;
  if (method != Method::Trace) pair = integral_pair(h);

  // one pass over P_0..P_{n_max}: trace uses P_{n-1}, the integral formula P_n
  std::vector<Elem> by_trace(n_max + 1), by_integral(n_max + 1);
  SweedlerPowers powers(h);
  for (unsigned k = 0; k <= n_max; ++k) {
    powers.at(k);
    if (method != Method::Integral && k + 1 <= n_max) by_trace[k + 1] = trace_of_product(f, h.antipode, powers.current());
    if (pair && k >= 1) by_integral[k] = evaluate(f, pair->lambda, apply(f, powers.current(), pair->Lambda));
  }

  const bool cc = info.commutative && info.cocommutative;
  for (unsigned n = 1; n <= n_max; ++n) {
    IndicatorEntry e{n, FieldElement(h.field, method == Method::Integral ? by_integral[n] : by_trace[n]), {}, 0, {}, false};
    e.residue = in_prime_subfield(e.value);
    e.predicted = predicted_indicator(cc, info.p, info.q, n);
    if (method == Method::Both) e.methods_agree = by_trace[n] == by_integral[n];
    e.matches_prediction = e.residue && *e.residue == e.predicted;
    report.entries.push_back(std::move(e));
  }
  report.detected_period = detect_period(report);
  return report;
}

std::optional<unsigned> detect_period(std::span<const Elem> values) {
  const std::size_t len = values.size();
  for (std::size_t t = 1; t <= len / 2; ++t) {
    bool periodic = true;
    for (std::size_t i = 0; i + t < len && periodic; ++i) periodic = values[i] == values[i + t];
    if (periodic) return static_cast<unsigned>(t);
  }
  return std::nullopt;
}

std::optional<unsigned> detect_period(const IndicatorReport& report) {
  const auto values = report.values();
  return detect_period(values);
}

void for_each_composition(unsigned total, unsigned parts, const std::function<void(std::span<const unsigned>)>& visit) {
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<unsigned> ks(parts, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
    if (pos + 1 == parts) {
      ks[pos] = left;
      visit(ks);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      ks[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, total);
}

std::uint64_t multinomial(std::span<const unsigned> ks) {
  // product of binomials C(k_1 + ... + k_j, k_j)
  std::uint64_t result = 1;
  unsigned running = 0;
  for (unsigned k : ks) {
    for (unsigned t = 1; t <= k; ++t) {
      ++running;
      result = result * running / t;
    }
  }
  return result;
}

namespace {

std::size_t gx_index(const Presentation& pres, long long g_exp, unsigned x_exp) {
  const long long q = pres.rules.g_exponent;
  return pres.index(static_cast<std::uint32_t>(((g_exp % q) + q) % q), x_exp);
}

Vec basis_vec(const Field& f, std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = f.one();
  return v;
}

}  // namespace

LemmaCheck check_lemma_part1(const HopfData& gr_b, const Presentation& pres, unsigned i, unsigned n) {
  const Field& f = gr_b.F();
  const unsigned p = pres.p;
  const Vec h = basis_vec(f, gr_b.dim, pres.index(i, p - 1));
  const Vec lhs = sweedler_power_element(gr_b, h, n + 1);

  Vec statement(gr_b.dim), proof(gr_b.dim);
  for_each_composition(p - 1, n + 1, [&](std::span<const unsigned> ks) {
    long long e_statement = static_cast<long long>(n + 1) * i;
    long long e_proof = e_statement;
    for (unsigned j = 1; j <= n; ++j) {
      e_statement += static_cast<long long>(n + 1 - j) * ks[j - 1];
      e_proof += static_cast<long long>(j) * ks[j - 1];
    }
    const Elem c = f.from_int(static_cast<long long>(multinomial(ks) % p));
    auto& s = statement[gx_index(pres, e_statement, p - 1)];
    s = f.add(s, c);
    auto& t = proof[gx_index(pres, e_proof, p - 1)];
    t = f.add(t, c);
  });
  return LemmaCheck{lhs == statement, lhs == proof, statement == proof};
}

bool verify_lemma_part1(std::uint32_t p, std::uint32_t q, unsigned i, unsigned n) {
  const Presentation pres = make_presentation(Family::GrB, p, q);
  return check_lemma_part1(build(pres), pres, i, n).ok();
}

bool check_lemma_part2(const HopfData& gr_c, const Presentation& pres, unsigned i, unsigned n) {
  const Field& f = gr_c.F();
  const unsigned p = pres.p;
  const Vec h = basis_vec(f, gr_c.dim, pres.index(i, p - 1));
  const Vec lhs = sweedler_power_element(gr_c, h, n + 1);

  const Elem xi_i = f.pow(pres.xi->value(), i);
  Elem geometric = f.zero();
  for (unsigned t = 0; t <= n; ++t) geometric = f.add(geometric, f.pow(xi_i, t));
  Vec rhs(gr_c.dim);
  rhs[gx_index(pres, static_cast<long long>(n + 1) * i, p - 1)] = f.pow(geometric, p - 1);
  return lhs == rhs;
}

bool verify_lemma_part2(std::uint32_t p, std::uint32_t q, unsigned i, unsigned n) {
  const Presentation pres = make_presentation(Family::GrC, p, q);
  return check_lemma_part2(build(pres), pres, i, n);
}

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void check_corollary_preconditions(std::uint32_t p, std::uint32_t q, unsigned n) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw AnalysisError("p and q must be distinct primes");
  if (n <= 1) throw AnalysisError("precondition n > 1 violated");
  if (n % q != 0) throw AnalysisError("precondition q∤n violated");
}

}  // namespace

CorollaryResult corollary_check(std::uint32_t p, std::uint32_t q, unsigned n) {
  check_corollary_preconditions(p, q, n);
  const long long target = ((1 - static_cast<long long>(p)) % q + q) % q;
  unsigned __int128 sum = 0;
  CorollaryResult result;
  for_each_composition(p - 1, n, [&](std::span<const unsigned> ks) {
    ++result.terms;
    long long weight = 0;
    for (unsigned j = 1; j + 1 <= n; ++j) weight += static_cast<long long>(j) * ks[j - 1];
    if (weight % q == target) sum += static_cast<unsigned __int128>(q) * multinomial(ks);
  });
  result.residue = static_cast<std::uint32_t>(sum % p);
  result.expected = pow_mod(n, p - 1, p);
  return result;
}

std::uint32_t corollary_sum(std::uint32_t p, std::uint32_t q, unsigned n) { return corollary_check(p, q, n).residue; }

CorollaryResult case_b_display_check(std::uint32_t p, std::uint32_t q, unsigned m) {
  check_corollary_preconditions(p, q, m);
  const unsigned n = m - 1;
  const long long target = ((1 - static_cast<long long>(p)) % q + q) % q;
  unsigned __int128 sum = 0;
  CorollaryResult result;
  // k_1..k_n chosen left to right within [0, p-1] and the remaining budget;
  // k_{n+1} takes the slack, the weight is carried along
  std::vector<unsigned> ks(n + 1, 0);
  std::function<void(unsigned, unsigned, long long)> rec = [&](unsigned pos, unsigned budget, long long weight) {
    if (pos == n) {
      ++result.terms;
      ks[n] = budget;
      if (weight % q == target) sum += static_cast<unsigned __int128>(q) * multinomial(ks);
      return;
    }
    for (unsigned k = 0; k <= std::min(budget, p - 1); ++k) {
      ks[pos] = k;
      rec(pos + 1, budget - k, weight + static_cast<long long>(pos + 1) * k);
    }
  };
  rec(0, p - 1, 0);
  result.residue = static_cast<std::uint32_t>(sum % p);
  result.expected = pow_mod(m, p - 1, p);
  return result;
}

bool TheoremReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.ok(); });
}

TheoremReport verify_main_theorem(std::uint32_t p, std::uint32_t q, unsigned n_max) {
  TheoremReport out{p, q, n_max, {}};
  for (const auto& entry : catalog_entries(p, q)) {
    FamilyCheck check;
    check.family = entry.family;
    check.delta = entry.delta;
    const Presentation pres = make_presentation(entry.family, p, q, entry.delta);
    Construction c = construct(pres);
    if (!c.ok()) {
      std::ostringstream os;
      os << c.report.summary();
      for (const auto& e : c.solver_errors) os << "; " << e;
      check.construction_error = os.str();
      check.failures.push_back("construction: " + check.construction_error);
      out.checks.push_back(std::move(check));
      continue;
    }
    check.constructed = true;
    check.report = indicator_sequence(c.algebra, describe(pres, c.algebra), n_max, Method::Both);

    const Presentation gr_pres = make_presentation(graded_partner(entry.family), p, q);
    const HopfData gr = build(gr_pres);
    const auto gr_report = indicator_sequence(gr, describe(gr_pres, gr), n_max, Method::Trace);
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto& e = check.report.entries[n - 1];
      if (e.residue != gr_report.entries[n - 1].residue) check.partner_mismatches.push_back(n);
      if (!e.matches_prediction) {
        std::ostringstream os;
        os << "n=" << n << ": nu=" << e.value.to_string() << " predicted=" << e.predicted;
        check.failures.push_back(os.str());
      }
      if (!e.methods_agree.value_or(true)) check.failures.push_back("n=" + std::to_string(n) + ": trace and integral differ");
    }
    for (unsigned n : check.partner_mismatches)
      check.failures.push_back("n=" + std::to_string(n) + ": differs from " + family_id(gr_pres.family));
    out.checks.push_back(std::move(check));
  }
  return out;
}

bool verify_xi_independence(Family family, std::uint32_t p, std::uint32_t q, unsigned n_max) {
  if (!uses_xi(family)) throw AnalysisError("family does not depend on xi");
  if (n_max == 0) n_max = 2 * p * q;
  const Presentation base = make_presentation(family, p, q);
  std::optional<std::vector<Elem>> reference;
  for (const auto& root : all_primitive_qth_roots(base.field, q)) {
    const Presentation pres = make_presentation(family, p, q, 0, root);
    const HopfData h = build(pres);
    const auto values = indicator_sequence(h, describe(pres, h), n_max, Method::Trace).values();
    if (!reference) reference = values;
    else if (*reference != values) return false;
  }
  return true;
}

bool is_scalar_multiple(const Field& f, const Vec& v, const Vec& w) {
  if (v.size() != w.size()) return false;
  std::optional<Elem> ratio;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(w[i])) {
      if (!f.is_zero(v[i])) return false;
      continue;
    }
    if (f.is_zero(v[i])) return false;
    const Elem r = f.div(v[i], w[i]);
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

std::vector<PropertyCheck> check_integral_closed_forms(std::uint32_t p, std::uint32_t q) {
  std::vector<PropertyCheck> out;
  for (Family fam : {Family::GrB, Family::GrC}) {
    const Presentation pres = make_presentation(fam, p, q);
    const HopfData h = build(pres);
    const Field& f = h.F();
    Vec expected_Lambda(h.dim);
    for (std::uint32_t i = 0; i < q; ++i) expected_Lambda[pres.index(i, p - 1)] = f.one();
    const long long g_exp = fam == Family::GrB ? 1 - static_cast<long long>(p) : 0;
    const Vec expected_lambda = basis_vec(f, h.dim, gx_index(pres, g_exp, p - 1));

    const Vec Lambda = left_integral(h);
    const DualElement lambda = left_integral_dual(h);
    const std::string tag = family_id(fam) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    out.push_back({"integral_closed_form " + tag + " Lambda", is_scalar_multiple(f, Lambda, expected_Lambda),
                   "Lambda ∝ (1+g+...+g^{q-1}) x^{p-1}"});
    out.push_back({"integral_closed_form " + tag + " lambda", is_scalar_multiple(f, lambda.coords, expected_lambda),
                   fam == Family::GrB ? "lambda ∝ δ[g^{1-p} x^{p-1}]" : "lambda ∝ δ[x^{p-1}]"});
  }
  return out;
}

namespace {

std::vector<Elem> trace_values(const HopfData& h, unsigned n_max) {
  std::vector<Elem> out;
  SweedlerPowers powers(h);
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(trace_of_product(h.F(), h.antipode, powers.at(n - 1)));
  return out;
}

}  // namespace

PropertyCheck check_case_a(std::uint32_t p, std::uint32_t q) {
  const HopfData a = build_graded(Family::GrA, p, q);
  const HopfData group = build_group_algebra(q, p);
  const HopfData prim = build_prim_algebra(p, 0);
  const Field& f = a.F();
  const unsigned n_max = 4 * p * q;
  const auto va = trace_values(a, n_max), vg = trace_values(group, n_max), vp = trace_values(prim, n_max);
  std::ostringstream detail;
  bool ok = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (va[n - 1] != f.mul(vg[n - 1], vp[n - 1])) {
      ok = false;
      detail << "product fails at n=" << n << "; ";
    }
    if (n <= 4 * q && vg[n - 1] != f.from_int(chi(q, n))) {
      ok = false;
      detail << "group count fails at n=" << n << "; ";
    }
    if (f.prime_residue(vp[n - 1]) != std::optional<std::uint32_t>(chi(p, n) % p)) {
      ok = false;
      detail << "primitive block fails at n=" << n << "; ";
    }
  }
  const bool structure = tensor(group, prim).mult == a.mult && tensor(group, prim).comult == a.comult &&
                         tensor(group, prim).antipode == a.antipode;
  if (!structure) {
    ok = false;
    detail << "k[Z/q] ⊗ k[x]/(x^p) structure constants differ from grA";
  }
  return {"case_a (" + std::to_string(p) + "," + std::to_string(q) + ")", ok,
          ok ? "nu(grA) = nu(k[Z/q]) nu(k[x]/(x^p)); nu(k[Z/q]) = chi_q" : detail.str()};
}

PropertyCheck check_dual_invariance(const HopfData& h, const std::string& name, unsigned n_max) {
  const bool ok = trace_values(h, n_max) == trace_values(dual(h), n_max);
  return {"dual_invariance " + name, ok, ok ? "" : "sequences differ"};
}

PropertyCheck check_tensor_multiplicativity(const HopfData& a, const HopfData& b, const std::string& name,
                                            unsigned n_max) {
  const Field& f = a.F();
  const auto va = trace_values(a, n_max), vb = trace_values(b, n_max), vt = trace_values(tensor(a, b), n_max);
  for (unsigned n = 0; n < n_max; ++n)
    if (vt[n] != f.mul(va[n], vb[n]))
      return {"tensor_multiplicativity " + name, false, "fails at n=" + std::to_string(n + 1)};
  return {"tensor_multiplicativity " + name, true, ""};
}

std::vector<PropertyCheck> verify_properties(std::uint32_t p, std::uint32_t q, unsigned n_max) {
  std::vector<PropertyCheck> out;
  const std::string pq = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  for (auto& c : check_integral_closed_forms(p, q)) out.push_back(std::move(c));
  out.push_back(check_case_a(p, q));

  // dual invariance, periods, graded-partner equality over the catalog
  std::vector<std::pair<std::string, HopfData>> algebras;
  for (const auto& e : catalog_entries(p, q)) {
    const std::string name = family_id(e.family) + (e.delta ? "[delta=1]" : "") + pq;
    Construction c = construct(make_presentation(e.family, p, q, e.delta));
    if (!c.ok()) {
      out.push_back({"constructible " + name, false, c.report.summary()});
      continue;
    }
    const HopfData partner = build_graded(graded_partner(e.family), p, q);
    const auto mine = trace_values(c.algebra, n_max);
    const auto theirs = trace_values(partner, n_max);
    bool same = true;
    for (unsigned n = 0; n < n_max; ++n)
      same = same && c.algebra.F().prime_residue(mine[n]) == partner.F().prime_residue(theirs[n]);
    out.push_back({"gr_partner " + name, same, "vs " + family_id(graded_partner(e.family))});
    algebras.emplace_back(name, std::move(c.algebra));
  }
  for (Family g : {Family::GrA, Family::GrB, Family::GrC}) algebras.emplace_back(family_id(g) + pq, build_graded(g, p, q));

  for (const auto& [name, h] : algebras) {
    out.push_back(check_dual_invariance(h, name, n_max));
    const auto period = detect_period(trace_values(h, n_max));
    out.push_back({"period " + name, period && *period <= p * q,
                   period ? "T=" + std::to_string(*period) : std::string("no period in window")});
  }

  {
    const HopfData b = build_graded(Family::GrB, p, q);
    const HopfData c = build_graded(Family::GrC, p, q);
    const auto vb = trace_values(dual(b), n_max), vc = trace_values(c, n_max);
    bool same = true;
    for (unsigned n = 0; n < n_max; ++n) same = same && b.F().prime_residue(vb[n]) == c.F().prime_residue(vc[n]);
    out.push_back({"dual(grB) ~ grC " + pq, same, "indicator sequences of grB* and grC"});
  }

  // tensor multiplicativity on the blocks over GF(p), dim product <= 100
  std::vector<std::pair<std::string, HopfData>> blocks;
  blocks.emplace_back("groupalg(" + std::to_string(q) + ")", build_group_algebra(q, p));
  blocks.emplace_back("primalg(" + std::to_string(p) + ")", build_prim_algebra(p, 0));
  blocks.emplace_back("primalg[delta=1](" + std::to_string(p) + ")", build_prim_algebra(p, 1));
  blocks.emplace_back("grA" + pq, build_graded(Family::GrA, p, q));
  blocks.emplace_back("grB" + pq, build_graded(Family::GrB, p, q));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i; j < blocks.size(); ++j) {
      if (blocks[i].second.dim * blocks[j].second.dim > 100) continue;
      out.push_back(check_tensor_multiplicativity(blocks[i].second, blocks[j].second,
                                                  blocks[i].first + " ⊗ " + blocks[j].first, std::min(n_max, 12u)));
    }

  out.push_back({"xi_independence grC" + pq, verify_xi_independence(Family::GrC, p, q), ""});
  out.push_back({"xi_independence f2" + pq, verify_xi_independence(Family::F2, p, q), ""});
  return out;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>>& default_sweep() {
  static const std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep{{2, 3}, {3, 2}, {2, 5},
                                                                           {5, 2}, {3, 5}, {5, 3}};
  return sweep;
}

}  // namespace pqhopf
