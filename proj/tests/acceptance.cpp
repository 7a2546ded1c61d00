// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//
// Usage: acceptance [--expect-red AC1,AC2,...]
// Without --expect-red the exit code is 0 only when every criterion passes.
// With it, the exit code is 0 when the failing set is exactly the listed one,
// so known reds stay visible without masking new regressions or new passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pqhopf/report.hpp"

using namespace pqhopf;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

const std::vector<Pair> kFullSweep{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}, {5, 3}, {3, 7}, {7, 3}};
const std::vector<Pair> kLemmaSweep{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}, {5, 3}};

std::string tag(Pair pq) { return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")"; }

std::string entry_name(const CatalogEntry& e, Pair pq) {
  return family_id(e.family) + (e.delta ? "[delta=1]" : "") + tag(pq);
}

struct Outcome {
  bool passed = true;
  std::vector<std::string> problems;
  std::string summary;

  void fail(std::string what) {
    passed = false;
    problems.push_back(std::move(what));
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// every pq-dimensional presentation plus the graded algebras and blocks
std::vector<Presentation> all_presentations(Pair pq) {
  auto [p, q] = pq;
  std::vector<Presentation> out;
  for (const auto& e : catalog_entries(p, q)) out.push_back(make_presentation(e.family, p, q, e.delta));
  for (Family g : {Family::GrA, Family::GrB, Family::GrC}) out.push_back(make_presentation(g, p, q));
  out.push_back(make_presentation(Family::GroupAlg, p, q));
  out.push_back(make_presentation(Family::PrimAlg, p, 1, 0));
  out.push_back(make_presentation(Family::PrimAlg, p, 1, 1));
  return out;
}

Outcome ac1_axioms() {
  Outcome o;
  std::size_t count = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (Pair pq : kFullSweep)
    for (const auto& pres : all_presentations(pq)) {
      ++count;
      const Construction c = construct(pres);
      if (!c.ok()) {
        std::string why = c.report.summary();
        for (const auto& s : c.solver_errors) why += "; " + s;
        o.fail(family_id(pres.family) + (pres.delta ? "[delta=1]" : "") + tag(pq) + ": " + why);
      }
    }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) o.fail("runtime " + std::to_string(secs) + " s over the 10 s budget");
  std::ostringstream s;
  s << count << " algebras, " << (count - o.problems.size()) << " valid, " << secs << " s";
  o.summary = s.str();
  return o;
}

Outcome ac2_theorem() {
  Outcome o;
  std::size_t compared = 0;
  for (Pair pq : kFullSweep) {
    auto [p, q] = pq;
    for (const auto& e : catalog_entries(p, q)) {
      const auto pres = make_presentation(e.family, p, q, e.delta);
      const Construction c = construct(pres);
      if (!c.ok()) {
        o.fail(entry_name(e, pq) + ": no Hopf algebra to evaluate");
        continue;
      }
      const auto report = indicator_sequence(c.algebra, describe(pres, c.algebra), 4 * p * q, Method::Trace);
      const bool cc = is_commutative(c.algebra) && is_cocommutative(c.algebra);
      for (const auto& entry : report.entries) {
        ++compared;
        // prediction recomputed here from the definition of chi
        const unsigned chi_p = entry.n % p == 0 ? p : 1, chi_q = entry.n % q == 0 ? q : 1;
        const unsigned expect = (cc ? chi_p * chi_q : chi_p) % p;
        if (!entry.residue || *entry.residue != expect)
          o.fail(entry_name(e, pq) + " n=" + std::to_string(entry.n) + ": got " + entry.value.to_string() +
                 ", predicted " + std::to_string(expect));
      }
    }
  }
  o.summary = std::to_string(compared) + " (family, delta, n) values compared";
  return o;
}

Outcome ac3_cross_method() {
  Outcome o;
  std::size_t compared = 0;
  for (Pair pq : kFullSweep) {
    auto [p, q] = pq;
    for (const auto& e : catalog_entries(p, q)) {
      const auto pres = make_presentation(e.family, p, q, e.delta);
      const Construction c = construct(pres);
      if (!c.ok()) {
        o.fail(entry_name(e, pq) + ": no Hopf algebra to evaluate");
        continue;
      }
      const HopfData& h = c.algebra;
      const IntegralPair pair = integral_pair(h);
      if (!pair.normalized || evaluate(h.F(), pair.lambda, pair.Lambda) != h.F().one())
        o.fail(entry_name(e, pq) + ": lambda(Lambda) != 1");
      // two separate passes, one per route
      const AlgebraInfo info = describe(pres, h);
      const auto by_trace = indicator_sequence(h, info, 4 * p * q, Method::Trace).values();
      const auto by_integral = indicator_sequence(h, info, 4 * p * q, Method::Integral).values();
      for (std::size_t i = 0; i < by_trace.size(); ++i) {
        ++compared;
        if (by_trace[i] != by_integral[i]) o.fail(entry_name(e, pq) + " n=" + std::to_string(i + 1) + ": routes differ");
      }
    }
  }
  o.summary = std::to_string(compared) + " values compared across both routes";
  return o;
}

Outcome ac4_integral_forms() {
  Outcome o;
  for (Pair pq : kFullSweep) {
    auto [p, q] = pq;
    for (Family fam : {Family::GrB, Family::GrC}) {
      const auto pres = make_presentation(fam, p, q);
      const HopfData h = build(pres);
      const Field& f = h.F();
      Vec norm(h.dim), point(h.dim);
      for (std::uint32_t i = 0; i < q; ++i) norm[pres.index(i, p - 1)] = f.one();
      const long long shift = fam == Family::GrB ? ((1 - static_cast<long long>(p)) % q + q) % q : 0;
      point[pres.index(static_cast<std::uint32_t>(shift), p - 1)] = f.one();
      if (!is_scalar_multiple(f, left_integral(h), norm)) o.fail(family_id(fam) + tag(pq) + ": Lambda");
      if (!is_scalar_multiple(f, left_integral_dual(h).coords, point)) o.fail(family_id(fam) + tag(pq) + ": lambda");
    }
  }
  o.summary = std::to_string(2 * kFullSweep.size()) + " graded algebras";
  return o;
}

Outcome ac5_lemma() {
  Outcome o;
  std::size_t checks = 0;
  for (Pair pq : kLemmaSweep) {
    auto [p, q] = pq;
    const auto pb = make_presentation(Family::GrB, p, q);
    const HopfData b = build(pb);
    for (unsigned i = 0; i < q; ++i)
      for (unsigned n = 1; n <= 6; ++n) {
        checks += 2;
        const std::string where = tag(pq) + " i=" + std::to_string(i) + " n=" + std::to_string(n);
        if (!verify_lemma_part1(p, q, i, n)) o.fail("part1 " + where);
        if (!verify_lemma_part2(p, q, i, n)) o.fail("part2 " + where);
        if (!check_lemma_part1(b, pb, i, n).forms_agree) o.fail("statement/proof forms differ " + where);
      }
  }
  o.summary = std::to_string(checks) + " lemma instances";
  return o;
}

Outcome ac6_corollary() {
  Outcome o;
  std::uint64_t terms = 0;
  std::size_t checks = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (Pair pq : kLemmaSweep) {
    auto [p, q] = pq;
    for (unsigned n = q; n <= 30; n += q) {
      if (n < 2) continue;
      ++checks;
      const auto r = corollary_check(p, q, n);
      terms += r.terms;
      std::uint64_t fermat = 1;
      for (unsigned k = 0; k + 1 < p; ++k) fermat = fermat * n % p;
      if (r.residue != fermat)
        o.fail(tag(pq) + " n=" + std::to_string(n) + ": sum " + std::to_string(r.residue) + " vs " +
               std::to_string(fermat));
    }
  }
  const double secs = seconds_since(t0);
  if (terms >= 1000000) o.fail(std::to_string(terms) + " compositions enumerated");
  if (secs >= 5.0) o.fail("runtime " + std::to_string(secs) + " s over the 5 s budget");
  std::ostringstream s;
  s << checks << " identities, " << terms << " compositions, " << secs << " s";
  o.summary = s.str();
  return o;
}

Outcome ac7_properties() {
  Outcome o;
  std::size_t checks = 0;
  for (Pair pq : kFullSweep)
    for (const auto& c : verify_properties(pq.first, pq.second, 4 * pq.first * pq.second)) {
      ++checks;
      if (!c.passed) o.fail(c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
  o.summary = std::to_string(checks) + " property checks";
  return o;
}

Outcome ac8_case_a() {
  Outcome o;
  for (Pair pq : kFullSweep) {
    auto [p, q] = pq;
    const HopfData a = build_graded(Family::GrA, p, q);
    const HopfData g = build_group_algebra(q, p);
    const HopfData x = build_prim_algebra(p, 0);
    const Field& f = a.F();
    for (unsigned n = 1; n <= 4 * p * q; ++n) {
      const Elem lhs = indicator_trace(a, n).value();
      const Elem rhs = f.mul(indicator_trace(g, n).value(), indicator_trace(x, n).value());
      if (lhs != rhs) o.fail(tag(pq) + " n=" + std::to_string(n) + ": product fails");
    }
    for (unsigned n = 1; n <= 4 * q; ++n)
      if (indicator_trace(g, n).value() != f.from_int(n % q == 0 ? q : 1))
        o.fail(tag(pq) + " n=" + std::to_string(n) + ": group count fails");
  }
  o.summary = std::to_string(kFullSweep.size()) + " decompositions";
  return o;
}

Outcome ac9_xi() {
  Outcome o;
  for (Pair pq : kFullSweep)
    for (Family fam : {Family::GrC, Family::F2})
      if (!verify_xi_independence(fam, pq.first, pq.second, 2 * pq.first * pq.second))
        o.fail(family_id(fam) + tag(pq));
  o.summary = std::to_string(2 * kFullSweep.size()) + " root sweeps";
  return o;
}

std::string full_suite_json() {
  Json all = Json::array();
  for (Pair pq : kFullSweep) {
    auto [p, q] = pq;
    Json j{{"theorem", theorem_to_json(verify_main_theorem(p, q, 4 * p * q))},
           {"properties", properties_to_json(verify_properties(p, q, 4 * p * q))}};
    Json corollary = Json::array();
    for (unsigned n = q; n <= 30; n += q)
      if (n > 1) corollary.push_back(Json{{"n", n}, {"residue", corollary_sum(p, q, n)}});
    j["corollary"] = std::move(corollary);
    all.push_back(std::move(j));
  }
  return all.dump(2);
}

Outcome ac10_determinism() {
  Outcome o;
  const std::string first = full_suite_json();
  const std::string second = full_suite_json();
  if (first != second) o.fail("reports differ");
  o.summary = std::to_string(first.size()) + " bytes, two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-red" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      for (std::string id; std::getline(list, id, ',');)
        if (!id.empty()) expected_red.insert(id);
    } else {
      std::cerr << "usage: acceptance [--expect-red AC1,AC2,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1_axioms},       {"AC2", ac2_theorem},    {"AC3", ac3_cross_method}, {"AC4", ac4_integral_forms},
      {"AC5", ac5_lemma},        {"AC6", ac6_corollary},  {"AC7", ac7_properties},   {"AC8", ac8_case_a},
      {"AC9", ac9_xi},           {"AC10", ac10_determinism}};

  std::set<std::string> red;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << id << "  " << o.summary << '\n';
    const std::size_t shown = std::min<std::size_t>(o.problems.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "       " << o.problems[i] << '\n';
    if (o.problems.size() > shown) std::cout << "       ... " << (o.problems.size() - shown) << " more\n";
    if (!o.passed) red.insert(id);
  }

  std::cout << (criteria.size() - red.size()) << "/" << criteria.size() << " criteria pass\n";
  if (expected_red.empty()) return red.empty() ? 0 : 1;
  if (red != expected_red) {
    std::cout << "failing set differs from the expected red set\n";
    return 1;
  }
  std::cout << "failing set matches the expected red set\n";
  return 0;
}
