#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pqhopf/analysis.hpp"
#include "pqhopf/catalog.hpp"
#include "pqhopf/integrals.hpp"
#include "pqhopf/report.hpp"

namespace pqhopf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> q;
  int delta = 0;
  std::optional<unsigned> n_max;
  std::string method = "both";
  std::string format = "table";
  std::string out;
};

struct Output {
  std::string text;
  bool passed = true;
};

struct CheckRow {
  std::string scope;
  std::string check;
  bool passed;
  std::string detail;
};

std::string render_rows(const std::vector<CheckRow>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"scope", r.scope}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << "scope,check,passed,detail\n";
    for (const auto& r : rows) {
      std::string detail = r.detail;
      for (auto& c : detail)
        if (c == ',') c = ';';
      os << r.scope << ',' << r.check << ',' << (r.passed ? "true" : "false") << ',' << detail << '\n';
    }
  } else {
    std::size_t failed = 0;
    for (const auto& r : rows) {
      if (!r.passed) ++failed;
      os << (r.passed ? "PASS " : "FAIL ") << r.scope << "  " << r.check;
      if (!r.detail.empty()) os << "  " << r.detail;
      os << '\n';
    }
    os << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  }
  return os.str();
}

bool all_passed(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_of(const Options& o) {
  if (o.p.has_value() != o.q.has_value()) throw UsageError("--p and --q must be given together");
  if (o.p) return {{*o.p, *o.q}};
  return default_sweep();
}

std::string scope_of(std::uint32_t p, std::uint32_t q) {
  return "p=" + std::to_string(p) + ",q=" + std::to_string(q);
}

Presentation presentation_of(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  const Family fam = parse_family(o.family);
  if (o.delta != 0 && o.delta != 1) throw UsageError("--delta must be 0 or 1");
  if (o.delta == 1 && fam != Family::F1 && fam != Family::F2 && fam != Family::F3 && fam != Family::PrimAlg)
    throw UsageError("--delta only applies to f1, f2, f3 and primalg");
  if (!o.p) throw UsageError("--p is required");
  if (fam == Family::PrimAlg) return make_presentation(fam, *o.p, 1, o.delta);
  if (!o.q) throw UsageError("--q is required");
  return make_presentation(fam, *o.p, *o.q, o.delta);
}

unsigned default_n_max(const Presentation& pres) { return 4 * pres.p * std::max<std::uint32_t>(pres.q, 1); }

Output cmd_build(const Options& o) {
  const Presentation pres = presentation_of(o);
  const Construction c = construct(pres);
  Json j{{"presentation", presentation_to_json(pres)},
         {"algebra", hopf_to_json(c.algebra)},
         {"valid", c.ok()},
         {"validation", c.report.summary()},
         {"solver_errors", c.solver_errors}};
  if (c.ok()) j["integrals"] = integrals_to_json(c.algebra, integral_pair(c.algebra));
  if (o.format == "json") return {j.dump(2) + "\n", c.ok()};

  std::ostringstream os;
  os << family_id(pres.family) << " p=" << pres.p << " q=" << pres.q << " delta=" << pres.delta << " dim=" << pres.dim()
     << " field=GF(" << pres.field->characteristic() << "^" << pres.field->degree() << ")";
  if (pres.xi) os << " xi=" << pres.xi->to_string();
  os << "\nbasis:";
  for (const auto& l : c.algebra.basis_labels) os << " [" << l << "]";
  os << "\nvalidation: " << c.report.summary() << '\n';
  for (const auto& e : c.solver_errors) os << "solver: " << e << '\n';
  if (c.ok())
    os << "commutative=" << (is_commutative(c.algebra) ? "yes" : "no")
       << " cocommutative=" << (is_cocommutative(c.algebra) ? "yes" : "no") << '\n';
  return {os.str(), c.ok()};
}

Output cmd_indicators(const Options& o) {
  const Presentation pres = presentation_of(o);
  const Method method = parse_method(o.method);
  const Construction c = construct(pres);
  if (!c.ok()) return {"not a Hopf algebra: " + c.report.summary() + "\n", false};
  const unsigned n_max = o.n_max.value_or(default_n_max(pres));
  const auto report = indicator_sequence(c.algebra, describe(pres, c.algebra), n_max, method);
  const bool predictable = is_pq_family(pres.family) || pres.family == Family::GrA || pres.family == Family::GrB ||
                           pres.family == Family::GrC;
  const bool passed = report.all_agree() && (!predictable || report.all_match());
  if (o.format == "csv") return {render_csv(report), passed};
  if (o.format == "json") return {report_to_json(report).dump(2) + "\n", passed};
  return {render_table(report), passed};
}

Output cmd_axioms(const Options& o) {
  const Presentation pres = presentation_of(o);
  const Construction c = construct(pres);
  std::vector<CheckRow> rows;
  const std::string scope = family_id(pres.family) + " " + scope_of(pres.p, pres.q) + " delta=" + std::to_string(pres.delta);
  for (const char* axiom : {"associativity", "unitality", "coassociativity", "counitality", "bialgebra_comult",
                            "bialgebra_counit", "antipode"}) {
    std::string detail;
    for (const auto& f : c.report.failures)
      if (f.axiom == axiom) {
        detail = "witness";
        for (auto w : f.witness) detail += " " + c.algebra.basis_labels.at(w);
      }
    rows.push_back({scope, axiom, detail.empty(), detail});
  }
  for (const auto& e : c.solver_errors) rows.push_back({scope, "solver", false, e});
  if (o.format == "table") {
    std::string text = render_rows(rows, "table");
    text += c.ok() ? "valid\n" : "invalid\n";
    return {text, c.ok()};
  }
  return {render_rows(rows, o.format), c.ok()};
}

Output cmd_verify_theorem(const Options& o) {
  Json all = Json::array();
  std::vector<CheckRow> rows;
  for (auto [p, q] : pairs_of(o)) {
    const auto report = verify_main_theorem(p, q, o.n_max.value_or(4 * p * q));
    all.push_back(theorem_to_json(report));
    for (const auto& c : report.checks) {
      std::string detail;
      for (std::size_t i = 0; i < c.failures.size() && i < 3; ++i) detail += (i ? " | " : "") + c.failures[i];
      if (c.failures.size() > 3) detail += " | +" + std::to_string(c.failures.size() - 3) + " more";
      rows.push_back({scope_of(p, q), family_id(c.family) + " delta=" + std::to_string(c.delta), c.ok(), detail});
    }
  }
  if (o.format == "json") return {all.dump(2) + "\n", all_passed(rows)};
  return {render_rows(rows, o.format), all_passed(rows)};
}

Output cmd_verify_lemma(const Options& o) {
  const unsigned n_max = o.n_max.value_or(6);
  std::vector<CheckRow> rows;
  for (auto [p, q] : pairs_of(o)) {
    const Presentation pb = make_presentation(Family::GrB, p, q);
    const Presentation pc = make_presentation(Family::GrC, p, q);
    const HopfData b = build(pb), c = build(pc);
    for (unsigned i = 0; i < q; ++i)
      for (unsigned n = 1; n <= n_max; ++n) {
        const std::string tag = "i=" + std::to_string(i) + " n=" + std::to_string(n);
        const LemmaCheck l1 = check_lemma_part1(b, pb, i, n);
        rows.push_back({scope_of(p, q), "part1 " + tag, l1.ok(),
                        std::string("statement=") + (l1.statement_form ? "ok" : "FAIL") +
                            " proof=" + (l1.proof_form ? "ok" : "FAIL") + " forms_agree=" + (l1.forms_agree ? "ok" : "FAIL")});
        rows.push_back({scope_of(p, q), "part2 " + tag, check_lemma_part2(c, pc, i, n), ""});
      }
  }
  return {render_rows(rows, o.format), all_passed(rows)};
}

Output cmd_verify_corollary(const Options& o) {
  const unsigned n_max = o.n_max.value_or(30);
  std::vector<CheckRow> rows;
  for (auto [p, q] : pairs_of(o)) {
    for (unsigned n = q; n <= n_max; n += q) {
      if (n <= 1) continue;
      const auto cor = corollary_check(p, q, n);
      const auto disp = case_b_display_check(p, q, n);
      rows.push_back({scope_of(p, q), "corollary n=" + std::to_string(n), cor.holds(),
                      "lhs=" + std::to_string(cor.residue) + " n^(p-1)=" + std::to_string(cor.expected)});
      rows.push_back({scope_of(p, q), "case_b_display n=" + std::to_string(n), disp.holds(),
                      "lhs=" + std::to_string(disp.residue) + " n^(p-1)=" + std::to_string(disp.expected)});
    }
  }
  return {render_rows(rows, o.format), all_passed(rows)};
}

Output cmd_verify_properties(const Options& o) {
  std::vector<CheckRow> rows;
  for (auto [p, q] : pairs_of(o))
    for (const auto& c : verify_properties(p, q, o.n_max.value_or(4 * p * q)))
      rows.push_back({scope_of(p, q), c.name, c.passed, c.detail});
  return {render_rows(rows, o.format), all_passed(rows)};
}

void add_common(CLI::App* sub, Options& o, bool family, bool range) {
  if (family) {
    sub->add_option("--family", o.family, "f1 f2 f3 f4 grA grB grC groupalg primalg")
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4", "grA", "grB", "grC", "groupalg", "primalg"}));
    sub->add_option("--delta", o.delta, "0 or 1 (f1, f2, f3, primalg)")->check(CLI::IsMember({0, 1}));
  }
  sub->add_option("--p", o.p, "characteristic (prime)");
  sub->add_option("--q", o.q, "order of g (prime)");
  if (range) sub->add_option("--n-max", o.n_max, "largest n")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("--out", o.out, "write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Schur indicators of pq-dimensional pointed Hopf algebras", "pqhopf"};
  app.require_subcommand(1);
  Options o;
  auto* build_cmd = app.add_subcommand("build", "construct an algebra and print its structure constants");
  add_common(build_cmd, o, true, false);
  auto* ind_cmd = app.add_subcommand("indicators", "indicator sequence nu_1..nu_{n-max}");
  add_common(ind_cmd, o, true, true);
  ind_cmd->add_option("--method", o.method, "trace, integral or both")->check(CLI::IsMember({"trace", "integral", "both"}));
  auto* thm_cmd = app.add_subcommand("verify-theorem", "check predicted indicator residues for every family");
  add_common(thm_cmd, o, false, true);
  auto* lem_cmd = app.add_subcommand("verify-lemma", "closed forms for (g^i x^{p-1})^{[n+1]}");
  add_common(lem_cmd, o, false, true);
  auto* cor_cmd = app.add_subcommand("verify-corollary", "constrained multinomial sums against n^{p-1} mod p");
  add_common(cor_cmd, o, false, true);
  auto* prop_cmd = app.add_subcommand("verify-properties", "duality, tensor, graded-partner, period and integral checks");
  add_common(prop_cmd, o, false, true);
  auto* ax_cmd = app.add_subcommand("axioms", "validate the Hopf algebra axioms");
  add_common(ax_cmd, o, true, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Output result;
  try {
    if (build_cmd->parsed()) result = cmd_build(o);
    else if (ind_cmd->parsed()) result = cmd_indicators(o);
    else if (thm_cmd->parsed()) result = cmd_verify_theorem(o);
    else if (lem_cmd->parsed()) result = cmd_verify_lemma(o);
    else if (cor_cmd->parsed()) result = cmd_verify_corollary(o);
    else if (prop_cmd->parsed()) result = cmd_verify_properties(o);
    else result = cmd_axioms(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CatalogError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const AnalysisError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const FieldError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (o.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "cannot open --out file " << o.out << '\n';
      return 2;
    }
    file << result.text;
  }
  return result.passed ? 0 : 1;
}

}  // namespace pqhopf::cli
