#include "pqhopf/report.hpp"

#include <iomanip>
#include <sstream>

namespace pqhopf {

Json field_to_json(const FieldSpec& spec) { return Json{{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}}; }

FieldSpec field_from_json(const Json& j) {
  return FieldSpec{j.at("p").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(),
                   j.at("modulus").get<std::vector<std::uint32_t>>()};
}

Json elem_to_json(const Field& f, Elem e) { return f.coeffs(e); }

Elem elem_from_json(const Field& f, const Json& j) {
  const auto cs = j.get<std::vector<std::uint32_t>>();
  return f.from_coeffs(cs);
}

Json hopf_to_json(const HopfData& h) {
  const Field& f = h.F();
  Json mult = Json::array(), comult = Json::array(), unit = Json::array(), counit = Json::array();
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b)
      for (const auto& t : h.product(a, b)) mult.push_back(Json{a, b, t.index, elem_to_json(f, t.coeff)});
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.comult[i]) comult.push_back(Json{i, t.left, t.right, elem_to_json(f, t.coeff)});
  for (std::size_t i = 0; i < h.dim; ++i) {
    unit.push_back(elem_to_json(f, h.unit[i]));
    counit.push_back(elem_to_json(f, h.counit[i]));
  }
  Json antipode = Json::array();
  for (std::size_t r = 0; r < h.antipode.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < h.antipode.cols(); ++c) row.push_back(elem_to_json(f, h.antipode(r, c)));
    antipode.push_back(std::move(row));
  }
  return Json{{"field", field_to_json(f.spec())},
              {"dim", h.dim},
              {"basis", h.basis_labels},
              {"mult", std::move(mult)},
              {"unit", std::move(unit)},
              {"comult", std::move(comult)},
              {"counit", std::move(counit)},
              {"antipode", std::move(antipode)}};
}

HopfData hopf_from_json(const Json& j) {
  HopfData h;
  h.field = field_from_spec(field_from_json(j.at("field")));
  const Field& f = h.F();
  h.dim = j.at("dim").get<std::size_t>();
  h.basis_labels = j.at("basis").get<std::vector<std::string>>();
  const std::size_t d = h.dim;
  h.mult.resize(d * d);
  for (const auto& t : j.at("mult")) {
    const auto a = t.at(0).get<std::size_t>(), b = t.at(1).get<std::size_t>();
    h.mult.at(a * d + b).push_back({t.at(2).get<std::uint32_t>(), elem_from_json(f, t.at(3))});
  }
  h.comult.resize(d);
  for (const auto& t : j.at("comult"))
    h.comult.at(t.at(0).get<std::size_t>())
        .push_back({t.at(1).get<std::uint32_t>(), t.at(2).get<std::uint32_t>(), elem_from_json(f, t.at(3))});
  for (const auto& c : j.at("unit")) h.unit.push_back(elem_from_json(f, c));
  for (const auto& c : j.at("counit")) h.counit.push_back(elem_from_json(f, c));
  const auto& rows = j.at("antipode");
  h.antipode = Matrix(rows.size(), rows.empty() ? 0 : rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) h.antipode(r, c) = elem_from_json(f, rows[r][c]);
  return h;
}

Json presentation_to_json(const Presentation& pres) {
  Json j{{"family", family_id(pres.family)},
         {"p", pres.p},
         {"q", pres.q},
         {"delta", pres.delta},
         {"q_divides_p_minus_1", pres.q_divides_p_minus_1},
         {"dim", pres.dim()}};
  j["xi"] = pres.xi ? Json(pres.xi->coeffs()) : Json(nullptr);
  return j;
}

namespace {

Json labelled(const HopfData& h, const Vec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!h.F().is_zero(v[i])) out.push_back(Json{{"basis", h.basis_labels[i]}, {"coeff", elem_to_json(h.F(), v[i])}});
  return out;
}

Json info_to_json(const AlgebraInfo& info) {
  Json j{{"family", info.family},
         {"p", info.p},
         {"q", info.q},
         {"delta", info.delta},
         {"q_divides_p_minus_1", info.q_divides_p_minus_1},
         {"commutative", info.commutative},
         {"cocommutative", info.cocommutative}};
  j["xi"] = info.xi ? Json(*info.xi) : Json(nullptr);
  return j;
}

std::string residue_string(const std::optional<std::uint32_t>& r) { return r ? std::to_string(*r) : "-"; }

std::string agree_string(const std::optional<bool>& a) { return a ? (*a ? "true" : "false") : "n/a"; }

}  // namespace

Json integrals_to_json(const HopfData& h, const IntegralPair& pair) {
  return Json{{"Lambda", labelled(h, pair.Lambda)},
              {"lambda", labelled(h, pair.lambda.coords)},
              {"normalized", pair.normalized}};
}

Json report_to_json(const IndicatorReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row{{"n", e.n},
             {"value", e.value.coeffs()},
             {"predicted", e.predicted},
             {"matches_prediction", e.matches_prediction}};
    row["residue"] = e.residue ? Json(*e.residue) : Json(nullptr);
    row["methods_agree"] = e.methods_agree ? Json(*e.methods_agree) : Json(nullptr);
    entries.push_back(std::move(row));
  }
  Json j{{"algebra", info_to_json(report.info)}, {"method", method_id(report.method)}, {"entries", std::move(entries)}};
  j["detected_period"] = report.detected_period ? Json(*report.detected_period) : Json(nullptr);
  j["all_match"] = report.all_match();
  j["all_agree"] = report.all_agree();
  return j;
}

Json theorem_to_json(const TheoremReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"family", family_id(c.family)},
           {"delta", c.delta},
           {"constructed", c.constructed},
           {"ok", c.ok()},
           {"failures", c.failures},
           {"partner_mismatches", c.partner_mismatches}};
    if (c.constructed) j["report"] = report_to_json(c.report);
    else j["construction_error"] = c.construction_error;
    checks.push_back(std::move(j));
  }
  return Json{{"p", report.p}, {"q", report.q}, {"n_max", report.n_max}, {"ok", report.ok()}, {"checks", checks}};
}

Json properties_to_json(const std::vector<PropertyCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

std::string render_csv(const IndicatorReport& report) {
  std::ostringstream os;
  os << "n,value,residue,predicted,methods_agree,match\n";
  for (const auto& e : report.entries)
    os << e.n << ',' << e.value.to_string() << ',' << residue_string(e.residue) << ',' << e.predicted << ','
       << agree_string(e.methods_agree) << ',' << (e.matches_prediction ? "true" : "false") << '\n';
  return os.str();
}

std::string render_table(const IndicatorReport& report) {
  const auto& info = report.info;
  std::ostringstream os;
  os << info.family << " p=" << info.p << " q=" << info.q << " delta=" << info.delta
     << (info.commutative && info.cocommutative ? "  [commutative, cocommutative: nu_n = chi_p(n) chi_q(n) mod p]"
                                                : "  [nu_n = chi_p(n) mod p]")
     << '\n';
  os << std::setw(5) << "n" << std::setw(12) << "nu_n" << std::setw(12) << "predicted" << std::setw(10) << "agree"
     << std::setw(8) << "match" << '\n';
  for (const auto& e : report.entries)
    os << std::setw(5) << e.n << std::setw(12) << e.value.to_string() << std::setw(12) << e.predicted << std::setw(10)
       << agree_string(e.methods_agree) << std::setw(8) << (e.matches_prediction ? "yes" : "NO") << '\n';
  os << "period over tested window: "
     << (report.detected_period ? std::to_string(*report.detected_period) : std::string("none found")) << '\n';
  return os.str();
}

}  // namespace pqhopf
