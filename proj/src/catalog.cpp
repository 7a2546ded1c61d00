#include "pqhopf/catalog.hpp"

#include <sstream>

namespace pqhopf {

std::string family_id(Family f) {
  switch (f) {
    case Family::F1: return "f1";
    case Family::F2: return "f2";
    case Family::F3: return "f3";
    case Family::F4: return "f4";
    case Family::GrA: return "grA";
    case Family::GrB: return "grB";
    case Family::GrC: return "grC";
    case Family::GroupAlg: return "groupalg";
    case Family::PrimAlg: return "primalg";
  }
  return "?";
}

Family parse_family(std::string_view id) {
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::GrA, Family::GrB, Family::GrC,
                   Family::GroupAlg, Family::PrimAlg})
    if (family_id(f) == id) return f;
  throw CatalogError("unknown family '" + std::string(id) + "'");
}

bool is_pq_family(Family f) { return f == Family::F1 || f == Family::F2 || f == Family::F3 || f == Family::F4; }

bool uses_xi(Family f) { return f == Family::F2 || f == Family::GrC; }

Family graded_partner(Family family) {
  switch (family) {
    case Family::F1: return Family::GrA;
    case Family::F2: return Family::GrC;
    case Family::F3:
    case Family::F4: return Family::GrB;
    default: throw CatalogError("graded_partner is defined for f1..f4 only");
  }
}

std::string basis_label(std::uint32_t i, std::uint32_t j) {
  std::string s;
  auto power = [](char gen, std::uint32_t e) {
    std::string t(1, gen);
    if (e > 1) t += "^" + std::to_string(e);
    return t;
  };
  if (i > 0) s += power('g', i);
  if (j > 0) s += (s.empty() ? "" : " ") + power('x', j);
  return s.empty() ? "1" : s;
}

namespace {

void accumulate(const Field& f, WordComb& comb, const std::string& word, Elem c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = comb.try_emplace(word, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) comb.erase(it);
}

struct Redex {
  std::size_t pos;
  std::size_t len;
  const WordComb* replacement;  // nullptr means the empty word with coefficient 1
};

std::optional<Redex> leftmost_redex(const std::string& w, const RewriteRules& rules) {
  auto run_length = [&](std::size_t pos) {
    std::size_t n = 0;
    while (pos + n < w.size() && w[pos + n] == w[pos]) ++n;
    return n;
  };
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == 'g') {
      if (run_length(pos) >= rules.g_exponent) return Redex{pos, rules.g_exponent, nullptr};
    } else {
      if (run_length(pos) >= rules.x_exponent) return Redex{pos, rules.x_exponent, &rules.x_power};
      if (pos + 1 < w.size() && w[pos + 1] == 'g') return Redex{pos, 2, &rules.x_past_g};
    }
  }
  return std::nullopt;
}

void check_prime_pair(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p)) throw CatalogError("p=" + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw CatalogError("q=" + std::to_string(q) + " is not prime");
  if (p == q) throw CatalogError("p=q not allowed");
}

// Dense d*d tensor product in H (x) H.
Vec tensor_multiply(const HopfData& h, const Vec& s, const Vec& t) {
  const Field& f = h.F();
  const std::size_t d = h.dim;
  Vec out(d * d);
  const auto sa = compress2(f, s, d);
  const auto ta = compress2(f, t, d);
  for (const auto& x : sa)
    for (const auto& y : ta) {
      const Elem c = f.mul(x.coeff, y.coeff);
      for (const auto& l : h.product(x.left, y.left))
        for (const auto& r : h.product(x.right, y.right)) {
          auto& slot = out[l.index * d + r.index];
          slot = f.add(slot, f.mul(c, f.mul(l.coeff, r.coeff)));
        }
    }
  return out;
}

}  // namespace

Presentation make_presentation(Family family, std::uint32_t p, std::uint32_t q, int delta,
                               std::optional<FieldElement> xi) {
  if (delta != 0 && delta != 1) throw CatalogError("inadmissible delta: must be 0 or 1");
  Presentation pres;
  pres.family = family;
  pres.p = p;
  pres.q = q;
  pres.delta = delta;

  if (family == Family::PrimAlg) {
    if (!is_prime(p)) throw CatalogError("p=" + std::to_string(p) + " is not prime");
  } else if (family == Family::GroupAlg) {
    if (!is_prime(p)) throw CatalogError("p=" + std::to_string(p) + " is not prime");
    if (q < 1) throw CatalogError("group order must be positive");
  } else {
    check_prime_pair(p, q);
  }
  pres.q_divides_p_minus_1 = family != Family::PrimAlg && q > 1 && (p - 1) % q == 0;

  const bool delta_allowed = family == Family::F1 || family == Family::F3 || family == Family::PrimAlg ||
                             (family == Family::F2 && pres.q_divides_p_minus_1);
  if (delta == 1 && !delta_allowed) throw CatalogError("inadmissible delta for " + family_id(family));

  if (uses_xi(family)) {
    pres.field = make_field(p, required_degree(p, q));
    if (xi) {
      if (!(xi->field()->spec() == pres.field->spec())) throw CatalogError("xi lives in the wrong field");
      if (xi->is_zero() || element_order(*xi) != q) throw CatalogError("xi is not a primitive q-th root of unity");
      pres.xi = *xi;
    } else {
      pres.xi = primitive_qth_root(pres.field, q);
    }
  } else {
    pres.field = make_field(p, 1);
  }

  const Field& f = *pres.field;
  const Elem one = f.one();
  RewriteRules& r = pres.rules;
  r.g_exponent = q;
  r.x_exponent = p;
  r.x_past_g = {{"gx", one}};
  const WordComb x_to_delta_x = delta ? WordComb{{"x", one}} : WordComb{};

  switch (family) {
    case Family::F1:
      r.x_power = x_to_delta_x;
      break;
    case Family::F2:
      if (pres.q_divides_p_minus_1) {
        // gx = xi xg, i.e. xg -> xi^{-1} gx
        r.x_past_g = {{"gx", f.inv(pres.xi->value())}};
        r.x_power = x_to_delta_x;
      } else {
        r.x_past_g = {{"gx", pres.xi->value()}};
      }
      break;
    case Family::F3: {
      r.x_skew_by_g = true;
      if (delta) {
        // x^p -> 1 - g^{p mod q}
        const std::string gp(p % q, 'g');
        accumulate(f, r.x_power, "", one);
        accumulate(f, r.x_power, gp, f.neg(one));
      }
      break;
    }
    case Family::F4:
      r.x_skew_by_g = true;
      r.x_power = {{"x", one}};
      if (!pres.q_divides_p_minus_1) {
        // gx - xg - g + g^2 = 0, i.e. xg -> gx - g + g^2
        r.x_past_g.clear();
        accumulate(f, r.x_past_g, "gx", one);
        accumulate(f, r.x_past_g, "g", f.neg(one));
        accumulate(f, r.x_past_g, "gg", one);
      }
      break;
    case Family::GrA:
      break;
    case Family::GrB:
      r.x_skew_by_g = true;
      break;
    case Family::GrC:
      r.x_past_g = {{"gx", pres.xi->value()}};
      break;
    case Family::GroupAlg:
      r.x_exponent = 1;
      break;
    case Family::PrimAlg:
      r.g_exponent = 1;
      r.x_power = x_to_delta_x;
      break;
  }
  return pres;
}

std::string basis_word(const Presentation& pres, std::size_t index) {
  const std::uint32_t i = static_cast<std::uint32_t>(index / pres.rules.x_exponent);
  const std::uint32_t j = static_cast<std::uint32_t>(index % pres.rules.x_exponent);
  return std::string(i, 'g') + std::string(j, 'x');
}

Vec normal_form(const Presentation& pres, std::string_view word) {
  const Field& f = *pres.field;
  for (char c : word)
    if (c != 'g' && c != 'x') throw CatalogError("words are built from g and x only");

  Vec out(pres.dim());
  WordComb work{{std::string(word), f.one()}};
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const std::string& w = node.key();
    const Elem c = node.mapped();
    const auto redex = leftmost_redex(w, pres.rules);
    if (!redex) {
      const auto i = static_cast<std::uint32_t>(w.find('x') == std::string::npos ? w.size() : w.find('x'));
      const auto j = static_cast<std::uint32_t>(w.size() - i);
      auto& slot = out[pres.index(i, j)];
      slot = f.add(slot, c);
      continue;
    }
    const std::string prefix = w.substr(0, redex->pos);
    const std::string suffix = w.substr(redex->pos + redex->len);
    if (redex->replacement == nullptr) {
      accumulate(f, work, prefix + suffix, c);
    } else {
      for (const auto& [rw, rc] : *redex->replacement) accumulate(f, work, prefix + rw + suffix, f.mul(c, rc));
    }
  }
  return out;
}

Vec normal_form(const Presentation& pres, const Vec& coords, std::string_view word) {
  const Field& f = *pres.field;
  Vec out(pres.dim());
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (f.is_zero(coords[b])) continue;
    const Vec part = normal_form(pres, basis_word(pres, b) + std::string(word));
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = f.add(out[l], f.mul(coords[b], part[l]));
  }
  return out;
}

Construction construct(const Presentation& pres) {
  Construction result{pres, {}, {}, {}};
  HopfData& h = result.algebra;
  const Field& f = *pres.field;
  const std::size_t d = pres.dim();
  h.field = pres.field;
  h.dim = d;
  for (std::uint32_t i = 0; i < pres.rules.g_exponent; ++i)
    for (std::uint32_t j = 0; j < pres.rules.x_exponent; ++j) h.basis_labels.push_back(basis_label(i, j));

  h.mult.resize(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      h.mult[a * d + b] = compress(f, normal_form(pres, basis_word(pres, a) + basis_word(pres, b)));
  h.unit.assign(d, f.zero());
  h.unit[0] = f.one();

  // Delta on generators, extended multiplicatively to g^i x^j
  const std::size_t one_idx = 0;
  const std::size_t g_idx = pres.rules.g_exponent > 1 ? pres.index(1, 0) : one_idx;
  Vec delta_g(d * d), delta_x(d * d);
  delta_g[g_idx * d + g_idx] = f.one();
  if (pres.rules.x_exponent > 1) {
    const std::size_t x_idx = pres.index(0, 1);
    delta_x[x_idx * d + one_idx] = f.one();
    const std::size_t skew = pres.rules.x_skew_by_g ? g_idx : one_idx;
    delta_x[skew * d + x_idx] = f.add(delta_x[skew * d + x_idx], f.one());
  }
  h.comult.resize(d);
  Vec g_power(d * d);
  g_power[one_idx * d + one_idx] = f.one();
  for (std::uint32_t i = 0; i < pres.rules.g_exponent; ++i) {
    Vec cur = g_power;
    for (std::uint32_t j = 0; j < pres.rules.x_exponent; ++j) {
      h.comult[pres.index(i, j)] = compress2(f, cur, d);
      cur = tensor_multiply(h, cur, delta_x);
    }
    g_power = tensor_multiply(h, g_power, delta_g);
  }

  try {
    h.counit = solve_counit(h);
  } catch (const HopfError& e) {
    result.solver_errors.push_back(e.what());
    h.counit.assign(d, f.zero());
  }
  try {
    h.antipode = solve_antipode(h);
  } catch (const HopfError& e) {
    result.solver_errors.push_back(e.what());
  }
  result.report = validate(h);
  return result;
}

HopfData build(const Presentation& pres) {
  Construction c = construct(pres);
  if (!c.ok()) {
    std::ostringstream os;
    os << family_id(pres.family) << "(p=" << pres.p << ",q=" << pres.q << ",delta=" << pres.delta
       << ") is not a Hopf algebra: " << c.report.summary();
    for (const auto& e : c.solver_errors) os << "; " << e;
    throw CatalogError(os.str());
  }
  return std::move(c.algebra);
}

HopfData build_family(Family family, std::uint32_t p, std::uint32_t q, int delta, std::optional<FieldElement> xi) {
  if (!is_pq_family(family)) throw CatalogError("build_family expects f1..f4");
  return build(make_presentation(family, p, q, delta, std::move(xi)));
}

HopfData build_graded(Family which, std::uint32_t p, std::uint32_t q, std::optional<FieldElement> xi) {
  if (which != Family::GrA && which != Family::GrB && which != Family::GrC)
    throw CatalogError("build_graded expects grA, grB or grC");
  return build(make_presentation(which, p, q, 0, std::move(xi)));
}

HopfData build_group_algebra(std::uint32_t q, std::uint32_t p) {
  return build(make_presentation(Family::GroupAlg, p, q));
}

HopfData build_prim_algebra(std::uint32_t p, int delta) {
  return build(make_presentation(Family::PrimAlg, p, 1, delta));
}

std::vector<CatalogEntry> catalog_entries(std::uint32_t p, std::uint32_t q) {
  const bool branch = (p - 1) % q == 0;
  std::vector<CatalogEntry> out{{Family::F1, 0}, {Family::F1, 1}, {Family::F2, 0}};
  if (branch) out.push_back({Family::F2, 1});
  out.push_back({Family::F3, 0});
  out.push_back({Family::F3, 1});
  out.push_back({Family::F4, 0});
  return out;
}

}  // namespace pqhopf
