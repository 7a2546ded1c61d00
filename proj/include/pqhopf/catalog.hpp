#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqhopf/hopf.hpp"

namespace pqhopf {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { F1, F2, F3, F4, GrA, GrB, GrC, GroupAlg, PrimAlg };

/// CLI identifiers: f1 f2 f3 f4 grA grB grC groupalg primalg.
std::string family_id(Family f);
Family parse_family(std::string_view id);
bool is_pq_family(Family f);  ///< F1..F4
bool uses_xi(Family f);       ///< F2, GrC

/// Linear combination of words over {g, x}.
using WordComb = std::map<std::string, Elem>;

/// Rewrite rules of a presentation. Normal words are g^i x^j with
/// i < g_exponent and j < x_exponent.
struct RewriteRules {
  std::uint32_t g_exponent = 1;  ///< g^{g_exponent} -> 1
  std::uint32_t x_exponent = 1;  ///< x^{x_exponent} -> x_power
  WordComb x_power;
  WordComb x_past_g;             ///< xg -> x_past_g
  bool x_skew_by_g = false;      ///< Delta(x) = x(x)1 + g(x)x, else x(x)1 + 1(x)x
};

struct Presentation {
  Family family = Family::F1;
  std::uint32_t p = 2;
  std::uint32_t q = 3;
  int delta = 0;
  bool q_divides_p_minus_1 = false;
  FieldPtr field;
  std::optional<FieldElement> xi;
  RewriteRules rules;

  std::size_t dim() const { return std::size_t{rules.g_exponent} * rules.x_exponent; }
  std::size_t index(std::uint32_t i, std::uint32_t j) const { return std::size_t{i} * rules.x_exponent + j; }
};

/// Builds the presentation of a family. Throws CatalogError for p = q,
/// non-prime parameters, or an inadmissible delta. `xi` overrides the
/// default primitive q-th root for F2 / GrC.
Presentation make_presentation(Family family, std::uint32_t p, std::uint32_t q, int delta = 0,
                               std::optional<FieldElement> xi = std::nullopt);

/// Rewrites a word over {g, x} (e.g. "xgg", "gxxg") to basis coordinates by
/// leftmost-redex rewriting until only g^i x^j words remain.
Vec normal_form(const Presentation& pres, std::string_view word);
/// Normal form of a linear combination of basis monomials followed by a word.
Vec normal_form(const Presentation& pres, const Vec& coords, std::string_view word);
std::string basis_word(const Presentation& pres, std::size_t index);
std::string basis_label(std::uint32_t i, std::uint32_t j);

/// Outcome of assembling structure constants from a presentation without
/// insisting that the result is a Hopf algebra.
struct Construction {
  Presentation presentation;
  HopfData algebra;
  ValidationReport report;
  std::vector<std::string> solver_errors;  ///< counit / antipode solver failures

  bool ok() const { return report.ok() && solver_errors.empty(); }
};

Construction construct(const Presentation& pres);

/// Validated algebra; throws CatalogError carrying the validation summary
/// when the presentation does not define a Hopf algebra.
HopfData build(const Presentation& pres);
HopfData build_family(Family family, std::uint32_t p, std::uint32_t q, int delta = 0,
                      std::optional<FieldElement> xi = std::nullopt);
HopfData build_graded(Family which, std::uint32_t p, std::uint32_t q, std::optional<FieldElement> xi = std::nullopt);
HopfData build_group_algebra(std::uint32_t q, std::uint32_t p);
HopfData build_prim_algebra(std::uint32_t p, int delta = 0);

/// F1 -> GrA, F2 -> GrC, F3/F4 -> GrB.
Family graded_partner(Family family);

struct CatalogEntry {
  Family family;
  int delta;
};

/// Every admissible (family, delta) of dimension pq for this (p, q).
std::vector<CatalogEntry> catalog_entries(std::uint32_t p, std::uint32_t q);

}  // namespace pqhopf
