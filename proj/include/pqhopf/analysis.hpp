#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqhopf/catalog.hpp"
#include "pqhopf/hopf.hpp"

namespace pqhopf {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// chi_r(n): r when r | n, 1 otherwise.
std::uint32_t chi(std::uint32_t r, std::uint64_t n);

/// Predicted residue of nu_n mod p: chi_p(n) chi_q(n) for commutative and
/// cocommutative algebras, chi_p(n) for the rest.
std::uint32_t predicted_indicator(bool commutative_and_cocommutative, std::uint32_t p, std::uint32_t q, std::uint64_t n);
std::uint32_t predicted_indicator(const HopfData& h, std::uint32_t p, std::uint32_t q, std::uint64_t n);

enum class Method { Trace, Integral, Both };
std::string method_id(Method m);
Method parse_method(std::string_view id);

struct AlgebraInfo {
  std::string family;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  int delta = 0;
  bool q_divides_p_minus_1 = false;
  std::optional<std::vector<std::uint32_t>> xi;  ///< coefficient list of the chosen root
  bool commutative = false;
  bool cocommutative = false;
};

AlgebraInfo describe(const Presentation& pres, const HopfData& h);

struct IndicatorEntry {
  unsigned n = 0;
  FieldElement value;
  std::optional<std::uint32_t> residue;
  std::uint32_t predicted = 0;
  std::optional<bool> methods_agree;  ///< set only when both methods ran
  bool matches_prediction = false;
};

struct IndicatorReport {
  AlgebraInfo info;
  Method method = Method::Both;
  std::vector<IndicatorEntry> entries;
  std::optional<unsigned> detected_period;

  bool all_match() const;
  bool all_agree() const;
  std::vector<Elem> values() const;
  std::vector<std::optional<std::uint32_t>> residues() const;
};

/// nu_1..nu_{n_max}. With Method::Both the trace value is reported and
/// methods_agree records equality with the integral formula.
IndicatorReport indicator_sequence(const HopfData& h, const AlgebraInfo& info, unsigned n_max, Method method);

/// Smallest T <= len/2 with v[n+T] == v[n] across the window.
std::optional<unsigned> detect_period(std::span<const Elem> values);
std::optional<unsigned> detect_period(const IndicatorReport& report);

/// Calls `visit` with every (k_1, ..., k_parts) of nonnegative integers
/// summing to `total`, in lexicographic order.
void for_each_composition(unsigned total, unsigned parts, const std::function<void(std::span<const unsigned>)>& visit);
/// Exact multinomial coefficient total! / prod k_i!.
std::uint64_t multinomial(std::span<const unsigned> ks);

struct LemmaCheck {
  bool statement_form = false;  ///< exponent (n+1)i + n k_1 + ... + k_n
  bool proof_form = false;      ///< exponent (n+1)i + k_1 + 2 k_2 + ... + n k_n
  bool forms_agree = false;
  bool ok() const { return statement_form && proof_form && forms_agree; }
};

/// Lemma part 1 on GrB(p, q): (g^i x^{p-1})^{[n+1]} against the
/// multinomial closed form.
LemmaCheck check_lemma_part1(const HopfData& gr_b, const Presentation& pres, unsigned i, unsigned n);
bool verify_lemma_part1(std::uint32_t p, std::uint32_t q, unsigned i, unsigned n);

/// Lemma part 2 on GrC(p, q): (g^i x^{p-1})^{[n+1]} equals
/// (xi^{in} + ... + xi^i + 1)^{p-1} g^{(n+1)i} x^{p-1}.
bool check_lemma_part2(const HopfData& gr_c, const Presentation& pres, unsigned i, unsigned n);
bool verify_lemma_part2(std::uint32_t p, std::uint32_t q, unsigned i, unsigned n);

struct CorollaryResult {
  std::uint32_t residue = 0;   ///< left-hand side mod p
  std::uint32_t expected = 0;  ///< n^{p-1} mod p
  std::uint64_t terms = 0;     ///< tuples enumerated
  bool holds() const { return residue == expected; }
};

/// Sum of q * multinomial(p-1; k_1..k_n) over compositions of p-1 with
/// k_1 + 2 k_2 + ... + (n-1) k_{n-1} = 1-p (mod q). Requires q | n, n > 1.
CorollaryResult corollary_check(std::uint32_t p, std::uint32_t q, unsigned n);
std::uint32_t corollary_sum(std::uint32_t p, std::uint32_t q, unsigned n);

/// The graded-B display for nu_m with m = n+1: box enumeration of
/// 0 <= k_1..k_n <= p-1 with k_{n+1} = p-1 - sum, constrained by
/// k_1 + 2 k_2 + ... + n k_n = 1-p (mod q). Requires q | m.
CorollaryResult case_b_display_check(std::uint32_t p, std::uint32_t q, unsigned m);

struct FamilyCheck {
  Family family = Family::F1;
  int delta = 0;
  bool constructed = false;
  std::string construction_error;
  IndicatorReport report;
  std::vector<unsigned> partner_mismatches;  ///< n where nu_n(H) != nu_n(gr H)
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct TheoremReport {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  unsigned n_max = 0;
  std::vector<FamilyCheck> checks;
  bool ok() const;
};

/// Every admissible family: prediction match, trace/integral agreement and
/// equality with the graded partner for n <= n_max.
TheoremReport verify_main_theorem(std::uint32_t p, std::uint32_t q, unsigned n_max);

/// Indicator sequences (n <= n_max, default 2pq) for every primitive q-th root.
bool verify_xi_independence(Family family, std::uint32_t p, std::uint32_t q, unsigned n_max = 0);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool is_scalar_multiple(const Field& f, const Vec& v, const Vec& w);

std::vector<PropertyCheck> check_integral_closed_forms(std::uint32_t p, std::uint32_t q);
PropertyCheck check_case_a(std::uint32_t p, std::uint32_t q);
PropertyCheck check_dual_invariance(const HopfData& h, const std::string& name, unsigned n_max);
PropertyCheck check_tensor_multiplicativity(const HopfData& a, const HopfData& b, const std::string& name, unsigned n_max);

/// The checkable structural properties for one (p, q): integral closed
/// forms, Case A decomposition, dual invariance, tensor multiplicativity,
/// periods within pq, and xi-independence.
std::vector<PropertyCheck> verify_properties(std::uint32_t p, std::uint32_t q, unsigned n_max);

/// Default (p, q) sweep of the verify-* commands.
const std::vector<std::pair<std::uint32_t, std::uint32_t>>& default_sweep();

}  // namespace pqhopf
