#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqhopf {

/// Raised for arithmetic preconditions that cannot be met (zero inverse,
/// missing roots of unity, fields too large for table-driven arithmetic).
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of GF(p^k). `modulus` holds the k+1 coefficients of a monic
/// irreducible polynomial, constant term first. For k == 1 it is {0, 1}
/// and plays no role in the arithmetic.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// Compact handle for a field element. The code is the coefficient list
/// (c_0, ..., c_{k-1}) read as a base-p numeral with c_0 as the most
/// significant digit, so code order is the canonical element enumeration.
struct Elem {
  std::uint32_t code = 0;

  auto operator<=>(const Elem&) const = default;
};

/// Table-driven arithmetic in GF(p^k). Instances are immutable and shared
/// through FieldPtr; obtain them from make_field / field_from_spec.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }
  std::uint32_t size() const { return size_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{one_code_}; }
  Elem from_int(long long n) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return Elem{add_table_[a.code * size_ + b.code]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return Elem{neg_table_[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return Elem{exp_[log_[a.code] + log_[b.code]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  bool is_zero(Elem a) const { return a.code == 0; }
  bool is_one(Elem a) const { return a.code == one_code_; }

  /// Least m >= 1 with a^m = 1. Throws on zero.
  std::uint64_t order(Elem a) const;
  std::optional<std::uint32_t> prime_residue(Elem a) const;

  /// Human-readable polynomial form in the generator X, e.g. "2+X^2".
  std::string to_string(Elem a) const;

 private:
  Elem add_digits(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint32_t size_ = 0;
  std::uint32_t one_code_ = 0;
  std::vector<std::uint32_t> digit_weight_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Value-semantic field element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  std::string to_string() const { return field_->to_string(value_); }
  bool is_zero() const { return value_.code == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement pow(long long e) const { return {field_, field_->pow(value_, e)}; }

  bool operator==(const FieldElement& o) const;

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

// Polynomials over GF(p), coefficient vectors with constant term first,
// trailing zeros trimmed. Used for modulus selection.
namespace poly {
using Poly = std::vector<std::uint32_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
}  // namespace poly

bool is_prime(std::uint64_t n);

/// Multiplicative order of p modulo q: the least k with q | p^k - 1.
std::uint32_t required_degree(std::uint32_t p, std::uint32_t q);

/// GF(p^k) with the lexicographically smallest monic irreducible modulus
/// (coefficient lists compared from the constant term upward). Fields are
/// memoized, so repeated calls return the same instance.
FieldPtr make_field(std::uint32_t p, std::uint32_t k);

/// Rebuilds a field from a serialized spec, checking primality and
/// irreducibility of the stored modulus.
FieldPtr field_from_spec(const FieldSpec& spec);

/// First element in the canonical enumeration with multiplicative order
/// exactly q. Throws FieldError("no such root") when q does not divide p^k-1.
FieldElement primitive_qth_root(const FieldPtr& field, std::uint32_t q);

/// Every element of exact order q, in enumeration order.
std::vector<FieldElement> all_primitive_qth_roots(const FieldPtr& field, std::uint32_t q);

std::uint64_t element_order(const FieldElement& x);
std::optional<std::uint32_t> in_prime_subfield(const FieldElement& x);
FieldElement embed_int(const FieldPtr& field, long long n);

}  // namespace pqhopf
