#include "pqhopf/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace pqhopf {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 22;
constexpr std::uint32_t kMaxAddTable = 1024;

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // modular inverse of the leading coefficient
  std::uint32_t lead_inv = 1;
  for (std::uint32_t c = 1; c < p; ++c)
    if ((c * m.back()) % p == 1) lead_inv = c;
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - (factor * m[i]) % p) % p;
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return mod(std::move(r), m, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  const std::size_t deg = g.size() - 1;
  if (deg <= 1) return deg == 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      divisor[d] = 1;
      if (mod(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t p = spec_.p;
  const std::uint32_t k = spec_.k;
  const std::uint64_t n = ipow(p, k);
  if (n > kMaxFieldSize) throw FieldError("field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is too large");
  size_ = static_cast<std::uint32_t>(n);

  digit_weight_.assign(k, 1);
  for (std::uint32_t i = 0; i + 1 < k; ++i) digit_weight_[i] = static_cast<std::uint32_t>(ipow(p, k - 1 - i));
  one_code_ = digit_weight_[0];

  neg_table_.resize(size_);
  for (std::uint32_t c = 0; c < size_; ++c) {
    auto cs = coeffs(Elem{c});
    for (auto& v : cs) v = (p - v) % p;
    neg_table_[c] = from_coeffs(cs).code;
  }
  if (size_ <= kMaxAddTable) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b)
        add_table_[a * size_ + b] = static_cast<std::uint16_t>(add_digits(Elem{a}, Elem{b}).code);
  }

  // exp/log tables from the first generator of the multiplicative group
  const std::uint32_t group = size_ - 1;
  poly::Poly modulus = spec_.modulus;
  auto to_poly = [&](std::uint32_t code) {
    poly::Poly r = coeffs(Elem{code});
    poly::trim(r);
    return r;
  };
  auto from_poly = [&](poly::Poly r) {
    r.resize(k, 0);
    return from_coeffs(r).code;
  };
  for (std::uint32_t cand = 1; cand < size_; ++cand) {
    if (group == 1) {
      exp_ = {cand};
      break;
    }
    std::vector<std::uint32_t> powers{one_code_};
    const poly::Poly g = to_poly(cand);
    poly::Poly cur = to_poly(one_code_);
    bool generator = true;
    for (std::uint32_t e = 1; e < group; ++e) {
      cur = poly::mulmod(cur, g, modulus, p);
      const std::uint32_t code = from_poly(cur);
      if (code == one_code_) {
        generator = false;
        break;
      }
      powers.push_back(code);
    }
    if (generator) {
      exp_ = std::move(powers);
      break;
    }
  }
  log_.assign(size_, 0);
  for (std::uint32_t e = 0; e < group; ++e) log_[exp_[e]] = e;
  exp_.resize(2 * static_cast<std::size_t>(group));
  for (std::uint32_t e = 0; e < group; ++e) exp_[group + e] = exp_[e];
}

Elem Field::add_digits(Elem a, Elem b) const {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) return Elem{(a.code + b.code) % p};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    const std::uint32_t w = digit_weight_[i];
    out += ((a.code / w % p + b.code / w % p) % p) * w;
  }
  return Elem{out};
}

Elem Field::from_int(long long n) const {
  const long long p = spec_.p;
  const long long r = ((n % p) + p) % p;
  return Elem{static_cast<std::uint32_t>(r) * one_code_};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> cs) const {
  if (cs.size() != spec_.k) throw FieldError("coefficient list has wrong length");
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    if (cs[i] >= spec_.p) throw FieldError("coefficient out of range");
    out += cs[i] * digit_weight_[i];
  }
  return Elem{out};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> cs(spec_.k);
  for (std::uint32_t i = 0; i < spec_.k; ++i) cs[i] = a.code / digit_weight_[i] % spec_.p;
  return cs;
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw FieldError("inverse of zero");
  const std::uint32_t group = size_ - 1;
  return Elem{exp_[(group - log_[a.code]) % group]};
}

Elem Field::pow(Elem a, long long e) const {
  if (a.code == 0) {
    if (e < 0) throw FieldError("inverse of zero");
    return e == 0 ? one() : zero();
  }
  const long long group = size_ - 1;
  long long idx = (static_cast<long long>(log_[a.code]) * (((e % group) + group) % group)) % group;
  return Elem{exp_[static_cast<std::size_t>(idx)]};
}

std::uint64_t Field::order(Elem a) const {
  if (a.code == 0) throw FieldError("order of zero is undefined");
  Elem cur = a;
  std::uint64_t m = 1;
  while (!is_one(cur)) {
    cur = mul(cur, a);
    ++m;
  }
  return m;
}

std::optional<std::uint32_t> Field::prime_residue(Elem a) const {
  if (a.code % one_code_ != 0) return std::nullopt;
  return a.code / one_code_;
}

std::string Field::to_string(Elem a) const {
  const auto cs = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << cs[i];
    } else {
      if (cs[i] != 1) os << cs[i];
      os << 'X';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !(field_->spec() == o.field_->spec())) throw FieldError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->div(value_, o.value_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return field_->spec() == o.field_->spec() && value_ == o.value_;
}

std::uint32_t required_degree(std::uint32_t p, std::uint32_t q) {
  if (q < 2 || p % q == 0) throw FieldError("required_degree needs coprime p and q");
  std::uint64_t r = p % q;
  std::uint32_t k = 1;
  while (r != 1) {
    r = (r * p) % q;
    ++k;
  }
  return k;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be positive");

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  FieldSpec spec{p, k, {0, 1}};
  if (k > 1) {
    // Monic degree-k candidates in lexicographic order of (c_0, ..., c_{k-1}).
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      poly::Poly f(k + 1, 0);
      std::uint64_t t = idx;
      for (std::uint32_t i = k; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      f[k] = 1;
      if (poly::is_irreducible(f, p)) {
        spec.modulus = f;
        break;
      }
    }
  }
  auto field = std::make_shared<const Field>(spec);
  cache.emplace(std::pair{p, k}, field);
  return field;
}

FieldPtr field_from_spec(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw FieldError("characteristic is not prime");
  if (spec.k == 1) return make_field(spec.p, 1);
  if (spec.modulus.size() != spec.k + 1 || spec.modulus.back() != 1)
    throw FieldError("modulus must be monic of degree k");
  if (!poly::is_irreducible(spec.modulus, spec.p)) throw FieldError("modulus is reducible");
  auto canonical = make_field(spec.p, spec.k);
  if (canonical->spec() == spec) return canonical;
  return std::make_shared<const Field>(spec);
}

std::vector<FieldElement> all_primitive_qth_roots(const FieldPtr& field, std::uint32_t q) {
  std::vector<FieldElement> roots;
  if ((field->size() - 1) % q != 0) return roots;
  for (std::uint32_t c = 1; c < field->size(); ++c)
    if (field->order(Elem{c}) == q) roots.emplace_back(field, Elem{c});
  return roots;
}

FieldElement primitive_qth_root(const FieldPtr& field, std::uint32_t q) {
  if (q == 0 || (field->size() - 1) % q != 0) throw FieldError("no such root");
  for (std::uint32_t c = 1; c < field->size(); ++c)
    if (field->order(Elem{c}) == q) return {field, Elem{c}};
  throw FieldError("no such root");
}

std::uint64_t element_order(const FieldElement& x) { return x.field()->order(x.value()); }

std::optional<std::uint32_t> in_prime_subfield(const FieldElement& x) {
  return x.field()->prime_residue(x.value());
}

FieldElement embed_int(const FieldPtr& field, long long n) { return {field, field->from_int(n)}; }

}  // namespace pqhopf
