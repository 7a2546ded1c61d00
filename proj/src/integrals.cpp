#include "pqhopf/integrals.hpp"

namespace pqhopf {

namespace {

Vec scale_first_nonzero_to_one(const Field& f, Vec v) {
  for (const Elem c : v) {
    if (f.is_zero(c)) continue;
    const Elem s = f.inv(c);
    for (auto& x : v) x = f.mul(x, s);
    break;
  }
  return v;
}

Vec unique_line(const Field& f, const Matrix& system) {
  auto basis = nullspace(f, system);
  if (basis.size() != 1)
    throw IntegralError("integral space dimension ≠ 1 (got " + std::to_string(basis.size()) + ")");
  return scale_first_nonzero_to_one(f, std::move(basis.front()));
}

}  // namespace

Vec left_integral(const HopfData& h) {
  const Field& f = h.F();
  const std::size_t d = h.dim;
  // rows (i, l): (e_i L - eps(e_i) L)_l = 0
  Matrix system(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& t : h.product(i, b)) {
        auto& slot = system(i * d + t.index, b);
        slot = f.add(slot, t.coeff);
      }
    for (std::size_t l = 0; l < d; ++l) {
      auto& slot = system(i * d + l, l);
      slot = f.sub(slot, h.counit[i]);
    }
  }
  return unique_line(f, system);
}

DualElement left_integral_dual(const HopfData& h) {
  const Field& f = h.F();
  const std::size_t d = h.dim;
  // rows (i, l): sum_{(j,k,c) in Delta(e_i)} c [e_j]_l lambda_k - lambda_i [1]_l = 0
  Matrix system(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& t : h.comult[i]) {
      auto& slot = system(i * d + t.left, t.right);
      slot = f.add(slot, t.coeff);
    }
    for (std::size_t l = 0; l < d; ++l) {
      auto& slot = system(i * d + l, i);
      slot = f.sub(slot, h.unit[l]);
    }
  }
  return DualElement{unique_line(f, system)};
}

Elem evaluate(const Field& f, const DualElement& lambda, const Vec& x) { return dot(f, lambda.coords, x); }

IntegralPair normalize_pair(const HopfData& h, Vec Lambda, DualElement lambda) {
  const Field& f = h.F();
  const Elem pairing = evaluate(f, lambda, Lambda);
  if (f.is_zero(pairing)) throw IntegralError("degenerate pairing");
  const Elem s = f.inv(pairing);
  for (auto& c : lambda.coords) c = f.mul(c, s);
  return IntegralPair{std::move(Lambda), std::move(lambda), true};
}

IntegralPair integral_pair(const HopfData& h) { return normalize_pair(h, left_integral(h), left_integral_dual(h)); }

FieldElement indicator_integral(const HopfData& h, const IntegralPair& pair, unsigned n) {
  if (n == 0) throw std::invalid_argument("indicator index must be positive");
  if (!pair.normalized) throw IntegralError("integral pair is not normalized");
  const Vec power = sweedler_power_element(h, pair.Lambda, n);
  return {h.field, evaluate(h.F(), pair.lambda, power)};
}

FieldElement indicator_integral(const HopfData& h, unsigned n) { return indicator_integral(h, integral_pair(h), n); }

}  // namespace pqhopf
