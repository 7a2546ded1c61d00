#pragma once

#include "pqhopf/hopf.hpp"

namespace pqhopf {

/// A functional on H, paired with the basis (lambda(e_i) = coords[i]).
struct DualElement {
  Vec coords;
  bool operator==(const DualElement&) const = default;
};

struct IntegralPair {
  Vec Lambda;          ///< left integral in H
  DualElement lambda;  ///< left integral in H*
  bool normalized = false;
};

class IntegralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spanning vector of {L : h L = eps(h) L for all h}, scaled so the first
/// nonzero coordinate is 1. Throws IntegralError when the space is not a line.
Vec left_integral(const HopfData& h);

/// Spanning functional of {lambda : sum h_(1) lambda(h_(2)) = lambda(h) 1},
/// with the same scaling rule.
DualElement left_integral_dual(const HopfData& h);

/// Rescales lambda so that lambda(Lambda) = 1. Throws IntegralError
/// ("degenerate pairing") when lambda(Lambda) = 0.
IntegralPair normalize_pair(const HopfData& h, Vec Lambda, DualElement lambda);

IntegralPair integral_pair(const HopfData& h);

Elem evaluate(const Field& f, const DualElement& lambda, const Vec& x);

/// nu_n(H) = lambda(Lambda^{[n]}).
FieldElement indicator_integral(const HopfData& h, unsigned n);
FieldElement indicator_integral(const HopfData& h, const IntegralPair& pair, unsigned n);

}  // namespace pqhopf
