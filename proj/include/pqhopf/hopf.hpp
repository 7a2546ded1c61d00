#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqhopf/ffield.hpp"
#include "pqhopf/linalg.hpp"

namespace pqhopf {

class HopfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  std::uint32_t index = 0;
  Elem coeff;
  bool operator==(const Term&) const = default;
};

struct Term2 {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Elem coeff;
  bool operator==(const Term2&) const = default;
};

/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;
/// Sorted by (left, right), no zero coefficients.
using SparseTensor2 = std::vector<Term2>;

/// A finite-dimensional Hopf algebra given by structure constants on a basis
/// e_0..e_{d-1}.
///
/// mult[a * dim + b] expands e_a e_b; comult[i] expands Delta(e_i) as
/// sum c * e_left (x) e_right. The antipode matrix uses the column
/// convention: column j holds the coordinates of S(e_j).
struct HopfData {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<SparseVec> mult;
  Vec unit;
  std::vector<SparseTensor2> comult;
  Vec counit;
  Matrix antipode;

  const SparseVec& product(std::size_t a, std::size_t b) const { return mult[a * dim + b]; }
  const Field& F() const { return *field; }
};

SparseVec compress(const Field& f, const Vec& dense);
Vec densify(const SparseVec& v, std::size_t dim);
SparseTensor2 compress2(const Field& f, const Vec& dense, std::size_t dim);

/// Product of two arbitrary elements given in coordinates.
Vec multiply(const HopfData& h, const Vec& a, const Vec& b);
Matrix left_multiplication(const HopfData& h, std::size_t a);

/// Convolution m o (f (x) g) o Delta of two endomorphisms.
Matrix convolve(const HopfData& h, const Matrix& f, const Matrix& g);

struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> witness;  ///< basis indices exhibiting the failure
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
  bool mentions(const std::string& axiom) const;
  std::string summary() const;
};

/// Exhaustive check of associativity, unitality, coassociativity,
/// counitality, multiplicativity of Delta and epsilon, and both antipode
/// identities. Reports the first witness per failing axiom.
ValidationReport validate(const HopfData& h);

/// Dual Hopf algebra on the dual basis.
HopfData dual(const HopfData& h);
/// Componentwise tensor product; basis index a * d2 + b.
HopfData tensor(const HopfData& h1, const HopfData& h2);
/// The one-dimensional Hopf algebra k.
HopfData trivial_hopf(const FieldPtr& field);

/// Solves (epsilon (x) id) o Delta = id for the counit.
Vec solve_counit(const HopfData& h);
/// Solves m o (S (x) id) o Delta = u o epsilon for S. Throws HopfError with
/// "no antipode" or "not unique".
Matrix solve_antipode(const HopfData& h);

/// Matrix of the n-th Sweedler power, via P_0 = u o eps and
/// P_n = m o (P_{n-1} (x) id) o Delta.
Matrix sweedler_power_map(const HopfData& h, unsigned n);
Vec sweedler_power_element(const HopfData& h, const Vec& x, unsigned n);

/// Walks P_0, P_1, P_2, ... reusing the previous power.
class SweedlerPowers {
 public:
  explicit SweedlerPowers(const HopfData& h);

  unsigned exponent() const { return n_; }
  const Matrix& current() const { return current_; }
  void advance();
  /// Advances until the current exponent equals n (n must not be behind).
  const Matrix& at(unsigned n);

 private:
  const HopfData* h_;
  unsigned n_ = 0;
  Matrix current_;
};

/// nu_n(H) = Tr(S o P_{n-1}).
FieldElement indicator_trace(const HopfData& h, unsigned n);

bool is_commutative(const HopfData& h);
bool is_cocommutative(const HopfData& h);

}  // namespace pqhopf
