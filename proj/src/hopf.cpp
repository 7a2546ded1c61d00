#include "pqhopf/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace pqhopf {

SparseVec compress(const Field& f, const Vec& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!f.is_zero(dense[i])) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  return out;
}

Vec densify(const SparseVec& v, std::size_t dim) {
  Vec out(dim);
  for (const auto& t : v) out[t.index] = t.coeff;
  return out;
}

SparseTensor2 compress2(const Field& f, const Vec& dense, std::size_t dim) {
  SparseTensor2 out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!f.is_zero(dense[i]))
      out.push_back({static_cast<std::uint32_t>(i / dim), static_cast<std::uint32_t>(i % dim), dense[i]});
  return out;
}

namespace {

// acc += c * (e_a e_b)
void add_product(const HopfData& h, Vec& acc, std::size_t a, std::size_t b, Elem c) {
  const Field& f = h.F();
  for (const auto& t : h.product(a, b)) acc[t.index] = f.add(acc[t.index], f.mul(c, t.coeff));
}

Vec product_of_vec_and_basis(const HopfData& h, const Vec& v, std::size_t b) {
  Vec out(h.dim);
  for (std::size_t a = 0; a < h.dim; ++a)
    if (!h.F().is_zero(v[a])) add_product(h, out, a, b, v[a]);
  return out;
}

Vec basis_times_vec(const HopfData& h, std::size_t a, const Vec& v) {
  Vec out(h.dim);
  for (std::size_t b = 0; b < h.dim; ++b)
    if (!h.F().is_zero(v[b])) add_product(h, out, a, b, v[b]);
  return out;
}

// Dense d x d coordinates of Delta(e_i).
Vec comult_dense(const HopfData& h, std::size_t i) {
  Vec out(h.dim * h.dim);
  for (const auto& t : h.comult[i]) out[t.left * h.dim + t.right] = t.coeff;
  return out;
}

// Delta applied to a vector, dense d x d.
Vec comult_of_vec(const HopfData& h, const Vec& v) {
  const Field& f = h.F();
  Vec out(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (f.is_zero(v[i])) continue;
    for (const auto& t : h.comult[i]) {
      auto& slot = out[t.left * h.dim + t.right];
      slot = f.add(slot, f.mul(v[i], t.coeff));
    }
  }
  return out;
}

Elem counit_of_vec(const HopfData& h, const Vec& v) { return dot(h.F(), h.counit, v); }

Vec basis_vector(const Field& f, std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = f.one();
  return v;
}

}  // namespace

Vec multiply(const HopfData& h, const Vec& a, const Vec& b) {
  const Field& f = h.F();
  Vec out(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < h.dim; ++j) {
      if (f.is_zero(b[j])) continue;
      add_product(h, out, i, j, f.mul(a[i], b[j]));
    }
  }
  return out;
}

Matrix left_multiplication(const HopfData& h, std::size_t a) {
  Matrix m(h.dim, h.dim);
  for (std::size_t b = 0; b < h.dim; ++b)
    for (const auto& t : h.product(a, b)) m(t.index, b) = t.coeff;
  return m;
}

Matrix convolve(const HopfData& h, const Matrix& fm, const Matrix& gm) {
  const Field& f = h.F();
  Matrix out(h.dim, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec col(h.dim);
    for (const auto& t : h.comult[i]) {
      const Vec left = fm.column(t.left);
      const Vec right = gm.column(t.right);
      const Vec prod = multiply(h, left, right);
      for (std::size_t l = 0; l < h.dim; ++l) col[l] = f.add(col[l], f.mul(t.coeff, prod[l]));
    }
    out.set_column(i, col);
  }
  return out;
}

bool ValidationReport::mentions(const std::string& axiom) const {
  return std::any_of(failures.begin(), failures.end(), [&](const AxiomFailure& a) { return a.axiom == axiom; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << "; ";
    os << failures[i].axiom << " at (";
    for (std::size_t j = 0; j < failures[i].witness.size(); ++j) os << (j ? "," : "") << failures[i].witness[j];
    os << ')';
  }
  return os.str();
}

ValidationReport validate(const HopfData& h) {
  ValidationReport report;
  const Field& f = h.F();
  const std::size_t d = h.dim;
  auto fail = [&](const char* axiom, std::vector<std::size_t> witness) {
    if (!report.mentions(axiom)) report.failures.push_back({axiom, std::move(witness)});
  };

  if (h.mult.size() != d * d || h.comult.size() != d || h.unit.size() != d || h.counit.size() != d) {
    report.failures.push_back({"shape", {}});
    return report;
  }

  // associativity
  for (std::size_t a = 0; a < d && !report.mentions("associativity"); ++a)
    for (std::size_t b = 0; b < d && !report.mentions("associativity"); ++b) {
      const Vec ab = densify(h.product(a, b), d);
      for (std::size_t c = 0; c < d; ++c) {
        const Vec bc = densify(h.product(b, c), d);
        if (product_of_vec_and_basis(h, ab, c) != basis_times_vec(h, a, bc)) {
          fail("associativity", {a, b, c});
          break;
        }
      }
    }

  // unitality
  for (std::size_t a = 0; a < d; ++a) {
    const Vec ea = basis_vector(f, d, a);
    if (multiply(h, h.unit, ea) != ea || multiply(h, ea, h.unit) != ea) {
      fail("unitality", {a});
      break;
    }
  }

  // coassociativity and counitality
  for (std::size_t a = 0; a < d; ++a) {
    Vec left(d * d * d), right(d * d * d);
    for (const auto& t : h.comult[a]) {
      for (const auto& u : h.comult[t.left]) {
        auto& slot = left[(u.left * d + u.right) * d + t.right];
        slot = f.add(slot, f.mul(t.coeff, u.coeff));
      }
      for (const auto& u : h.comult[t.right]) {
        auto& slot = right[(t.left * d + u.left) * d + u.right];
        slot = f.add(slot, f.mul(t.coeff, u.coeff));
      }
    }
    if (left != right) {
      fail("coassociativity", {a});
      break;
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    Vec viaLeft(d), viaRight(d);
    for (const auto& t : h.comult[a]) {
      viaLeft[t.right] = f.add(viaLeft[t.right], f.mul(t.coeff, h.counit[t.left]));
      viaRight[t.left] = f.add(viaRight[t.left], f.mul(t.coeff, h.counit[t.right]));
    }
    const Vec ea = basis_vector(f, d, a);
    if (viaLeft != ea || viaRight != ea) {
      fail("counitality", {a});
      break;
    }
  }

  // Delta and epsilon are algebra maps
  {
    Vec one_one(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) one_one[i * d + j] = f.mul(h.unit[i], h.unit[j]);
    if (comult_of_vec(h, h.unit) != one_one) fail("bialgebra_comult", {});
    if (!f.is_one(counit_of_vec(h, h.unit))) fail("bialgebra_counit", {});
  }
  for (std::size_t a = 0; a < d && !report.mentions("bialgebra_comult"); ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vec lhs = comult_of_vec(h, densify(h.product(a, b), d));
      Vec rhs(d * d);
      for (const auto& s : h.comult[a])
        for (const auto& t : h.comult[b]) {
          const Elem c = f.mul(s.coeff, t.coeff);
          for (const auto& l : h.product(s.left, t.left))
            for (const auto& r : h.product(s.right, t.right)) {
              auto& slot = rhs[l.index * d + r.index];
              slot = f.add(slot, f.mul(c, f.mul(l.coeff, r.coeff)));
            }
        }
      if (lhs != rhs) {
        fail("bialgebra_comult", {a, b});
        break;
      }
    }
  for (std::size_t a = 0; a < d && !report.mentions("bialgebra_counit"); ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Elem lhs = counit_of_vec(h, densify(h.product(a, b), d));
      if (lhs != f.mul(h.counit[a], h.counit[b])) {
        fail("bialgebra_counit", {a, b});
        break;
      }
    }

  // antipode
  if (h.antipode.rows() != d || h.antipode.cols() != d) {
    fail("antipode", {});
    return report;
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vec left(d), right(d);
    for (const auto& t : h.comult[i]) {
      const Vec sl = h.antipode.column(t.left);
      const Vec sr = h.antipode.column(t.right);
      const Vec a = product_of_vec_and_basis(h, sl, t.right);
      const Vec b = basis_times_vec(h, t.left, sr);
      for (std::size_t l = 0; l < d; ++l) {
        left[l] = f.add(left[l], f.mul(t.coeff, a[l]));
        right[l] = f.add(right[l], f.mul(t.coeff, b[l]));
      }
    }
    Vec expected(d);
    for (std::size_t l = 0; l < d; ++l) expected[l] = f.mul(h.counit[i], h.unit[l]);
    if (left != expected || right != expected) {
      fail("antipode", {i});
      break;
    }
  }
  return report;
}

HopfData dual(const HopfData& h) {
  const Field& f = h.F();
  const std::size_t d = h.dim;
  HopfData out;
  out.field = h.field;
  out.dim = d;
  for (const auto& label : h.basis_labels) out.basis_labels.push_back("δ[" + label + "]");

  std::vector<Vec> mult(d * d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : h.comult[i]) mult[t.left * d + t.right][i] = t.coeff;
  for (const auto& v : mult) out.mult.push_back(compress(f, v));

  std::vector<Vec> comult(d, Vec(d * d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& t : h.product(a, b)) comult[t.index][a * d + b] = t.coeff;
  for (const auto& v : comult) out.comult.push_back(compress2(f, v, d));

  out.unit = h.counit;
  out.counit = h.unit;
  out.antipode = transpose(h.antipode);
  return out;
}

HopfData tensor(const HopfData& h1, const HopfData& h2) {
  if (!(h1.field->spec() == h2.field->spec())) throw HopfError("field mismatch");
  const Field& f = h1.F();
  const std::size_t d1 = h1.dim, d2 = h2.dim, d = d1 * d2;
  HopfData out;
  out.field = h1.field;
  out.dim = d;
  for (const auto& a : h1.basis_labels)
    for (const auto& b : h2.basis_labels) out.basis_labels.push_back(a + " ⊗ " + b);

  out.mult.resize(d * d);
  for (std::size_t a1 = 0; a1 < d1; ++a1)
    for (std::size_t b1 = 0; b1 < d2; ++b1)
      for (std::size_t a2 = 0; a2 < d1; ++a2)
        for (std::size_t b2 = 0; b2 < d2; ++b2) {
          SparseVec& slot = out.mult[(a1 * d2 + b1) * d + (a2 * d2 + b2)];
          for (const auto& s : h1.product(a1, a2))
            for (const auto& t : h2.product(b1, b2))
              slot.push_back({static_cast<std::uint32_t>(s.index * d2 + t.index), f.mul(s.coeff, t.coeff)});
        }

  out.unit.resize(d);
  out.counit.resize(d);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      out.unit[a * d2 + b] = f.mul(h1.unit[a], h2.unit[b]);
      out.counit[a * d2 + b] = f.mul(h1.counit[a], h2.counit[b]);
    }

  out.comult.resize(d);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      SparseTensor2& slot = out.comult[a * d2 + b];
      for (const auto& s : h1.comult[a])
        for (const auto& t : h2.comult[b])
          slot.push_back({static_cast<std::uint32_t>(s.left * d2 + t.left), static_cast<std::uint32_t>(s.right * d2 + t.right),
                          f.mul(s.coeff, t.coeff)});
      std::sort(slot.begin(), slot.end(), [](const Term2& x, const Term2& y) {
        return std::pair{x.left, x.right} < std::pair{y.left, y.right};
      });
    }

  out.antipode = Matrix(d, d);
  for (std::size_t r1 = 0; r1 < d1; ++r1)
    for (std::size_t c1 = 0; c1 < d1; ++c1)
      for (std::size_t r2 = 0; r2 < d2; ++r2)
        for (std::size_t c2 = 0; c2 < d2; ++c2)
          out.antipode(r1 * d2 + r2, c1 * d2 + c2) = f.mul(h1.antipode(r1, c1), h2.antipode(r2, c2));
  return out;
}

HopfData trivial_hopf(const FieldPtr& field) {
  HopfData out;
  out.field = field;
  out.dim = 1;
  out.basis_labels = {"1"};
  out.mult = {{{0, field->one()}}};
  out.unit = {field->one()};
  out.comult = {{{0, 0, field->one()}}};
  out.counit = {field->one()};
  out.antipode = Matrix::identity(*field, 1);
  return out;
}

Vec solve_counit(const HopfData& h) {
  const std::size_t d = h.dim;
  const Field& f = h.F();
  Matrix system(d * d, d);
  Vec rhs(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& t : h.comult[i]) {
      auto& slot = system(i * d + t.right, t.left);
      slot = f.add(slot, t.coeff);
    }
    rhs[i * d + i] = f.one();
  }
  auto result = solve(f, system, rhs);
  if (!result.solution) throw HopfError("no counit");
  if (result.nullity > 0) throw HopfError("counit not unique");
  return *result.solution;
}

Matrix solve_antipode(const HopfData& h) {
  const std::size_t d = h.dim;
  const Field& f = h.F();
  // unknown S(a, j) sits at column a * d + j; equation (i, l) is the l-th
  // coordinate of sum c * S(e_j) e_k over Delta(e_i) = sum c e_j (x) e_k
  Matrix system(d * d, d * d);
  Vec rhs(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& t : h.comult[i])
      for (std::size_t a = 0; a < d; ++a)
        for (const auto& m : h.product(a, t.right)) {
          auto& slot = system(i * d + m.index, a * d + t.left);
          slot = f.add(slot, f.mul(t.coeff, m.coeff));
        }
    for (std::size_t l = 0; l < d; ++l) rhs[i * d + l] = f.mul(h.counit[i], h.unit[l]);
  }
  auto result = solve(f, system, rhs);
  if (!result.solution) throw HopfError("no antipode");
  if (result.nullity > 0) throw HopfError("not unique");
  Matrix s(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < d; ++j) s(a, j) = (*result.solution)[a * d + j];
  return s;
}

SweedlerPowers::SweedlerPowers(const HopfData& h) : h_(&h), current_(h.dim, h.dim) {
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t l = 0; l < h.dim; ++l) current_(l, i) = h.F().mul(h.counit[i], h.unit[l]);
}

void SweedlerPowers::advance() {
  const HopfData& h = *h_;
  const Field& f = h.F();
  Matrix next(h.dim, h.dim);
  Vec col(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    std::fill(col.begin(), col.end(), f.zero());
    for (const auto& t : h.comult[i])
      for (std::size_t l = 0; l < h.dim; ++l) {
        const Elem plj = current_(l, t.left);
        if (f.is_zero(plj)) continue;
        add_product(h, col, l, t.right, f.mul(t.coeff, plj));
      }
    next.set_column(i, col);
  }
  current_ = std::move(next);
  ++n_;
}

const Matrix& SweedlerPowers::at(unsigned n) {
  if (n < n_) throw std::logic_error("SweedlerPowers cannot move backwards");
  while (n_ < n) advance();
  return current_;
}

Matrix sweedler_power_map(const HopfData& h, unsigned n) {
  SweedlerPowers powers(h);
  return powers.at(n);
}

Vec sweedler_power_element(const HopfData& h, const Vec& x, unsigned n) {
  return apply(h.F(), sweedler_power_map(h, n), x);
}

FieldElement indicator_trace(const HopfData& h, unsigned n) {
  if (n == 0) throw std::invalid_argument("indicator index must be positive");
  const Matrix p = sweedler_power_map(h, n - 1);
  return {h.field, trace_of_product(h.F(), h.antipode, p)};
}

bool is_commutative(const HopfData& h) {
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = a + 1; b < h.dim; ++b)
      if (h.product(a, b) != h.product(b, a)) return false;
  return true;
}

bool is_cocommutative(const HopfData& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    const Vec dense = comult_dense(h, i);
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = j + 1; k < h.dim; ++k)
        if (dense[j * h.dim + k] != dense[k * h.dim + j]) return false;
  }
  return true;
}

}  // namespace pqhopf
