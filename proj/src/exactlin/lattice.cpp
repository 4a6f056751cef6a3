#include "galmod/exactlin/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace galmod {

namespace {

std::size_t pivot_row(const IntMatrix& h, std::size_t j) {
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h(i, j) != 0) return i;
  throw std::logic_error("zero column in Hermite basis");
}

}  // namespace

Lattice Lattice::from_generators(const RatMatrix& gens) {
  Lattice l(gens.rows());
  if (gens.cols() == 0) return l;
  Int d = common_denominator(gens);
  IntMatrix h = hermite_columns(to_int(gens.scaled(Rat(d))));
  Int g = d;
  for (const auto& x : h.data())
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= g;
    d /= g;
  }
  l.denom_ = d;
  l.basis_ = std::move(h);
  return l;
}

Lattice Lattice::from_generators(std::size_t dim, const std::vector<RatVector>& gens) {
  if (gens.empty()) return Lattice(dim);
  return from_generators(RatMatrix::from_cols(gens, dim));
}

Lattice Lattice::standard(std::size_t dim) {
  Lattice l(dim);
  l.basis_ = IntMatrix::identity(dim);
  return l;
}

RatMatrix Lattice::basis() const {
  RatMatrix b = to_rat(basis_);
  if (denom_ != 1) {
    Rat inv(1, denom_);
    inv.canonicalize();
    b = b.scaled(inv);
  }
  return b;
}

RatVector Lattice::basis_vector(std::size_t j) const {
  RatVector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = make_rat(basis_(i, j), denom_);
  return v;
}

std::optional<IntVector> Lattice::coordinates(const RatVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("coordinates: dimension mismatch");
  IntVector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat v = x[i] * denom_;
    if (v.get_den() != 1) return std::nullopt;
    y[i] = v.get_num();
  }
  const std::size_t r = rank();
  IntVector c(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t p = pivot_row(basis_, j);
    Int s = y[p];
    for (std::size_t k = 0; k < j; ++k)
      if (basis_(p, k) != 0) s -= basis_(p, k) * c[k];
    if (s % basis_(p, j) != 0) return std::nullopt;
    c[j] = s / basis_(p, j);
  }
  if (basis_ * c != y) return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_vector(j))) return false;
  return true;
}

RatVector Lattice::combine(const IntVector& coords) const {
  RatVector v(dim_);
  IntVector y = basis_ * coords;
  for (std::size_t i = 0; i < dim_; ++i) v[i] = make_rat(y[i], denom_);
  return v;
}

Lattice Lattice::operator+(const Lattice& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("lattice sum: dimension mismatch");
  return from_generators(basis().hstack(o.basis()));
}

Lattice Lattice::intersect(const Lattice& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("lattice intersection: dimension mismatch");
  if (rank() == 0 || o.rank() == 0) return Lattice(dim_);
  RatMatrix m = basis().hstack(o.basis().scaled(Rat(-1)));
  IntMatrix k = integer_kernel(m);
  RatMatrix c1 = to_rat(k.row_range(0, rank()));
  return from_generators(basis() * c1);
}

Lattice Lattice::scaled(const Rat& c) const { return from_generators(basis().scaled(c)); }

Lattice Lattice::image(const RatMatrix& a) const {
  if (a.cols() != dim_) throw std::invalid_argument("lattice image: dimension mismatch");
  if (rank() == 0) return Lattice(a.rows());
  return from_generators(a * basis());
}

Lattice Lattice::preimage(const RatMatrix& a, const Lattice& target) const {
  if (a.cols() != dim_ || a.rows() != target.dim())
    throw std::invalid_argument("lattice preimage: dimension mismatch");
  if (rank() == 0) return *this;
  RatMatrix ab = a * basis();
  RatMatrix m = target.rank() ? ab.hstack(target.basis().scaled(Rat(-1))) : ab;
  IntMatrix k = integer_kernel(m);
  if (k.cols() == 0) return Lattice(dim_);
  return from_generators(basis() * to_rat(k.row_range(0, rank())));
}

RatMatrix Lattice::span_equations() const {
  if (rank() == 0) return RatMatrix::identity(dim_);
  return galmod::span_equations(to_rat(basis_));
}

Lattice Lattice::saturate(const Lattice& s) const {
  if (rank() == 0) return *this;
  RatMatrix p = s.span_equations();
  if (p.rows() == 0) return *this;
  IntMatrix k = integer_kernel(p * basis());
  if (k.cols() == 0) return Lattice(dim_);
  return from_generators(basis() * to_rat(k));
}

bool Lattice::same_span(const Lattice& o) const {
  if (o.dim_ != dim_ || o.rank() != rank()) return false;
  return (*this + o).rank() == rank();
}

std::string Lattice::describe() const {
  std::ostringstream os;
  os << "lattice(dim=" << dim_ << ", rank=" << rank() << ", denom=" << denom_ << ")";
  return os.str();
}

Lattice condition_lattice(std::size_t n, const Int& d, const RatMatrix& a_eq, const RatMatrix& b_int) {
  if (d <= 0) throw std::invalid_argument("condition_lattice: denominator must be positive");
  if ((a_eq.rows() && a_eq.cols() != n) || (b_int.rows() && b_int.cols() != n))
    throw std::invalid_argument("condition_lattice: column count mismatch");
  // y = d x in Z^n; a_eq y = 0; b_int y - d z = 0 with z integral.
  const std::size_t k = b_int.rows();
  RatMatrix m(a_eq.rows() + k, n + k);
  for (std::size_t i = 0; i < a_eq.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a_eq(i, j);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(a_eq.rows() + i, j) = b_int(i, j);
    m(a_eq.rows() + i, n + i) = -Rat(d);
  }
  IntMatrix ker = m.rows() ? integer_kernel(m) : IntMatrix::identity(n + k);
  RatMatrix y = to_rat(ker.row_range(0, n));
  Rat inv(1, d);
  inv.canonicalize();
  return Lattice::from_generators(y.scaled(inv));
}

}  // namespace galmod
