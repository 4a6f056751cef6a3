#include "galmod/tn/local.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

bool in_span(const Lattice& l, const RatVector& x) {
  if (l.rank() == l.dim()) return true;
  return is_zero(l.span_equations() * x);
}

// a (+) b inside Q^(dim a + dim b).
Lattice direct_sum_lattice(const Lattice& a, const Lattice& b) {
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    RatVector v = a.basis_vector(j);
    v.resize(a.dim() + b.dim());
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < b.rank(); ++j) {
    RatVector v(a.dim());
    auto w = b.basis_vector(j);
    v.insert(v.end(), w.begin(), w.end());
    gens.push_back(std::move(v));
  }
  return Lattice::from_generators(a.dim() + b.dim(), gens);
}

void put_block(RatMatrix& m, std::size_t r, std::size_t c, const RatMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r + i, c + j) = b(i, j);
}

}  // namespace

TorusData::TorusData(GModule module, std::optional<Lattice> sub)
    : y(std::make_shared<const GModule>(std::move(module))), y_z(std::move(sub)) {
  if (!y->torsion_free()) throw Error(ErrorKind::InvalidArgument, "cocharacter module must be torsion-free");
  if (!y_z) return;
  if (y_z->dim() != y->dim() || !y->lattice().contains(*y_z))
    throw Error(ErrorKind::NotASublattice, "subtorus lattice is not inside Y");
  if (y->lattice().saturate(*y_z) != *y_z) throw Error(ErrorKind::InvalidArgument, "subtorus lattice is not saturated");
  for (int g = 0; g < y->group().order(); ++g)
    if (!y_z->contains(y_z->image(y->action(g))))
      throw Error(ErrorKind::InvalidArgument, "subtorus lattice is not Gamma-stable");
}

GModule TorusData::subtorus_module() const { return y->with_lattice(subtorus(), y->name() + "_Z"); }

TorusData TorusData::restricted(const FiniteGroup::Restricted& r) const {
  return TorusData(restrict_module(*y, r), y_z);
}

LocalTN::LocalTN(TorusData t) : t_(std::move(t)), sub_(canonical_submodules(t_.module())) {}

YRigClass LocalTN::rig_reduce(const RatVector& mu, const std::optional<Int>& n) const {
  if (mu.size() != dim()) throw Error(ErrorKind::InvalidArgument, "vector has the wrong dimension");
  const Lattice& iy = augmentation();
  YRigClass c;
  c.certificate = n ? *n : Int(group().order()) * common_denominator(mu);
  if (c.certificate <= 0) throw Error(ErrorKind::InvalidArgument, "torsion certificate must be positive");
  if (!iy.contains(scale(mu, Rat(c.certificate))))
    throw Error(ErrorKind::NotTorsion, "certificate " + to_string(c.certificate) + " does not carry the vector into IY");
  c.rep.assign(dim(), 0);
  if (iy.rank() == 0) return c;
  auto coords = rational_solve(iy.basis(), mu);
  if (!coords) throw Error(ErrorKind::NotTorsion, "vector is outside the span of IY");
  RatVector f(coords->size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = frac((*coords)[i]);
    c.order = lcm(c.order, f[i].get_den());
  }
  c.rep = iy.basis() * f;
  return c;
}

YRigClass LocalTN::rig_add(const YRigClass& a, const YRigClass& b) const { return rig_reduce(add(a.rep, b.rep)); }

YRigClass LocalTN::rig_neg(const YRigClass& a) const { return rig_reduce(scale(a.rep, -1)); }

bool LocalTN::mid_check(const YMidElement& x) const {
  if (x.lambda.size() != dim() || x.mu.size() != dim()) return false;
  if (!t_.module().lattice().contains(x.lambda)) return false;
  if (!in_span(t_.subtorus(), x.mu)) return false;
  return natural_norm(x.lambda) == natural_norm(x.mu);
}

YMidElement LocalTN::iso_to_mid(const RatVector& lambda) const {
  if (!t_.module().lattice().contains(lambda)) throw Error(ErrorKind::InvalidArgument, "lambda is not in Y");
  return {lambda, natural_norm(lambda)};
}

YRigClass LocalTN::mid_to_rig(const YMidElement& x) const { return rig_reduce(sub(x.lambda, x.mu)); }

YRigClass LocalTN::defect(const YMidElement& x) const { return rig_reduce(sub(x.mu, natural_norm(x.mu))); }

FgAbPresentation LocalTN::torsion_kernel() const {
  Lattice k = t_.module().lattice().preimage(normalized_norm(), Lattice::zero(dim()));
  return FgAbPresentation::subquotient(augmentation(), k);
}

namespace {

// {(lambda, mu) in Y (+) (1/n) Y : N lambda = N mu}.
Lattice mid_lattice(const LocalTN& t, const Int& n) {
  const std::size_t d = t.dim();
  const Lattice& y = t.torus().module().lattice();
  Lattice amb = direct_sum_lattice(y, t.torus().subtorus().scaled(Rat(1) / Rat(n)));
  RatMatrix eq(d, 2 * d);
  put_block(eq, 0, 0, t.normalized_norm());
  put_block(eq, 0, d, t.normalized_norm().scaled(-1));
  return amb.preimage(eq, Lattice::zero(d));
}

RatMatrix cartesian_map(const LocalTN& t) {
  const std::size_t d = t.dim();
  const int g = t.group().order();
  RatMatrix phi(d + g * d, 2 * d);
  put_block(phi, 0, 0, RatMatrix::identity(d));
  for (int s = 0; s < g; ++s) put_block(phi, d + s * d, d, t.torus().module().action(s));
  return phi;
}

}  // namespace

FgAbPresentation LocalTN::mid_kernel(const Int& n) const {
  const std::size_t d = dim();
  Lattice l = mid_lattice(*this, n);
  RatMatrix phi = cartesian_map(*this);
  Lattice k = l.preimage(phi.row_range(d, phi.rows()), Lattice::zero(phi.rows() - d));
  return FgAbPresentation::subquotient(direct_sum_lattice(augmentation(), Lattice::zero(d)), k);
}

LatticeComplex LocalTN::cartesian_square(const Int& n) const {
  const std::size_t d = dim();
  const int g = group().order();
  LocalLevel level = build_local(t_.module().group_ptr(), n);
  GModule mid_y = tensor(*level.mid, t_.subtorus_module());
  Lattice fix = fixed_lattice(mid_y, group().whole());
  RatMatrix eq(d, d + g * d);
  put_block(eq, 0, 0, normalized_norm());
  for (int s = 0; s < g; ++s) put_block(eq, 0, d + s * d, RatMatrix::identity(d).scaled(Rat(-1, g)));
  Lattice fibre = direct_sum_lattice(t_.module().lattice(), fix).preimage(eq, Lattice::zero(d));

  LatticeComplex c;
  c.name = "Y^mid -> Y^iso x (Y (x) M^mid)^Gamma";
  c.terms.push_back({mid_lattice(*this, n), direct_sum_lattice(augmentation(), Lattice::zero(d))});
  c.terms.push_back({fibre, direct_sum_lattice(augmentation(), Lattice::zero(g * d))});
  c.maps.push_back(cartesian_map(*this));
  return c;
}

YMidElement lift_through(const LocalTN& cover, const GMap& p, const YMidElement& x) {
  const Lattice& src = p.source->lattice();
  const Lattice& tgt = p.target->lattice();
  RatMatrix img = p.matrix * src.basis();
  IntMatrix a(tgt.rank(), src.rank());
  for (std::size_t j = 0; j < src.rank(); ++j) {
    auto c = tgt.coordinates(img.col(j));
    if (!c) throw Error(ErrorKind::InvalidArgument, "map does not preserve lattices");
    for (std::size_t i = 0; i < tgt.rank(); ++i) a(i, j) = (*c)[i];
  }
  auto lc = tgt.coordinates(x.lambda);
  if (!lc) throw Error(ErrorKind::InvalidArgument, "lambda is not in Y");
  auto z = integer_solve(a, *lc);
  if (!z) throw Error(ErrorKind::NotSurjective, "lambda has no integral preimage");
  RatVector lambda = src.combine(*z);
  auto mu0 = rational_solve(p.matrix, x.mu);
  if (!mu0) throw Error(ErrorKind::NotSurjective, "mu has no rational preimage");
  RatVector eps = sub(cover.natural_norm(lambda), cover.natural_norm(*mu0));
  return {lambda, add(*mu0, eps)};
}

YMidElement push_forward(const GMap& f, const YMidElement& x) { return {f.apply(x.lambda), f.apply(x.mu)}; }

}  // namespace galmod
