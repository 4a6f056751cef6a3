#include "galmod/gmod/cohomology.hpp"

#include <algorithm>
#include <functional>

namespace galmod {

std::vector<int> subgroup_generators(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup cur = g.trivial();
  for (int x : h) {
    if (cur.size() == h.size()) break;
    if (std::binary_search(cur.begin(), cur.end(), x)) continue;
    gens.push_back(x);
    cur = g.generated(gens);
  }
  return gens;
}

namespace {

// Direct sum of `copies` copies of a lattice in Q^r.
Lattice repeat_lattice(const Lattice& l, std::size_t copies) {
  const std::size_t r = l.dim();
  std::vector<RatVector> gens;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t j = 0; j < l.rank(); ++j) {
      RatVector v(r * copies);
      RatVector b = l.basis_vector(j);
      for (std::size_t i = 0; i < r; ++i) v[c * r + i] = b[i];
      gens.push_back(std::move(v));
    }
  return Lattice::from_generators(r * copies, gens);
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void add_block(IntMatrix& d, std::size_t row, std::size_t col, const IntMatrix& blk, int sign) {
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = 0; j < blk.cols(); ++j)
      if (blk(i, j) != 0) d(row + i, col + j) += sign * blk(i, j);
}

// Rows of d^k for tuples whose first entry lies in `first` (all when empty).
IntMatrix coboundary_rows(const GModule& m, const Subgroup& h, int k, const std::vector<int>& first) {
  const FiniteGroup& g = m.group();
  const std::size_t n = h.size(), r = m.rank();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[h[i]] = static_cast<int>(i);
  const IntMatrix id = IntMatrix::identity(r);
  std::vector<std::size_t> firsts;
  if (first.empty())
    for (std::size_t i = 0; i < n; ++i) firsts.push_back(i);
  else
    for (int x : first) firsts.push_back(static_cast<std::size_t>(local.at(x)));
  const std::size_t tail = ipow(n, k);
  IntMatrix d(firsts.size() * tail * r, tail * r);
  std::vector<std::size_t> t(k + 1);
  for (std::size_t fi = 0; fi < firsts.size(); ++fi)
    for (std::size_t rest = 0; rest < tail; ++rest) {
      t[0] = firsts[fi];
      std::size_t x = rest;
      for (int i = k; i >= 1; --i) {
        t[i] = x % n;
        x /= n;
      }
      const std::size_t row = (fi * tail + rest) * r;
      auto index_of = [&](const std::vector<std::size_t>& tup) {
        std::size_t idx = 0;
        for (auto v : tup) idx = idx * n + v;
        return idx;
      };
      // g_1 f(g_2..g_{k+1})
      std::vector<std::size_t> tup(t.begin() + 1, t.end());
      add_block(d, row, index_of(tup) * r, m.coord_action(h[t[0]]), 1);
      for (int i = 1; i <= k; ++i) {
        std::vector<std::size_t> u;
        for (int j = 0; j <= k; ++j) {
          if (j == i) continue;
          if (j == i - 1)
            u.push_back(static_cast<std::size_t>(local[g.mul(h[t[i - 1]], h[t[i]])]));
          else
            u.push_back(t[j]);
        }
        add_block(d, row, index_of(u) * r, id, (i % 2) ? -1 : 1);
      }
      std::vector<std::size_t> last(t.begin(), t.end() - 1);
      add_block(d, row, index_of(last) * r, id, ((k + 1) % 2) ? -1 : 1);
    }
  return d;
}

// {x in Z^cols : a x in target}.
Lattice integral_preimage(const IntMatrix& a, const Lattice& target) {
  return Lattice::standard(a.cols()).preimage(to_rat(a), target);
}

}  // namespace

IntMatrix coboundary_matrix(const GModule& m, const Subgroup& h, int k) { return coboundary_rows(m, h, k, {}); }

Lattice fixed_lattice(const GModule& m, const Subgroup& h) {
  const FiniteGroup& g = m.group();
  auto gens = subgroup_generators(g, h);
  const std::size_t r = m.rank();
  if (gens.empty()) return m.lattice();
  IntMatrix stacked(gens.size() * r, r);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    IntMatrix d = m.coord_action(gens[k]) - IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = d(i, j);
  }
  Lattice z = integral_preimage(stacked, repeat_lattice(m.coord_relations(), gens.size()));
  return z.image(m.lattice().basis());
}

Lattice augmentation_lattice(const GModule& m, const Subgroup& h) {
  auto gens = subgroup_generators(m.group(), h);
  std::vector<RatVector> v;
  for (std::size_t j = 0; j < m.lattice().rank(); ++j) {
    RatVector b = m.lattice().basis_vector(j);
    for (int x : gens) v.push_back(sub(m.act(x, b), b));
  }
  return Lattice::from_generators(m.dim(), v) + m.relations();
}

TateGroup tate_cohomology(const GModule& m, const Subgroup& h_in, int degree) {
  Subgroup h = m.group().check_subgroup(h_in);
  TateGroup out;
  out.degree = degree;
  out.subgroup = h;
  switch (degree) {
    case -1: {
      RatMatrix n = m.norm(h);
      Lattice z = m.lattice().preimage(n, m.relations());
      out.group = FgAbPresentation::subquotient(augmentation_lattice(m, h), z);
      return out;
    }
    case 0: {
      Lattice z = fixed_lattice(m, h);
      Lattice b = m.lattice().image(m.norm(h)) + m.relations();
      out.group = FgAbPresentation::subquotient(b, z);
      return out;
    }
    case 1:
    case 2: {
      const std::size_t r = m.rank(), n = h.size();
      Lattice rel = m.coord_relations();
      std::vector<int> first;
      if (degree == 1) {
        first = subgroup_generators(m.group(), h);
        first.insert(first.begin(), 0);
      }
      IntMatrix dk = coboundary_rows(m, h, degree, first);
      std::size_t rows = dk.rows() / r;
      Lattice z = integral_preimage(dk, repeat_lattice(rel, rows));
      IntMatrix dprev = coboundary_rows(m, h, degree - 1, {});
      Lattice b = Lattice::from_generators(to_rat(dprev)) + repeat_lattice(rel, ipow(n, degree));
      out.group = FgAbPresentation::subquotient(b, z);
      return out;
    }
    default:
      throw Error(ErrorKind::DegreeUnsupported, "Tate cohomology is available in degrees -1, 0, 1, 2 only");
  }
}

CanonicalSubmodules canonical_submodules(const GModule& m, const Subgroup& h) {
  Lattice aug = augmentation_lattice(m, h);
  return CanonicalSubmodules{fixed_lattice(m, h), aug, FgAbPresentation::subquotient(aug, m.lattice()), m.norm(h),
                             m.normalized_norm(h)};
}

CanonicalSubmodules canonical_submodules(const GModule& m) { return canonical_submodules(m, m.group().whole()); }

namespace {

std::vector<RatVector> orbit_vectors(const GModule& m, const std::vector<RatVector>& gens) {
  std::vector<RatVector> out;
  for (const auto& x : gens)
    for (int g = 0; g < m.group().order(); ++g) out.push_back(m.act(g, x));
  return out;
}

// Orbit vectors independent and spanning a saturated sublattice of L.
bool is_direct_summand_orbit(const GModule& m, const std::vector<RatVector>& gens) {
  auto vs = orbit_vectors(m, gens);
  for (const auto& v : vs)
    if (!m.lattice().contains(v)) return false;
  Lattice s = Lattice::from_generators(m.dim(), vs);
  if (s.rank() != vs.size()) return false;
  return m.lattice().saturate(s) == s;
}

}  // namespace

bool is_induced_basis(const GModule& m, const std::vector<RatVector>& gens) {
  if (!m.torsion_free()) return false;
  auto vs = orbit_vectors(m, gens);
  if (vs.size() != m.rank()) return false;
  for (const auto& v : vs)
    if (!m.lattice().contains(v)) return false;
  return Lattice::from_generators(m.dim(), vs) == m.lattice();
}

InducedWitness induced_witness(const GModule& m, const std::optional<std::vector<RatVector>>& hint) {
  if (!m.torsion_free()) throw Error(ErrorKind::KernelNotInduced, m.name() + " has torsion");
  if (hint) {
    if (is_induced_basis(m, *hint)) return {*hint};
    throw Error(ErrorKind::KernelNotInduced, "hint does not give a permuted basis of " + m.name());
  }
  const std::size_t r = m.rank(), n = static_cast<std::size_t>(m.group().order());
  if (r > 12) throw Error(ErrorKind::RankTooLargeForSearch, m.name() + " has rank " + std::to_string(r));
  if (r % n != 0) throw Error(ErrorKind::KernelNotInduced, m.name() + ": rank not divisible by the group order");
  std::vector<RatVector> pool;
  for (std::size_t i = 0; i < r; ++i) pool.push_back(m.lattice().basis_vector(i));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      pool.push_back(sub(m.lattice().basis_vector(i), m.lattice().basis_vector(j)));
      pool.push_back(add(m.lattice().basis_vector(i), m.lattice().basis_vector(j)));
    }
  const std::size_t k = r / n;
  std::vector<RatVector> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t start) {
    if (chosen.size() == k) return is_induced_basis(m, chosen);
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (is_direct_summand_orbit(m, chosen) && search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(0)) return {chosen};
  throw Error(ErrorKind::KernelNotInduced, "no permuted basis found for " + m.name());
}

HomLattice equivariant_hom_lattice(const GModule& x, const GModule& m) {
  if (!x.torsion_free() || !m.torsion_free())
    throw Error(ErrorKind::InvalidArgument, "equivariant homs need torsion-free modules");
  const std::size_t rx = x.rank(), rm = m.rank();
  const auto gens = x.group().generators();
  const std::size_t unknowns = rm * rx;
  IntMatrix eq(gens.size() * unknowns, unknowns);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const IntMatrix& px = x.coord_action(gens[gi]);
    const IntMatrix& pm = m.coord_action(gens[gi]);
    // (A px - pm A)(i, j)
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rx; ++j) {
        std::size_t row = gi * unknowns + i * rx + j;
        for (std::size_t k = 0; k < rx; ++k) eq(row, i * rx + k) += px(k, j);
        for (std::size_t k = 0; k < rm; ++k) eq(row, k * rx + j) -= pm(i, k);
      }
  }
  IntMatrix ker = integer_kernel(eq);
  HomLattice out{Lattice::from_generators(to_rat(ker)), {}};
  RatMatrix bx_inv = rx ? left_inverse(x.lattice().basis()) : RatMatrix(0, x.dim());
  RatMatrix bm = m.lattice().basis();
  for (std::size_t c = 0; c < out.coords.rank(); ++c) {
    RatVector v = out.coords.basis_vector(c);
    RatMatrix a(rm, rx);
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rx; ++j) a(i, j) = v[i * rx + j];
    out.maps.push_back(bm * a * bx_inv);
  }
  return out;
}

GMap equivariant_lift(const GMap& f, const GMap& p) {
  const GModule& x = *f.source;
  const GModule& pm = *p.source;
  const GModule& q = *p.target;
  if (!x.torsion_free() || !pm.torsion_free())
    throw Error(ErrorKind::InvalidArgument, "equivariant_lift needs torsion-free source and cover");
  if (f.target->dim() != q.dim()) throw Error(ErrorKind::InvalidArgument, "f and p have different targets");
  if (!p.is_surjective()) throw Error(ErrorKind::NotSurjective, "p is not surjective");
  const std::size_t rx = x.rank(), rp = pm.rank();
  // Z-linear lift g0 on the basis of X.
  RatMatrix pb = p.matrix * pm.lattice().basis();
  RatMatrix rb = q.relations().rank() ? q.relations().basis() : RatMatrix(q.dim(), 0);
  RatMatrix sys = pb.hstack(rb.scaled(Rat(-1)));
  Int den = common_denominator(sys);
  IntMatrix isys = to_int(sys.scaled(Rat(den)));
  IntMatrix c0(rp, rx);
  for (std::size_t j = 0; j < rx; ++j) {
    RatVector t = f.apply(x.lattice().basis_vector(j));
    RatVector ts = scale(t, Rat(den));
    if (!is_integral(ts)) throw Error(ErrorKind::NotSurjective, "target value outside the lattice");
    auto sol = integer_solve(isys, to_int(ts));
    if (!sol) throw Error(ErrorKind::NotSurjective, "no lattice preimage for a basis vector");
    for (std::size_t i = 0; i < rp; ++i) c0(i, j) = (*sol)[i];
  }
  // Kernel K of p and the cocycle sigma -> g0 - sigma g0 with values in Hom(X, K).
  Lattice k = p.kernel();
  const std::size_t rk = k.rank();
  IntMatrix kin(rp, rk);  // K basis in P coordinates
  for (std::size_t j = 0; j < rk; ++j) kin.set_col(j, *pm.lattice().coordinates(k.basis_vector(j)));
  GModule kmod = pm.with_lattice(k, "ker");
  const FiniteGroup& g = x.group();
  const auto gens = g.generators();
  const std::size_t unknowns = rk * rx;
  IntMatrix eq(gens.size() * unknowns, unknowns);
  IntVector rhs(gens.size() * unknowns);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int s = gens[gi];
    const IntMatrix& ppx = x.coord_action(g.inv(s));
    IntMatrix sg0 = pm.coord_action(s) * c0 * ppx;
    IntMatrix cs = c0 - sg0;  // P coordinates, columns lie in K
    const IntMatrix& pk = kmod.coord_action(s);
    for (std::size_t j = 0; j < rx; ++j) {
      auto kc = k.coordinates(pm.lattice().combine(cs.col(j)));
      if (!kc) throw Error(ErrorKind::InvalidArgument, "f is not equivariant modulo relations");
      for (std::size_t i = 0; i < rk; ++i) rhs[gi * unknowns + i * rx + j] = (*kc)[i];
    }
    // (H - pk H ppx)(i, j)
    for (std::size_t i = 0; i < rk; ++i)
      for (std::size_t j = 0; j < rx; ++j) {
        std::size_t row = gi * unknowns + i * rx + j;
        eq(row, i * rx + j) += 1;
        for (std::size_t a = 0; a < rk; ++a)
          if (pk(i, a) != 0)
            for (std::size_t b = 0; b < rx; ++b)
              if (ppx(b, j) != 0) eq(row, a * rx + b) -= pk(i, a) * ppx(b, j);
      }
  }
  auto sol = unknowns ? integer_solve(eq, rhs) : std::optional<IntVector>(IntVector{});
  if (!sol) throw Error(ErrorKind::KernelNotInduced, "the obstruction class in H^1(Hom(X, ker p)) is nonzero");
  IntMatrix hk(rk, rx);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < rx; ++j) hk(i, j) = (*sol)[i * rx + j];
  IntMatrix coords = c0 - kin * hk;
  RatMatrix bx_inv = rx ? left_inverse(x.lattice().basis()) : RatMatrix(0, x.dim());
  GMap out{f.source, p.source, pm.lattice().basis() * to_rat(coords) * bx_inv};
  out.validate();
  return out;
}

}  // namespace galmod
