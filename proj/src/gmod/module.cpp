#include "galmod/gmod/module.hpp"

#include <map>

namespace galmod {

GModule::GModule(GroupPtr group, Lattice lattice, Lattice relations, std::vector<RatMatrix> action, std::string name)
    : group_(std::move(group)),
      lattice_(std::move(lattice)),
      relations_(std::move(relations)),
      action_(std::move(action)),
      name_(std::move(name)) {
  const int n = group_->order();
  const std::size_t d = lattice_.dim();
  if (static_cast<int>(action_.size()) != n)
    throw Error(ErrorKind::InvalidArgument, name_ + ": need one action matrix per group element");
  if (relations_.dim() != d) throw Error(ErrorKind::InvalidArgument, name_ + ": relation lattice dimension mismatch");
  for (const auto& m : action_)
    if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::InvalidArgument, name_ + ": action matrix has wrong size");
  if (action_[0] != RatMatrix::identity(d)) throw Error(ErrorKind::InvalidArgument, name_ + ": identity acts nontrivially");
  for (int a : group_->generators())
    for (int b = 0; b < n; ++b)
      if (action_[group_->mul(a, b)] != action_[a] * action_[b])
        throw Error(ErrorKind::InvalidArgument, name_ + ": action is not a homomorphism");
  if (!lattice_.contains(relations_)) throw Error(ErrorKind::NotASublattice, name_ + ": relations not inside the lattice");
  coord_.resize(n);
  const std::size_t r = lattice_.rank();
  for (int g = 0; g < n; ++g) {
    IntMatrix c(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto co = lattice_.coordinates(action_[g] * lattice_.basis_vector(j));
      if (!co) throw Error(ErrorKind::NotASublattice, name_ + ": lattice is not stable under the action");
      c.set_col(j, *co);
    }
    coord_[g] = std::move(c);
    for (std::size_t j = 0; j < relations_.rank(); ++j)
      if (!relations_.contains(action_[g] * relations_.basis_vector(j)))
        throw Error(ErrorKind::NotASublattice, name_ + ": relations are not stable under the action");
  }
}

GModule::GModule(GroupPtr group, Lattice lattice, std::vector<RatMatrix> action, std::string name)
    : GModule(group, lattice, Lattice(lattice.dim()), std::move(action), std::move(name)) {}

GModule GModule::trivial(GroupPtr g, std::size_t rank) {
  std::vector<RatMatrix> act(g->order(), RatMatrix::identity(rank));
  return GModule(g, Lattice::standard(rank), std::move(act), rank == 1 ? "Z" : "Z^" + std::to_string(rank));
}

GModule GModule::character(GroupPtr g, const std::vector<int>& chi, std::string name) {
  if (static_cast<int>(chi.size()) != g->order()) throw Error(ErrorKind::InvalidArgument, "character has wrong length");
  std::vector<RatMatrix> act;
  for (int c : chi) {
    if (c != 1 && c != -1) throw Error(ErrorKind::InvalidArgument, "character values must be +1 or -1");
    act.push_back(RatMatrix::from_rows({{Rat(c)}}));
  }
  return GModule(g, Lattice::standard(1), std::move(act), std::move(name));
}

GModule GModule::permutation(GroupPtr g, const std::vector<std::vector<int>>& act, std::string name) {
  if (static_cast<int>(act.size()) != g->order()) throw Error(ErrorKind::InvalidArgument, "permutation action has wrong length");
  const std::size_t n = act.front().size();
  std::vector<RatMatrix> mats;
  for (const auto& p : act) {
    RatMatrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) m(p.at(x), x) = 1;
    mats.push_back(std::move(m));
  }
  return GModule(g, Lattice::standard(n), std::move(mats), std::move(name));
}

GModule GModule::regular(GroupPtr g) {
  std::vector<std::vector<int>> act(g->order(), std::vector<int>(g->order()));
  for (int h = 0; h < g->order(); ++h)
    for (int x = 0; x < g->order(); ++x) act[h][x] = g->mul(h, x);
  return permutation(g, act, "Z[" + g->name() + "]");
}

GModule GModule::induced_from_trivial(GroupPtr g, std::size_t rank) {
  GModule m = regular(g);
  GModule out = m;
  for (std::size_t i = 1; i < rank; ++i) out = direct_sum(out, m);
  return out.renamed("Ind(Z^" + std::to_string(rank) + ")");
}

GModule GModule::from_generator_action(GroupPtr g, Lattice lattice, const std::vector<int>& gens,
                                       const std::vector<RatMatrix>& mats, std::string name) {
  if (gens.size() != mats.size()) throw Error(ErrorKind::InvalidArgument, "generator/matrix count mismatch");
  const int n = g->order();
  const std::size_t d = lattice.dim();
  std::vector<std::optional<RatMatrix>> act(n);
  act[0] = RatMatrix::identity(d);
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = g->mul(gens[k], x);
        RatMatrix m = mats[k] * *act[x];
        if (!act[y]) {
          act[y] = std::move(m);
          next.push_back(y);
        } else if (*act[y] != m) {
          throw Error(ErrorKind::InvalidArgument, name + ": generator matrices do not satisfy the group relations");
        }
      }
    frontier = std::move(next);
  }
  std::vector<RatMatrix> all;
  for (int x = 0; x < n; ++x) {
    if (!act[x]) throw Error(ErrorKind::InvalidArgument, name + ": listed elements do not generate the group");
    all.push_back(*act[x]);
  }
  // full homomorphism check
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (all[g->mul(a, b)] != all[a] * all[b])
        throw Error(ErrorKind::InvalidArgument, name + ": generator matrices do not satisfy the group relations");
  return GModule(g, std::move(lattice), std::move(all), std::move(name));
}

Lattice GModule::coord_relations() const {
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < relations_.rank(); ++j)
    gens.push_back(to_rat(*lattice_.coordinates(relations_.basis_vector(j))));
  return Lattice::from_generators(lattice_.rank(), gens);
}

RatMatrix GModule::norm(const Subgroup& h) const {
  RatMatrix n(dim(), dim());
  for (int x : h) n = n + action_.at(x);
  return n;
}

RatMatrix GModule::normalized_norm(const Subgroup& h) const {
  Rat inv(1, static_cast<long>(h.size()));
  inv.canonicalize();
  return norm(h).scaled(inv);
}

GModule GModule::renamed(std::string name) const {
  GModule m = *this;
  m.name_ = std::move(name);
  return m;
}

GModule GModule::with_lattice(Lattice l, std::string name) const {
  return GModule(group_, std::move(l), action_, std::move(name));
}

namespace {

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Lattice lattice_sum_embed(const Lattice& a, const Lattice& b) {
  RatMatrix ea(a.dim() + b.dim(), a.dim()), eb(a.dim() + b.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) ea(i, i) = 1;
  for (std::size_t i = 0; i < b.dim(); ++i) eb(a.dim() + i, i) = 1;
  return a.image(ea) + b.image(eb);
}

Lattice lattice_tensor(const Lattice& a, const Lattice& b) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) {
      RatVector u = a.basis_vector(i), v = b.basis_vector(j), w(a.dim() * b.dim());
      for (std::size_t x = 0; x < u.size(); ++x)
        if (u[x] != 0)
          for (std::size_t y = 0; y < v.size(); ++y) w[x * b.dim() + y] = u[x] * v[y];
      gens.push_back(std::move(w));
    }
  return Lattice::from_generators(a.dim() * b.dim(), gens);
}

}  // namespace

GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.group_ptr() != b.group_ptr() && a.group().order() != b.group().order())
    throw Error(ErrorKind::InvalidArgument, "direct sum over different groups");
  std::vector<RatMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) act.push_back(block_diag(a.action(g), b.action(g)));
  return GModule(a.group_ptr(), lattice_sum_embed(a.lattice(), b.lattice()),
                 lattice_sum_embed(a.relations(), b.relations()), std::move(act), a.name() + "+" + b.name());
}

GModule tensor(const GModule& a, const GModule& b) {
  if (a.group().order() != b.group().order()) throw Error(ErrorKind::InvalidArgument, "tensor over different groups");
  std::vector<RatMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) act.push_back(kronecker(a.action(g), b.action(g)));
  Lattice rel = lattice_tensor(a.relations(), b.lattice()) + lattice_tensor(a.lattice(), b.relations());
  return GModule(a.group_ptr(), lattice_tensor(a.lattice(), b.lattice()), rel, std::move(act),
                 a.name() + "(x)" + b.name());
}

GModule dual(const GModule& a) {
  if (!a.torsion_free()) throw Error(ErrorKind::InvalidArgument, "dual of a module with torsion");
  std::vector<RatMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) act.push_back(to_rat(a.coord_action(a.group().inv(g))).transpose());
  return GModule(a.group_ptr(), Lattice::standard(a.rank()), std::move(act), a.name() + "^v");
}

GModule in_coordinates(const GModule& a) {
  std::vector<RatMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) act.push_back(to_rat(a.coord_action(g)));
  return GModule(a.group_ptr(), Lattice::standard(a.rank()), a.coord_relations(), std::move(act), a.name());
}

GModule restrict_module(const GModule& a, const FiniteGroup::Restricted& r) {
  std::vector<RatMatrix> act;
  for (int x : r.embedding) act.push_back(a.action(x));
  return GModule(r.group, a.lattice(), a.relations(), std::move(act), a.name());
}

GModule inflate_module(const GModule& a, GroupPtr upper, const std::vector<int>& proj) {
  if (!upper->is_homomorphism(a.group(), proj)) throw Error(ErrorKind::TowerMismatch, "projection is not a homomorphism");
  std::vector<RatMatrix> act;
  for (int g = 0; g < upper->order(); ++g) act.push_back(a.action(proj[g]));
  return GModule(std::move(upper), a.lattice(), a.relations(), std::move(act), a.name());
}

bool GMap::maps_lattices() const {
  for (std::size_t j = 0; j < source->lattice().rank(); ++j)
    if (!target->lattice().contains(apply(source->lattice().basis_vector(j)))) return false;
  for (std::size_t j = 0; j < source->relations().rank(); ++j)
    if (!target->relations().contains(apply(source->relations().basis_vector(j)))) return false;
  return true;
}

bool GMap::is_equivariant() const {
  const auto& g = source->group();
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < source->lattice().rank(); ++j) {
      RatVector b = source->lattice().basis_vector(j);
      RatVector lhs = apply(source->act(x, b));
      RatVector rhs = target->act(x, apply(b));
      if (!target->relations().contains(sub(lhs, rhs))) return false;
    }
  return true;
}

void GMap::validate() const {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw Error(ErrorKind::InvalidArgument, "map matrix has wrong shape");
  if (source->group().order() != target->group().order())
    throw Error(ErrorKind::InvalidArgument, "map between modules over different groups");
  if (!maps_lattices()) throw Error(ErrorKind::NotASublattice, "map does not send the source lattice into the target");
  if (!is_equivariant()) throw Error(ErrorKind::InvalidArgument, "map is not equivariant");
}

Lattice GMap::kernel() const { return source->lattice().preimage(matrix, target->relations()); }

Lattice GMap::image() const { return source->lattice().image(matrix) + target->relations(); }

bool GMap::is_surjective() const { return image().contains(target->lattice()); }

bool GMap::equals(const GMap& o) const {
  for (std::size_t j = 0; j < source->lattice().rank(); ++j) {
    RatVector b = source->lattice().basis_vector(j);
    if (!target->relations().contains(sub(apply(b), o.apply(b)))) return false;
  }
  return true;
}

GMap compose(const GMap& g, const GMap& f) { return GMap{f.source, g.target, g.matrix * f.matrix}; }

}  // namespace galmod
