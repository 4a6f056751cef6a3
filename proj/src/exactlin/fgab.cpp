#include "galmod/exactlin/fgab.hpp"

#include <sstream>
#include <stdexcept>

#include "galmod/error.hpp"

namespace galmod {

Int AbelianInvariants::order() const {
  if (free_rank) throw std::domain_error("order of an infinite group");
  Int o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank) os << (first ? "" : " x ") << "Z^" << free_rank;
  return os.str();
}

FgAbPresentation FgAbPresentation::from_relations(const IntMatrix& relations) {
  FgAbPresentation p;
  p.n_ = relations.rows();
  p.rel_ = relations;
  p.smith_ = snf(relations);
  p.d_.assign(p.n_, Int(0));
  for (std::size_t i = 0; i < p.smith_.rank; ++i) p.d_[i] = p.smith_.D(i, i);
  for (std::size_t i = 0; i < p.n_; ++i) {
    if (p.d_[i] == 1) continue;
    p.factor_index_.push_back(i);
    if (p.d_[i] == 0)
      ++p.inv_.free_rank;
    else
      p.inv_.torsion.push_back(p.d_[i]);
  }
  return p;
}

FgAbPresentation FgAbPresentation::subquotient(const Lattice& sub, const Lattice& amb) {
  if (!amb.contains(sub)) throw Error(ErrorKind::NotASublattice, "subquotient: sub is not contained in amb");
  IntMatrix rel(amb.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) rel.set_col(j, *amb.coordinates(sub.basis_vector(j)));
  FgAbPresentation p = from_relations(rel);
  p.amb_ = amb;
  p.sub_ = sub;
  return p;
}

IntVector FgAbPresentation::normal_form(const IntVector& x) const {
  IntVector z = smith_.U * x;
  IntVector out;
  out.reserve(factor_index_.size());
  for (auto i : factor_index_) out.push_back(d_[i] == 0 ? z[i] : mod_floor(z[i], d_[i]));
  return out;
}

bool FgAbPresentation::is_zero(const IntVector& x) const {
  for (const auto& v : normal_form(x))
    if (v != 0) return false;
  return true;
}

bool FgAbPresentation::equal(const IntVector& x, const IntVector& y) const {
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y.at(i);
  return is_zero(d);
}

Int FgAbPresentation::order_of(const IntVector& x) const {
  IntVector nf = normal_form(x);
  Int o = 1;
  for (std::size_t k = 0; k < nf.size(); ++k) {
    if (nf[k] == 0) continue;
    const Int& d = d_[factor_index_[k]];
    if (d == 0) return 0;
    Int g;
    mpz_gcd(g.get_mpz_t(), nf[k].get_mpz_t(), d.get_mpz_t());
    Int ok = d / g;
    mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), ok.get_mpz_t());
  }
  return o;
}

IntVector FgAbPresentation::factor_generator(std::size_t i) const {
  return smith_.U_inv.col(factor_index_.at(i));
}

Int FgAbPresentation::factor_order(std::size_t i) const { return d_[factor_index_.at(i)]; }

IntVector FgAbPresentation::coords(const RatVector& x) const {
  if (!amb_) throw std::logic_error("presentation has no ambient lattice");
  auto c = amb_->coordinates(x);
  if (!c) throw Error(ErrorKind::NotASublattice, "element does not lie in the ambient lattice");
  return *c;
}

RatVector FgAbPresentation::representative(const IntVector& generator_coords) const {
  if (!amb_) throw std::logic_error("presentation has no ambient lattice");
  return amb_->combine(generator_coords);
}

bool FgAbPresentation::is_zero(const RatVector& x) const {
  if (!amb_->contains(x)) throw Error(ErrorKind::NotASublattice, "element does not lie in the ambient lattice");
  return sub_->contains(x);
}

bool FgAbPresentation::equal(const RatVector& x, const RatVector& y) const { return is_zero(galmod::sub(x, y)); }

std::vector<RatVector> FgAbPresentation::factor_representatives() const {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < factor_count(); ++i) out.push_back(representative(factor_generator(i)));
  return out;
}

}  // namespace galmod
