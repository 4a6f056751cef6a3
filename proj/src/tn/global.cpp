#include "galmod/tn/global.hpp"

#include <functional>
#include <stdexcept>

#include "galmod/error.hpp"

namespace galmod {

namespace {

RatVector block(const RatVector& f, std::size_t i, std::size_t d) {
  return RatVector(f.begin() + i * d, f.begin() + (i + 1) * d);
}

void add_block(RatVector& f, std::size_t i, const RatVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) f[i * v.size() + k] += v[k];
}

Lattice sum_zero(const GModule& points, std::size_t d) {
  std::size_t n = points.dim() / d;
  RatMatrix sum(d, points.dim());
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < d; ++k) sum(k, w * d + k) = 1;
  return points.lattice().preimage(sum, Lattice::zero(d));
}

Lattice pair_lattice(const Lattice& a, const Lattice& b) {
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

RatMatrix columns_of(std::size_t rows, std::size_t cols, const std::function<RatVector(const RatVector&)>& f) {
  RatMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.set_col(j, f(unit_vector(cols, j)));
  return m;
}

}  // namespace

GlobalTN::GlobalTN(TorusData t, const GlobalSite& site) : t_(std::move(t)), level_(build_global(site)) {
  if (t_.group().order() != site.group().order() || t_.group().labels() != site.group().labels())
    throw Error(ErrorKind::InvalidArgument, "torus and site live over different groups");
  GModule yp = y_points(site, t_.module());
  points_ = std::make_shared<const GModule>(yp.with_lattice(sum_zero(yp, dim()), "Y[S_E]_0"));
  sub_ = canonical_submodules(*points_);
  mid_fixed_ = fixed_lattice(tensor(*level_.mid, t_.subtorus_module()), site.group().whole());
}

RatVector GlobalTN::norm(const RatVector& lambda) const {
  const FiniteGroup& g = site().group();
  RatVector out(lambda_dim());
  for (std::size_t w = 0; w < site().size(); ++w)
    for (int s = 0; s < g.order(); ++s)
      add_block(out, w, t_.module().act(s, block(lambda, site().act(g.inv(s), static_cast<int>(w)), dim())));
  return out;
}

RatVector GlobalTN::column_sums(const RatVector& mu) const {
  RatVector out(lambda_dim());
  for (std::size_t i = 0; i < level_.pair_count(); ++i)
    add_block(out, level_.pair_point(static_cast<int>(i)), block(mu, i, dim()));
  return out;
}

bool GlobalTN::mid_check(const YMidGlobal& x) const {
  if (x.lambda.size() != lambda_dim() || x.mu.size() != mu_dim()) return false;
  if (!points_->lattice().contains(x.lambda) || !mid_fixed_.contains(x.mu)) return false;
  return norm(x.lambda) == column_sums(x.mu);
}

RatVector GlobalTN::mu_from_places(const std::vector<RatVector>& mu_v) const {
  if (mu_v.size() != level_.places()) throw Error(ErrorKind::PlaceMismatch, "one value per place is required");
  RatVector out(mu_dim());
  for (std::size_t i = 0; i < level_.pair_count(); ++i) {
    int p = static_cast<int>(i);
    add_block(out, i, t_.module().act(level_.pair_sigma(p), mu_v[level_.pair_place(p)]));
  }
  return out;
}

RatVector GlobalTN::mu_at(const RatVector& mu, int place) const {
  return block(mu, level_.pair_index(0, place), dim());
}

YMidGlobal GlobalTN::lift_iso(const RatVector& lambda) const {
  GMap s = s_iso_global(level_);
  RatVector mu = kronecker(s.matrix, RatMatrix::identity(dim())) * norm(lambda);
  return {lambda, mu};
}

RatVector GlobalTN::dotted_representative(const RatVector& lambda) const {
  return normalize_support(site(), t_.module(), lambda).value;
}

RatMatrix GlobalTN::norm_matrix() const {
  return columns_of(lambda_dim(), lambda_dim(), [&](const RatVector& x) { return norm(x); });
}

RatMatrix GlobalTN::column_sum_matrix() const {
  return columns_of(lambda_dim(), mu_dim(), [&](const RatVector& x) { return column_sums(x); });
}

Lattice GlobalTN::mid_kernel() const {
  return mid_fixed_.preimage(column_sum_matrix(), Lattice::zero(lambda_dim()));
}

LocalTN GlobalTN::local_torus(int place) const {
  const auto& d = site().places().at(place).decomposition;
  return LocalTN(t_.restricted(site().group().restrict_to(d)));
}

YMidElement GlobalTN::localize(const YMidGlobal& x, int place, bool greatest_reps) const {
  const FiniteGroup& g = site().group();
  int w = site().dotted(place);
  RatVector lambda(dim());
  for (const auto& coset : g.right_cosets(site().places().at(place).decomposition)) {
    int s = greatest_reps ? coset.back() : coset.front();
    lambda = add(lambda, t_.module().act(s, block(x.lambda, site().act(g.inv(s), w), dim())));
  }
  return {lambda, mu_at(x.mu, place)};
}

RatVector GlobalTN::product_defect_sum(const YMidGlobal& x) const {
  RatVector sum(dim());
  for (std::size_t v = 0; v < level_.places(); ++v) sum = add(sum, mu_at(x.mu, static_cast<int>(v)));
  return sum;
}

LatticeComplex GlobalTN::cartesian_square() const {
  const std::size_t a = lambda_dim(), b = mu_dim();
  Lattice amb = pair_lattice(points_->lattice(), mid_fixed_);
  Lattice rel = pair_lattice(augmentation(), Lattice::zero(b));

  RatMatrix def = norm_matrix().hstack(column_sum_matrix().scaled(-1));
  RatMatrix c_iso_y = kronecker(level_.c_iso.matrix, RatMatrix::identity(dim()));
  RatMatrix fib = points_->norm(site().group().whole()).hstack(c_iso_y.scaled(-1));

  LatticeComplex c;
  c.name = "global Y^mid -> fibre product";
  c.terms.push_back({amb.preimage(def, Lattice::zero(a)), rel});
  c.terms.push_back({amb.preimage(fib, Lattice::zero(a)), rel});
  c.maps.push_back(RatMatrix::identity(a + b));
  return c;
}

RatVector dotted_correction(const GlobalSite& site, const GModule& k, const RatVector& eps) {
  GModule kp = y_points(site, k);
  for (int g = 0; g < site.group().order(); ++g)
    if (kp.act(g, eps) != eps) throw Error(ErrorKind::InvalidArgument, "correction term is not invariant");
  RatVector out = normalize_support(site, k, eps).value;
  if (kp.normalized_norm(site.group().whole()) * out != eps)
    throw std::logic_error("dotted correction does not recover the invariant term");
  return out;
}

IsoTransition::IsoTransition(const Tower& tower, const TorusData& lower)
    : tower_(tower),
      lower_(lower, tower.lower()),
      upper_(TorusData(inflate_module(lower.module(), tower.upper().group_ptr(), tower.surjection().map), lower.y_z),
             tower.upper()) {}

RatVector IsoTransition::j(const RatVector& f) const {
  const std::size_t d = lower_.dim();
  RatVector out(lower_.lambda_dim());
  for (std::size_t u = 0; u < tower_.upper().size(); ++u) {
    RatVector val = block(f, u, d);
    int w = tower_.project_point(static_cast<int>(u));
    if (w < 0) {
      if (!is_zero(val)) throw Error(ErrorKind::PlaceMismatch, "function is supported above a place outside S");
      continue;
    }
    add_block(out, w, val);
  }
  return out;
}

std::vector<int> IsoTransition::least_section() const {
  std::vector<int> s(tower_.lower().size(), -1);
  for (std::size_t u = 0; u < tower_.upper().size(); ++u) {
    int w = tower_.project_point(static_cast<int>(u));
    if (w >= 0 && s[w] < 0) s[w] = static_cast<int>(u);
  }
  return s;
}

std::vector<int> IsoTransition::greatest_section() const {
  std::vector<int> s(tower_.lower().size(), -1);
  for (std::size_t u = 0; u < tower_.upper().size(); ++u) {
    int w = tower_.project_point(static_cast<int>(u));
    if (w >= 0) s[w] = static_cast<int>(u);
  }
  return s;
}

RatVector IsoTransition::push(const RatVector& f, const std::vector<int>& section) const {
  const std::size_t d = lower_.dim();
  RatVector out(upper_.lambda_dim());
  for (std::size_t w = 0; w < section.size(); ++w) add_block(out, section[w], block(f, w, d));
  return out;
}

RatVector IsoTransition::bang(const RatVector& f) const {
  return upper_.dotted_representative(push(f, least_section()));
}

}  // namespace galmod
