#include "galmod/tn/semiadelic.hpp"

#include "galmod/error.hpp"

namespace galmod {

SemiAdelic::SemiAdelic(TorusData t, const GlobalSite& site) : t_(std::move(t)), global_(t_) {
  if (t_.group().labels() != site.group().labels())
    throw Error(ErrorKind::PlaceMismatch, "torus and site live over different groups");
  for (const auto& p : site.places()) {
    decomposition_.push_back(p.decomposition);
    local_.emplace_back(t_.restricted(site.group().restrict_to(p.decomposition)));
  }
}

void SemiAdelic::check_size(const std::vector<RatVector>& f) const {
  if (f.size() != places()) throw Error(ErrorKind::PlaceMismatch, "one value per place is required");
  for (const auto& x : f)
    if (x.size() != t_.dim()) throw Error(ErrorKind::InvalidArgument, "vector has the wrong dimension");
}

RatVector SemiAdelic::total(const std::vector<RatVector>& f) const {
  RatVector s(t_.dim());
  for (const auto& x : f) s = add(s, x);
  return s;
}

bool SemiAdelic::iso_member(const std::vector<RatVector>& lambda) const {
  check_size(lambda);
  for (const auto& x : lambda)
    if (!t_.module().lattice().contains(x)) return false;
  return is_zero(global_.natural_norm(total(lambda)));
}

bool SemiAdelic::mid_member(const std::vector<RatVector>& lambda, const std::vector<RatVector>& mu) const {
  if (!iso_member(lambda)) return false;
  check_size(mu);
  const Lattice& y = t_.module().lattice();
  for (const auto& x : mu)
    if (y.rank() < y.dim() && !is_zero(y.span_equations() * x)) return false;
  if (!is_zero(total(mu))) return false;
  for (std::size_t v = 0; v < places(); ++v)
    if (!is_zero(local_[v].natural_norm(sub(lambda[v], mu[v])))) return false;
  return true;
}

bool SemiAdelic::rig_member(const std::vector<RatVector>& lambda) const {
  check_size(lambda);
  for (std::size_t v = 0; v < places(); ++v) {
    try {
      local_[v].rig_reduce(lambda[v]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotTorsion) return false;
      throw;
    }
  }
  return t_.module().lattice().contains(total(lambda));
}

IntVector SemiAdelic::iota(const std::vector<RatVector>& lambda) const {
  check_size(lambda);
  RatVector s = total(lambda);
  if (!t_.module().lattice().contains(s)) throw Error(ErrorKind::InvalidArgument, "sum of the family is not in Y");
  return global_.iso_class(s);
}

std::optional<std::vector<RatVector>> SemiAdelic::mid_preimage(const std::vector<RatVector>& lambda) const {
  if (!iso_member(lambda)) return std::nullopt;
  const std::size_t d = t_.dim(), n = places();
  const Lattice& y = t_.module().lattice();
  RatMatrix span = y.rank() < d ? y.span_equations() : RatMatrix(0, d);
  RatMatrix a(n * d + d + n * span.rows(), n * d);
  RatVector b(a.rows());
  for (std::size_t v = 0; v < n; ++v) {
    RatMatrix nv = t_.module().norm(decomposition_[v]);
    RatVector target = nv * lambda[v];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) a(v * d + i, v * d + k) = nv(i, k);
      b[v * d + i] = target[i];
      a(n * d + i, v * d + i) = 1;
    }
    for (std::size_t r = 0; r < span.rows(); ++r)
      for (std::size_t k = 0; k < d; ++k) a(n * d + d + v * span.rows() + r, v * d + k) = span(r, k);
  }
  auto sol = rational_solve(a, b);
  if (!sol) return std::nullopt;
  std::vector<RatVector> mu;
  for (std::size_t v = 0; v < n; ++v) mu.emplace_back(sol->begin() + v * d, sol->begin() + (v + 1) * d);
  return mu;
}

}  // namespace galmod
