#include "galmod/exactlin/complex.hpp"

namespace galmod {

std::optional<std::string> LatticeComplex::exactness_failure() const {
  if (maps.size() + 1 != terms.size()) return name + ": wrong number of maps";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& a = terms[i];
    const auto& b = terms[i + 1];
    const auto& f = maps[i];
    if (f.cols() != a.top.dim() || f.rows() != b.top.dim()) return name + ": map " + std::to_string(i) + " has wrong shape";
    if (!b.top.contains(a.top.image(f))) return name + ": map " + std::to_string(i) + " leaves the target";
    if (!b.bottom.contains(a.bottom.image(f))) return name + ": map " + std::to_string(i) + " is not defined on the quotient";
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const auto& b = terms[i + 1];
    Lattice ker = b.top.preimage(maps[i + 1], terms[i + 2].bottom);
    Lattice im = terms[i].top.image(maps[i]) + b.bottom;
    if (ker != im) return name + ": not exact at term " + std::to_string(i + 1);
  }
  return std::nullopt;
}

std::optional<std::string> LatticeComplex::short_exactness_failure() const {
  if (auto e = exactness_failure()) return e;
  if (maps.empty()) return std::nullopt;
  const auto& first = terms.front();
  if (first.top.preimage(maps.front(), terms[1].bottom) != first.bottom) return name + ": first map is not injective";
  const auto& last = terms.back();
  Lattice im = terms[terms.size() - 2].top.image(maps.back()) + last.bottom;
  if (!im.contains(last.top)) return name + ": last map is not surjective";
  return std::nullopt;
}

}  // namespace galmod
