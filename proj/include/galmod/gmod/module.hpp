#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmod/exactlin.hpp"
#include "galmod/gmod/group.hpp"

namespace galmod {

// A G-module L/R: a lattice L in Q^n with a Gamma-stable sublattice R and a
// rational representation of the group on Q^n preserving both.
// Torsion-free modules have R = 0.
class GModule {
 public:
  GModule(GroupPtr group, Lattice lattice, Lattice relations, std::vector<RatMatrix> action, std::string name);
  GModule(GroupPtr group, Lattice lattice, std::vector<RatMatrix> action, std::string name);

  static GModule trivial(GroupPtr g, std::size_t rank = 1);
  // Rank one with g acting by chi[g] in {+1, -1}.
  static GModule character(GroupPtr g, const std::vector<int>& chi, std::string name);
  static GModule regular(GroupPtr g);  // Z[G], (h f)(x) = f(h^-1 x)
  static GModule induced_from_trivial(GroupPtr g, std::size_t rank);  // Z[G]^rank
  // Permutation module Z[X] for an action act[g][x].
  static GModule permutation(GroupPtr g, const std::vector<std::vector<int>>& act, std::string name);
  // Action given on group generators; closed up to all elements.
  static GModule from_generator_action(GroupPtr g, Lattice lattice, const std::vector<int>& gens,
                                       const std::vector<RatMatrix>& mats, std::string name);

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  std::size_t dim() const { return lattice_.dim(); }
  std::size_t rank() const { return lattice_.rank(); }
  const Lattice& lattice() const { return lattice_; }
  const Lattice& relations() const { return relations_; }
  const RatMatrix& action(int g) const { return action_.at(g); }
  const std::string& name() const { return name_; }
  bool torsion_free() const { return relations_.rank() == 0; }
  RatVector act(int g, const RatVector& x) const { return action_.at(g) * x; }

  // Action of g in coordinates of the lattice basis (integral).
  const IntMatrix& coord_action(int g) const { return coord_.at(g); }
  // Relations in lattice coordinates.
  Lattice coord_relations() const;
  RatVector from_coords(const IntVector& c) const { return lattice_.combine(c); }

  // Sum over a subgroup of the action matrices.
  RatMatrix norm(const Subgroup& h) const;
  RatMatrix normalized_norm(const Subgroup& h) const;

  // Same data with a different name, lattice or sublattice.
  GModule renamed(std::string name) const;
  GModule with_lattice(Lattice l, std::string name) const;

 private:
  GroupPtr group_;
  Lattice lattice_, relations_;
  std::vector<RatMatrix> action_;
  std::vector<IntMatrix> coord_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const GModule>;

GModule direct_sum(const GModule& a, const GModule& b);
// (L_a (x) L_b) / (R_a (x) L_b + L_a (x) R_b), coordinates a-index * dim(b) + b-index.
GModule tensor(const GModule& a, const GModule& b);
// Z-dual of a torsion-free module, in coordinates of its lattice basis.
GModule dual(const GModule& a);
// Torsion-free module rewritten on Z^rank with the integral coordinate action.
GModule in_coordinates(const GModule& a);
GModule restrict_module(const GModule& a, const FiniteGroup::Restricted& r);
// Inflation along a surjection upper -> lower given as an element map.
GModule inflate_module(const GModule& a, GroupPtr upper, const std::vector<int>& proj);

// An equivariant map of modules, given by a matrix on the ambient spaces.
struct GMap {
  ModulePtr source, target;
  RatMatrix matrix;

  RatVector apply(const RatVector& x) const { return matrix * x; }
  // Throws with a diagnostic when the matrix is not a module map.
  void validate() const;
  bool is_equivariant() const;
  bool maps_lattices() const;
  bool is_surjective() const;
  Lattice kernel() const;  // {x in L_s : f x in R_t}
  Lattice image() const;   // f(L_s) + R_t
  // Agreement on the source lattice modulo the target relations.
  bool equals(const GMap& o) const;
};

GMap compose(const GMap& g, const GMap& f);  // g after f

}  // namespace galmod
