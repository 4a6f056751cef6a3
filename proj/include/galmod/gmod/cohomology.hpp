#pragma once

#include <optional>
#include <vector>

#include "galmod/gmod/module.hpp"

namespace galmod {

// Tate cohomology of a subgroup H in degrees -1, 0 (Tate) and 1, 2 (ordinary).
// Degrees -1 and 0 are presented inside the ambient space of the module;
// degrees 1 and 2 inside the space of inhomogeneous cochains written in
// lattice coordinates (tuple index * rank + coordinate).
struct TateGroup {
  int degree = 0;
  Subgroup subgroup;
  FgAbPresentation group;
  const AbelianInvariants& invariants() const { return group.invariants(); }
};

TateGroup tate_cohomology(const GModule& m, const Subgroup& h, int degree);

// Coboundary d^k : C^k -> C^{k+1} in lattice coordinates.
IntMatrix coboundary_matrix(const GModule& m, const Subgroup& h, int k);

struct CanonicalSubmodules {
  Lattice invariants;             // {x in L : (g - 1) x in R}
  Lattice augmentation;           // I L + R
  FgAbPresentation coinvariants;  // L / (I L + R)
  RatMatrix norm;
  RatMatrix normalized_norm;
};

CanonicalSubmodules canonical_submodules(const GModule& m, const Subgroup& h);
CanonicalSubmodules canonical_submodules(const GModule& m);

Lattice fixed_lattice(const GModule& m, const Subgroup& h);
Lattice augmentation_lattice(const GModule& m, const Subgroup& h);

// Elements x_1..x_k such that {g x_j} is a Z-basis of the lattice (the
// module is induced from the trivial subgroup).
struct InducedWitness {
  std::vector<RatVector> generators;
};

bool is_induced_basis(const GModule& m, const std::vector<RatVector>& gens);
// Throws KernelNotInduced when no witness is found and
// RankTooLargeForSearch when a search would be needed above rank 12.
InducedWitness induced_witness(const GModule& m, const std::optional<std::vector<RatVector>>& hint = std::nullopt);

// Equivariant homomorphisms X -> M of torsion-free modules.
struct HomLattice {
  Lattice coords;                 // row-major coordinate matrices (rank M x rank X)
  std::vector<RatMatrix> maps;    // basis as ambient matrices dim M x dim X
  std::size_t rank() const { return coords.rank(); }
};

HomLattice equivariant_hom_lattice(const GModule& x, const GModule& m);

// Given f : X -> Q and a surjection p : P -> Q with induced kernel, an
// equivariant g : X -> P with p g = f. X and P must be torsion-free.
GMap equivariant_lift(const GMap& f, const GMap& p);

// Minimal generating set of a subgroup (greedy by element index).
std::vector<int> subgroup_generators(const FiniteGroup& g, const Subgroup& h);

}  // namespace galmod
