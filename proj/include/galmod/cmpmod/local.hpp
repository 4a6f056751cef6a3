#pragma once

#include <vector>

#include "galmod/gmod/module.hpp"
#include "galmod/sites/site.hpp"

namespace galmod {

// Local modules for a finite group and modulus N, on the ambient Q^Gamma:
//   M^iso = Z (ambient Q^1),
//   M^mid = {f : Gamma -> (1/N)Z, sum f in Z},
//   M^rig = M^mid / Z[Gamma],
// with Gamma acting by (t f)(s) = f(t^-1 s).
struct LocalLevel {
  GroupPtr group;
  Int modulus;
  ModulePtr iso, mid, rig;
  GMap c_iso, c_rig;

  int order() const { return group->order(); }
};

LocalLevel build_local(GroupPtr g, const Int& n);

// {delta_1} together with (1/N)(delta_s - delta_1) for s != 1.
std::vector<RatVector> local_mid_basis(const FiniteGroup& g, const Int& n);

// f(s) = |Gamma|^-1 f^iso; throws DivisibilityRequired unless |Gamma| divides N.
GMap s_iso_local(const LocalLevel& level);

// Entries reduced into [0, 1).
RatVector reduce_mod_one(const RatVector& x);

// Lift with entries the [0,1) representatives of -f^rig.
RatVector lift_crig_local(const LocalLevel& level, const RatVector& f_rig);

// Inflation from (Gamma_E, N) to (Gamma_K, M) along p : Gamma_K -> Gamma_E.
// Sources are the E-modules inflated to Gamma_K.
struct InflationMaps {
  GMap iso, mid, rig;
};

InflationMaps inflate_local(const LocalLevel& lower, const LocalLevel& upper, const GroupSurjection& p);

// Dual of M^mid: N Z[Gamma] + Z inside Z[Gamma] with the pairing sum x(s) y(s).
struct DualMid {
  Lattice lattice;
  RatMatrix gram;   // pairing of the M^mid basis against the dual basis
  Int gram_det;
  std::vector<LatticeComplex> sequences;  // the four dual sequences, in order
  RatVector norm_of_delta_e;
};

DualMid dual_mid(const LocalLevel& level);
// Transpose of the mid inflation: y^E(s) = sum over t -> s of y^K(t).
RatMatrix dual_inflation(const GroupSurjection& p);
// Image of y -> sum y(s) on N Z[Gamma] + Z.
Lattice dual_norm_image(const LocalLevel& level);

// M^o = kernel of c^iso. For M = |Gamma| N the inclusion M^o_N -> M^o_M is
// multiplication by |Gamma| followed by division by |Gamma|; the second
// factor is returned and is checked to map M^o_N into M^o_M.
struct Factorization {
  Lattice source, target;
  Int first_factor;
  RatMatrix second_factor;
  RatMatrix composite;
  bool integral = false;  // second factor maps source into target
  bool agrees = false;    // second * first == composite on the source
};

Factorization local_factorization(const LocalLevel& level);

}  // namespace galmod
