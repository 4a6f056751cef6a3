#pragma once

#include <optional>
#include <vector>

#include "galmod/tn/local.hpp"
#include "galmod/sites/site.hpp"

namespace galmod {

// Families indexed by the places of a site, one vector of Y (x) Q per place.
// The finite-level quotient Ybar is replaced by Q Y throughout:
//   iso: lambda_v in Y / I_v Y with N(sum lambda_v) = 0;
//   mid: an iso family with mu_v in Q Y, sum mu_v = 0, N_v(lambda_v - mu_v) = 0;
//   rig: lambda_v torsion in Q Y / I_v Y with sum lambda_v in Y.
class SemiAdelic {
 public:
  SemiAdelic(TorusData t, const GlobalSite& site);

  std::size_t places() const { return local_.size(); }
  const LocalTN& global_torus() const { return global_; }
  const LocalTN& local_torus(int place) const { return local_.at(place); }

  bool iso_member(const std::vector<RatVector>& lambda) const;
  bool mid_member(const std::vector<RatVector>& lambda, const std::vector<RatVector>& mu) const;
  bool rig_member(const std::vector<RatVector>& lambda) const;
  // Class of sum lambda_v in Y_Gamma (normal form); requires the sum to lie in Y.
  IntVector iota(const std::vector<RatVector>& lambda) const;
  // Some mu completing an iso family to a mid family, if one exists.
  std::optional<std::vector<RatVector>> mid_preimage(const std::vector<RatVector>& lambda) const;

 private:
  TorusData t_;
  std::vector<Subgroup> decomposition_;
  LocalTN global_;
  std::vector<LocalTN> local_;

  void check_size(const std::vector<RatVector>& f) const;
  RatVector total(const std::vector<RatVector>& f) const;
};

}  // namespace galmod
