#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace galmod {

using Subgroup = std::vector<int>;  // sorted element indices

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels);

  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Closure of permutations of {0..n-1}; elements ordered by image tuple,
  // labelled in 1-based cycle notation.
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& gens);
  static FiniteGroup symmetric(int n);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  int element_order(int a) const;
  const std::string& label(int a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws UnknownGroupElement
  // A small generating set (greedy over element order).
  const std::vector<int>& generators() const { return gens_; }

  bool is_subgroup(const std::vector<int>& elems) const;
  Subgroup check_subgroup(std::vector<int> elems) const;  // sorts; throws NotASubgroup
  Subgroup generated(const std::vector<int>& gens) const;
  Subgroup whole() const;
  Subgroup trivial() const { return {0}; }
  std::vector<Subgroup> all_subgroups() const;  // ordered by size, then elements
  Subgroup conjugate(int g, const Subgroup& h) const;
  std::vector<Subgroup> conjugacy_class(const Subgroup& h) const;  // sorted, distinct
  std::vector<int> centralizer(int g) const;
  bool is_cyclic_subgroup(const Subgroup& h) const;

  // Left cosets gH, each sorted; ordered by least element.
  std::vector<std::vector<int>> left_cosets(const Subgroup& h) const;
  // Right cosets Hg, ordered by least element.
  std::vector<std::vector<int>> right_cosets(const Subgroup& h) const;

  // Subgroup as a group in its own right; embedding[i] is the element of this group.
  struct Restricted;
  Restricted restrict_to(const Subgroup& h) const;

  bool is_homomorphism(const FiniteGroup& target, const std::vector<int>& map) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::vector<int> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup::Restricted {
  GroupPtr group;
  std::vector<int> embedding;
};

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h);

}  // namespace galmod
