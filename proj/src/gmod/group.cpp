#include "galmod/gmod/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "galmod/error.hpp"

namespace galmod {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty group table");
  if (static_cast<int>(labels_.size()) != n) throw Error(ErrorKind::InvalidArgument, "label count mismatch");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) throw Error(ErrorKind::InvalidArgument, "table is not square");
    if (table_[0][a] != a || table_[a][0] != a) throw Error(ErrorKind::InvalidArgument, "element 0 is not the identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table_[a][b];
      if (ab < 0 || ab >= n) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
      for (int c = 0; c < n; ++c)
        if (table_[ab][c] != table_[a][table_[b][c]]) throw Error(ErrorKind::InvalidArgument, "table is not associative");
    }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0 || table_[inv_[a]][a] != 0) throw Error(ErrorKind::InvalidArgument, "element without inverse");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n) throw Error(ErrorKind::InvalidArgument, "duplicate element labels");

  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return element_order(a) > element_order(b); });
  Subgroup cur = {0};
  for (int a : by_order) {
    if (static_cast<int>(cur.size()) == n) break;
    if (std::binary_search(cur.begin(), cur.end(), a)) continue;
    gens_.push_back(a);
    cur = generated(gens_);
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    labels[a] = a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a);
  }
  return FiniteGroup("C" + std::to_string(n), std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroup(a.name() + "x" + b.name(), std::move(t), std::move(labels));
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    std::string cyc = "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      cyc += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += cyc + ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generating permutations");
  const std::size_t deg = gens.front().size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : gens) {
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    if (g.size() != deg || s != id) throw Error(ErrorKind::InvalidArgument, "not a permutation");
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  std::set<std::vector<int>> elems = {id};
  std::vector<std::vector<int>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  const int n = static_cast<int>(list.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = cycle_notation(list[a]);
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(list[a], list[b]));
  }
  return FiniteGroup(std::move(name), std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<int> swap12(n), cyc(n);
  std::iota(swap12.begin(), swap12.end(), 0);
  if (n >= 2) std::swap(swap12[0], swap12[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return from_permutations("S" + std::to_string(n), {swap12, cyc});
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int a = 0; a < order(); ++a)
    if (labels_[a] == label) return a;
  throw Error(ErrorKind::UnknownGroupElement, "no element labelled '" + label + "' in " + name_, label);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (s.empty() || !s.count(0)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    for (int b : s)
      if (!s.count(mul(a, inv(b)))) return false;
  }
  return true;
}

Subgroup FiniteGroup::check_subgroup(std::vector<int> elems) const {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(elems)) throw Error(ErrorKind::NotASubgroup, "subset is not a subgroup of " + name_);
  return elems;
}

Subgroup FiniteGroup::generated(const std::vector<int>& gens) const {
  std::set<int> s = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        if (g < 0 || g >= order()) throw Error(ErrorKind::UnknownGroupElement, "element index out of range");
        int y = mul(g, x);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(s.begin(), s.end());
}

Subgroup FiniteGroup::whole() const {
  Subgroup s(order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::vector<Subgroup> FiniteGroup::all_subgroups() const {
  std::set<Subgroup> found = {trivial()};
  std::vector<Subgroup> frontier = {trivial()};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier)
      for (int g = 0; g < order(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        Subgroup k = generated(gens);
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Subgroup FiniteGroup::conjugate(int g, const Subgroup& h) const {
  Subgroup c;
  for (int x : h) c.push_back(conj(g, x));
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Subgroup> FiniteGroup::conjugacy_class(const Subgroup& h) const {
  std::set<Subgroup> s;
  for (int g = 0; g < order(); ++g) s.insert(conjugate(g, h));
  return std::vector<Subgroup>(s.begin(), s.end());
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> c;
  for (int x = 0; x < order(); ++x)
    if (mul(x, g) == mul(g, x)) c.push_back(x);
  return c;
}

bool FiniteGroup::is_cyclic_subgroup(const Subgroup& h) const {
  for (int x : h)
    if (element_order(x) == static_cast<int>(h.size())) return true;
  return false;
}

std::vector<std::vector<int>> FiniteGroup::left_cosets(const Subgroup& h) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(order(), false);
  for (int g = 0; g < order(); ++g) {
    if (used[g]) continue;
    std::vector<int> c;
    for (int x : h) c.push_back(mul(g, x));
    std::sort(c.begin(), c.end());
    for (int x : c) used[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::right_cosets(const Subgroup& h) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(order(), false);
  for (int g = 0; g < order(); ++g) {
    if (used[g]) continue;
    std::vector<int> c;
    for (int x : h) c.push_back(mul(x, g));
    std::sort(c.begin(), c.end());
    for (int x : c) used[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

FiniteGroup::Restricted FiniteGroup::restrict_to(const Subgroup& h) const {
  Subgroup s = check_subgroup(h);
  const int n = static_cast<int>(s.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[s[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = label(s[i]);
    for (int j = 0; j < n; ++j) t[i][j] = local.at(mul(s[i], s[j]));
  }
  std::string nm = name_ + "|" + subgroup_label(*this, s);
  return {std::make_shared<FiniteGroup>(nm, std::move(t), std::move(labels)), s};
}

bool FiniteGroup::is_homomorphism(const FiniteGroup& target, const std::vector<int>& map) const {
  if (static_cast<int>(map.size()) != order()) return false;
  for (int m : map)
    if (m < 0 || m >= target.order()) return false;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (map[mul(a, b)] != target.mul(map[a], map[b])) return false;
  return true;
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << g.label(h[i]);
  os << "}";
  return os.str();
}

}  // namespace galmod
