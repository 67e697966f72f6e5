#ifndef GQ_PERM_HPP
#define GQ_PERM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gq/common.hpp"

namespace gq {

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);

// Finite permutation group given by generators, with a base and strong
// generating set computed on construction (deterministic Schreier-Sims).
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(int degree) : degree_(degree) {}
  // base_hint: points forced to the front of the base, in order.
  PermGroup(int degree, std::vector<Perm> gens, std::vector<int> base_hint = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  unsigned long long order() const { return order_; }
  bool trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;

  std::vector<int> orbit_of(int p) const;
  std::vector<std::vector<int>> orbits() const;
  bool transitive_on(const std::vector<int>& set) const;

  // Subgroup fixing each listed point.
  PermGroup pointwise_stabilizer(const std::vector<int>& pts) const;
  // Subgroup fixing the set (as a set); enumerates elements, so the order must
  // stay within cap (BudgetExceeded otherwise).
  PermGroup setwise_stabilizer(const std::vector<int>& set, unsigned long long cap = 4000000) const;

  // All elements; BudgetExceeded if order exceeds cap.
  std::vector<Perm> elements(unsigned long long cap = 4000000) const;

  // Restriction of the action to an invariant subset (must be a union of
  // orbits of this group). Returns the induced group and the kernel order.
  std::pair<PermGroup, unsigned long long> induced_action(const std::vector<int>& subset) const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  unsigned long long order_ = 1;

  // BSGS
  std::vector<int> base_;
  std::vector<std::vector<Perm>> strong_;        // strong generators per level
  std::vector<std::vector<int>> orbit_;          // orbit of base_[i] at level i
  std::vector<std::vector<int>> where_;          // point -> index into orbit_ or -1
  std::vector<std::vector<Perm>> transversal_;   // u with u(base) = point, by orbit index

  void build(std::vector<int> base_hint);
  bool sift(Perm g, Perm* residue) const;
};

// Conjugating bijection between two permutation groups of equal degree, or
// nullopt. Backtracking with orbit-profile pruning; exact.
std::optional<Perm> perm_equivalent(const PermGroup& a, const PermGroup& b);

}  // namespace gq

#endif
