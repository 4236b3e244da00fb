#pragma once

#include <functional>
#include <span>
#include <vector>

#include "prodquot/groups.hpp"
#include "prodquot/signatures.hpp"

namespace prodquot {

/// Ordered tuple (a1, ..., ar) of elements of a group. Whether it is a
/// spherical system of generators (product 1, generating) is checked by the
/// free functions below, not on construction: braid moves and fixtures
/// produce tuples whose order sequence is not sorted.
class SphericalSystem {
 public:
  SphericalSystem(GroupPtr group, std::vector<Elem> tuple);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::span<const Elem> tuple() const { return tuple_; }
  std::size_t size() const { return tuple_.size(); }
  Elem operator[](std::size_t i) const { return tuple_[i]; }
  /// Sorted multiset of the element orders.
  Signature signature() const;
  std::vector<std::string> labels() const;

  friend bool operator==(const SphericalSystem& a, const SphericalSystem& b) { return a.tuple_ == b.tuple_; }
  friend auto operator<=>(const SphericalSystem& a, const SphericalSystem& b) { return a.tuple_ <=> b.tuple_; }

 private:
  GroupPtr group_;
  std::vector<Elem> tuple_;
};

Elem tuple_product(const FiniteGroup& g, std::span<const Elem> tuple);
bool product_is_identity(const SphericalSystem& sys);
bool generates(const SphericalSystem& sys);
/// Element orders equal the sorted signature position by position.
bool has_orders(const SphericalSystem& sys, const Signature& s);
bool is_spherical_system(const SphericalSystem& sys, const Signature& s);

/// Calls visit for every ordered tuple with orders m1..mr, product 1, that
/// generates g, in lexicographic order of element indices.
void for_each_sgs(const FiniteGroup& g, const Signature& s,
                  const std::function<void(std::span<const Elem>)>& visit);
std::vector<SphericalSystem> enumerate_sgs(const GroupPtr& g, const Signature& s);

/// Union of the conjugates of the cyclic subgroups <a_j>.
ElementSet stabilizer_set(const FiniteGroup& g, std::span<const Elem> tuple);
ElementSet stabilizer_set(const SphericalSystem& sys);

/// True iff the stabilizer sets meet only in the identity.
bool acts_freely(const SphericalSystem& first, const SphericalSystem& second);

/// An unordered pair of spherical systems on one group acting freely on C1 x C2.
struct UnmixedStructure {
  GroupPtr group;
  SphericalSystem first;
  SphericalSystem second;
  CurveDatum curve_first;
  CurveDatum curve_second;
};

/// Throws ActionNotFree, GroupMismatch, or Inconsistency when the product
/// formula (g1 - 1)(g2 - 1) = |G| fails.
UnmixedStructure build_structure(const SphericalSystem& first, const SphericalSystem& second);

}  // namespace prodquot
