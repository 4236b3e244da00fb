#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prodquot/groups.hpp"
#include "prodquot/sgs.hpp"
#include "prodquot/signatures.hpp"

namespace prodquot {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;
inline constexpr std::size_t kDefaultMaxOrder = 100;

/// Hurwitz move sigma_i on positions (i, i+1), 0-based, i + 1 < r:
///   direction +1: (a, b) -> (a b a^-1, a)
///   direction -1: (a, b) -> (b, b^-1 a b)
SphericalSystem braid_move(const SphericalSystem& sys, std::size_t i, int direction);

/// Closure of {sys} under all braid moves, sorted. Throws SizeCapExceeded
/// when the orbit grows beyond cap.
std::vector<SphericalSystem> hurwitz_orbit(const SphericalSystem& sys, std::size_t cap = kDefaultOrbitCap);

/// Least tuple in the Hurwitz orbit of `tuple` whose element orders are non-decreasing.
/// Abelian groups take the shortcut of sorting each block of equal orders.
std::vector<Elem> hurwitz_canonical(const FiniteGroup& g, std::span<const Elem> tuple,
                                    std::size_t cap = kDefaultOrbitCap);

/// Lexicographically least structure equivalent to st under Hurwitz moves on
/// each side and simultaneous automorphisms. With swap_factors, and equal
/// signatures, the two sides may also be exchanged. For distinct signatures
/// the side with the smaller signature comes first.
///
/// The default relation (no swap) is Aut(G) x B_r1 x B_r2; it separates the
/// two Beauville structures on (Z/5)^2, which the swap identifies.
UnmixedStructure canonical_pair(const UnmixedStructure& st, std::span<const Automorphism> auts,
                                std::size_t orbit_cap = kDefaultOrbitCap, bool swap_factors = false);
UnmixedStructure canonical_pair(const UnmixedStructure& st, bool swap_factors = false);

/// (r1 - 3) + (r2 - 3)
int moduli_dimension(const UnmixedStructure& st);

/// One deformation class of structures on a group.
struct EquivClass {
  std::string group_spec;
  Signature signature_first;
  Signature signature_second;
  UnmixedStructure representative;
  /// Ordered (sys1, sys2) pairs, both with sorted order sequences, in the class.
  std::uint64_t orbit_size = 0;
  int dimension = 0;
  /// One structure per pair of Hurwitz classes met by the class.
  std::vector<UnmixedStructure> members;
};

/// Per signature pair bookkeeping of a classification run.
struct PairSummary {
  SignaturePair pair;
  std::uint64_t systems_first = 0;
  std::uint64_t systems_second = 0;
  /// Ordered (sys1, sys2) pairs passing the freeness test.
  std::uint64_t raw_free = 0;
  std::size_t classes = 0;
};

struct GroupClassification {
  GroupPtr group;
  std::vector<PairSummary> pairs;
  std::vector<EquivClass> classes;
};

struct ClassifyOptions {
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  std::size_t orbit_cap = kDefaultOrbitCap;
  bool swap_factors = false;
};

GroupClassification classify_group(const GroupPtr& g, const ClassifyOptions& options = {});

/// Divisibility chains d1 | ... | dk, di >= 2, with product n.
std::vector<AbelianType> abelian_types_of_order(std::int64_t n);

struct ClassificationTable {
  std::size_t max_order = 0;
  std::size_t groups_examined = 0;
  /// Groups with at least one class, by order then invariant factors.
  std::vector<GroupClassification> groups;
};

/// Runs classify_group over every abelian group of order 2..max_order on
/// `jobs` worker threads. The result does not depend on `jobs`.
ClassificationTable classify_abelian_up_to(std::size_t max_order, std::size_t jobs = 1,
                                           std::size_t cap = kDefaultMaxOrder, bool swap_factors = false);

}  // namespace prodquot
