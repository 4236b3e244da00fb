#pragma once

#include <cstdint>
#include <vector>

#include "prodquot/intlinalg.hpp"
#include "prodquot/sgs.hpp"

namespace prodquot {

/// Z^r / <m_j e_j, e_1 + ... + e_r>, the abelianized orbifold fundamental
/// group of C -> C/G = P^1, with e_j sent to a_j in G.
struct OrbifoldAbelianization {
  std::size_t rank = 0;
  /// r x (r + 1): columns m_j e_j, then the all-ones column.
  IntMatrix relations;
  std::vector<Elem> images;

  FiniteAbelianStructure structure() const;
};

OrbifoldAbelianization orbifold_abelianization(const SphericalSystem& sys);

/// An abelian group written additively as a sum of Z/d_i with coordinates
/// for every element.
struct AbelianCoordinates {
  std::vector<BigInt> moduli;
  std::vector<std::vector<BigInt>> coords;
};

/// Coordinates for either backend. Permutation groups are reduced to
/// invariant factors by the Smith form of their relations among a small
/// generating set. Throws UnsupportedHypothesis for non-abelian groups.
AbelianCoordinates abelian_coordinates(const FiniteGroup& g);

/// H_1(S, Z) = ker(G_1 x G_2 -> G), (x, y) -> phi_1(x) - phi_2(y).
/// Throws UnsupportedHypothesis unless G is abelian.
FiniteAbelianStructure h1_of_surface(const UnmixedStructure& st);

struct SurfaceInvariants {
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t pg = 0;
  std::int64_t q = 0;
  std::int64_t e = 0;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// chi = (g1-1)(g2-1)/|G|, K^2 = 8 chi, e = 12 chi - K^2, q = 0, pg = chi - 1.
SurfaceInvariants surface_invariants(const UnmixedStructure& st);

}  // namespace prodquot
