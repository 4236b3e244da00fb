#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "prodquot/groups.hpp"

namespace prodquot {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kMaxBranchPoints = 8;

/// Branching indices m1 <= ... <= mr, each >= 2. Kept sorted.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> indices);

  std::size_t size() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t i) const { return indices_[i]; }

  /// Multiplicity notation, e.g. "(2^5)" or "(2,5,5)".
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<int> indices_;
};

/// A quotient curve C/G = P^1 with its branching and genus.
struct CurveDatum {
  Signature signature;
  int genus = 0;
  std::int64_t group_order = 0;
};

/// -2 + sum_j (1 - 1/m_j), exact.
Rational beta(const Signature& s);

/// Genus g with 2(g - 1) = n * beta(s). Throws InadmissibleSignature when
/// beta <= 0 or the solution is not an integer >= 2.
int genus_from(const Signature& s, std::int64_t group_order);

/// All signatures with 3 <= r <= 8, indices drawn from element orders of g,
/// beta > 0, 2/beta integral and an integral genus >= 2. Sorted ascending.
std::vector<Signature> admissible_signatures(const FiniteGroup& g);

struct SignaturePair {
  CurveDatum first;
  CurveDatum second;
  friend bool operator==(const SignaturePair& a, const SignaturePair& b) {
    return a.first.signature == b.first.signature && a.second.signature == b.second.signature;
  }
};

/// Unordered pairs {s1 <= s2} of admissible signatures with (g1-1)(g2-1) = |G|.
std::vector<SignaturePair> admissible_signature_pairs(const FiniteGroup& g);

/// |G| <= 4(g - 1) unless (s, n) = ((2,2,3,3), 6). Throws MalformedInput
/// unless 3 <= r <= 8.
bool order_bound_check(const Signature& s, std::int64_t group_order, int genus);

}  // namespace prodquot
