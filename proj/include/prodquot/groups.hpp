#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prodquot {

/// Index of a group element. Index 0 is always the identity.
using Elem = std::uint32_t;

/// Subset of the elements of a group, stored as a bitset over indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const { return universe_; }
  void insert(Elem x);
  void erase(Elem x);
  bool contains(Elem x) const;
  std::size_t size() const;
  bool empty() const;
  std::vector<Elem> elements() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.words_ <=> b.words_;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Invariant-factor type d1 | d2 | ... | dk of a finite abelian group.
struct AbelianType {
  std::vector<std::int64_t> invariant_factors;

  std::int64_t order() const;
  /// Throws MalformedInput unless every factor is >= 2 and divides the next.
  void validate() const;
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Bijection of {0, ..., degree-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  /// Cycles on 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);
  /// Parses cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// Cycle notation on 1-based points, fixed points omitted; "()" for the identity.
  std::string to_string() const;

  /// Composition of maps: (p * q)(i) = p(q(i)), so q is applied first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

enum class Backend { abelian, permutation };

/// A finite group given by its Cayley table. Immutable after construction.
///
/// Abelian groups index their elements by the lexicographic order of the
/// coordinate tuples (x1, ..., xk), 0 <= xi < di. Permutation groups index
/// elements breadth-first by word length in the generators, each layer sorted
/// by image sequence.
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  Backend backend() const { return backend_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem pow(Elem a, std::int64_t n) const;
  std::uint32_t element_order(Elem a) const { return orders_[a]; }
  std::span<const std::uint32_t> element_orders() const { return orders_; }
  bool is_abelian() const { return abelian_; }
  /// The generators the group was built from (basis vectors or permutation generators).
  std::span<const Elem> generators() const { return generators_; }
  std::uint64_t exponent() const;

  const std::string& label(Elem a) const { return labels_[a]; }
  /// Looks up an element by a label in the backend's notation. Whitespace is ignored.
  std::optional<Elem> find(std::string_view label) const;
  /// Group-spec string, e.g. "ab:2,2,2" or "perm:5:(1 2 3),(3 4 5)".
  const std::string& spec() const { return spec_; }

  /// Abelian backend only.
  const AbelianType& abelian_type() const;
  std::span<const std::int64_t> coordinates(Elem a) const;
  /// Permutation backend only.
  const Permutation& permutation(Elem a) const;

  friend FiniteGroup make_abelian(const AbelianType& type);
  friend FiniteGroup make_permutation_group(std::span<const Permutation> gens,
                                            std::size_t degree, std::size_t cap);

 private:
  FiniteGroup() = default;
  void finish();

  Backend backend_ = Backend::abelian;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::string spec_;
  bool abelian_ = true;

  AbelianType type_;
  std::vector<std::int64_t> coords_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Elements are tuples with componentwise addition modulo the invariant factors.
FiniteGroup make_abelian(const AbelianType& type);

inline constexpr std::size_t kDefaultClosureCap = 10000;
inline constexpr std::size_t kDefaultAutomorphismCap = 64;

/// Closure of the generators under composition. All generators must have the
/// given degree; an empty generator list gives the trivial group.
FiniteGroup make_permutation_group(std::span<const Permutation> gens, std::size_t degree,
                                   std::size_t cap = kDefaultClosureCap);

/// Parses "ab:d1,d2,..." or "perm:n:(c)(c)...,(c)...".
FiniteGroup parse_group_spec(std::string_view spec, std::size_t cap = kDefaultClosureCap);

std::uint32_t element_order(const FiniteGroup& g, Elem x);
ElementSet cyclic_subgroup(const FiniteGroup& g, Elem x);
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& s);
ElementSet conjugacy_closure(const FiniteGroup& g, const ElementSet& s);
bool is_generating(const FiniteGroup& g, const ElementSet& s);
bool is_generating(const FiniteGroup& g, std::span<const Elem> elems);

/// Short generating set picked greedily among elements of largest order.
std::vector<Elem> small_generating_set(const FiniteGroup& g);

/// An automorphism as the image of every element index.
using Automorphism = std::vector<Elem>;

/// Every automorphism of g, by backtracking over images of a fixed
/// generating set. Output is sorted lexicographically.
std::vector<Automorphism> automorphisms(const FiniteGroup& g,
                                        std::size_t cap = kDefaultAutomorphismCap);

ElementSet image(const Automorphism& phi, const ElementSet& s);

}  // namespace prodquot
