#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prodquot {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation [this | other].
  IntMatrix hcat(const IntMatrix& other) const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
BigInt determinant(const IntMatrix& a);

/// Invariant factors d1 | d2 | ... of a finite abelian group, factors equal
/// to 1 dropped. The trivial group is the empty sequence.
struct FiniteAbelianStructure {
  std::vector<BigInt> invariant_factors;

  BigInt order() const;
  BigInt exponent() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  std::vector<std::int64_t> as_int64() const;
  /// "(Z/2)^2 + Z/4" style rendering; "0" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const FiniteAbelianStructure&, const FiniteAbelianStructure&) = default;
};

/// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
/// The inverses of U and V are carried along.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;

  std::size_t rank() const;
  std::vector<BigInt> diagonal() const;
};

/// Pivots on the smallest nonzero |entry| of the remaining block, ties broken
/// by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as columns) of {v in Z^cols : A v = 0 mod moduli[k] in row k}.
/// Requires A.rows() == moduli.size() and every modulus >= 1.
IntMatrix kernel_lattice_mod(const IntMatrix& a, const std::vector<BigInt>& moduli);

/// Structure of the quotient lattice span(L) / span(R). Throws
/// ContainmentError if R is not inside L and RankError if the quotient is infinite.
FiniteAbelianStructure quotient_structure(const IntMatrix& lattice, const IntMatrix& relations);

}  // namespace prodquot
