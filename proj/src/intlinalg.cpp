#include "prodquot/intlinalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "prodquot/errors.hpp"

namespace prodquot {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MalformedInput("IntMatrix: ragged initializer");
    for (auto v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw MalformedInput("IntMatrix::hcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw MalformedInput("IntMatrix: dimension mismatch in product");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw MalformedInput("determinant: matrix is not square");
  const auto n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ------------------------------------------------------ FiniteAbelianStructure

BigInt FiniteAbelianStructure::order() const {
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

BigInt FiniteAbelianStructure::exponent() const {
  return invariant_factors.empty() ? BigInt(1) : invariant_factors.back();
}

std::vector<std::int64_t> FiniteAbelianStructure::as_int64() const {
  std::vector<std::int64_t> out;
  for (const auto& d : invariant_factors) out.push_back(d.convert_to<std::int64_t>());
  return out;
}

std::string FiniteAbelianStructure::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < invariant_factors.size()) {
    std::size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    os << (first ? "" : " + ");
    if (j - i > 1)
      os << "(Z/" << invariant_factors[i] << ")^" << (j - i);
    else
      os << "Z/" << invariant_factors[i];
    first = false;
    i = j;
  }
  return os.str();
}

// ------------------------------------------------------------------------ SNF

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Elementary operations on D, mirrored on U, U^-1 (rows) and V, V^-1 (columns)
// so that A = U D V holds throughout.
class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a)
      : m_(a.rows()),
        n_(a.cols()),
        f_{IntMatrix::identity(m_), a, IntMatrix::identity(n_), IntMatrix::identity(m_), IntMatrix::identity(n_)} {}

  SmithForm run() {
    auto& d = f_.D;
    const auto steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      for (;;) {
        auto pivot = smallest(t);
        if (!pivot) return finish();
        move_to(t, *pivot);
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (d(i, t) == 0) continue;
          BigInt q = d(i, t) / d(t, t);
          row_add(i, t, -q);
          if (d(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (d(t, j) == 0) continue;
          BigInt q = d(t, j) / d(t, t);
          col_add(j, t, -q);
          if (d(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Divisibility: fold any offending row into row t and go again.
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < m_ && !bad; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (d(i, j) % d(t, t) != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        row_add(t, *bad, 1);
      }
      if (d(t, t) < 0) row_negate(t);
    }
    return finish();
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        const auto& v = f_.D(i, j);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (!best || av < best_abs) {
          best = {i, j};
          best_abs = av;
        }
      }
    return best;
  }

  void move_to(std::size_t t, std::pair<std::size_t, std::size_t> at) {
    if (at.first != t) row_swap(t, at.first);
    if (at.second != t) col_swap(t, at.second);
  }

  // row_i += k * row_j on D; U <- U (I - k E_ij); U^-1 <- (I + k E_ij) U^-1.
  void row_add(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < n_; ++c) f_.D(i, c) += k * f_.D(j, c);
    for (std::size_t r = 0; r < m_; ++r) f_.U(r, j) -= k * f_.U(r, i);
    for (std::size_t c = 0; c < m_; ++c) f_.U_inv(i, c) += k * f_.U_inv(j, c);
  }
  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n_; ++c) std::swap(f_.D(i, c), f_.D(j, c));
    for (std::size_t r = 0; r < m_; ++r) std::swap(f_.U(r, i), f_.U(r, j));
    for (std::size_t c = 0; c < m_; ++c) std::swap(f_.U_inv(i, c), f_.U_inv(j, c));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < n_; ++c) f_.D(i, c) = -f_.D(i, c);
    for (std::size_t r = 0; r < m_; ++r) f_.U(r, i) = -f_.U(r, i);
    for (std::size_t c = 0; c < m_; ++c) f_.U_inv(i, c) = -f_.U_inv(i, c);
  }
  // col_i += k * col_j on D; V <- (I - k E_ji) V; V^-1 <- V^-1 (I + k E_ji).
  void col_add(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < m_; ++r) f_.D(r, i) += k * f_.D(r, j);
    for (std::size_t c = 0; c < n_; ++c) f_.V(j, c) -= k * f_.V(i, c);
    for (std::size_t r = 0; r < n_; ++r) f_.V_inv(r, i) += k * f_.V_inv(r, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m_; ++r) std::swap(f_.D(r, i), f_.D(r, j));
    for (std::size_t c = 0; c < n_; ++c) std::swap(f_.V(i, c), f_.V(j, c));
    for (std::size_t r = 0; r < n_; ++r) std::swap(f_.V_inv(r, i), f_.V_inv(r, j));
  }

  SmithForm finish() { return std::move(f_); }

  std::size_t m_, n_;
  SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

IntMatrix kernel_lattice_mod(const IntMatrix& a, const std::vector<BigInt>& moduli) {
  if (a.rows() != moduli.size()) throw MalformedInput("kernel_lattice_mod: one modulus per row required");
  for (const auto& d : moduli)
    if (d < 1) throw MalformedInput("kernel_lattice_mod: moduli must be >= 1");
  const auto n = a.cols();
  // Integer kernel of [A | diag(d)], projected to the first n coordinates.
  auto aug = a.hcat(IntMatrix::diagonal(moduli));
  auto snf = smith_normal_form(aug);
  const auto rank = snf.rank();
  const auto total = aug.cols();
  IntMatrix gens(n, total - rank);
  for (std::size_t k = rank; k < total; ++k)
    for (std::size_t r = 0; r < n; ++r) gens(r, k - rank) = snf.V_inv(r, k);
  if (gens.cols() == 0) return IntMatrix(n, 0);
  // Basis of the span of the generators: columns of U * D with nonzero d.
  auto span = smith_normal_form(gens);
  const auto basis_rank = span.rank();
  IntMatrix basis(n, basis_rank);
  for (std::size_t k = 0; k < basis_rank; ++k)
    for (std::size_t r = 0; r < n; ++r) basis(r, k) = span.U(r, k) * span.D(k, k);
  return basis;
}

FiniteAbelianStructure quotient_structure(const IntMatrix& lattice, const IntMatrix& relations) {
  if (lattice.rows() != relations.rows()) throw MalformedInput("quotient_structure: ambient dimensions differ");
  auto snf = smith_normal_form(lattice);
  const auto k = snf.rank();
  if (k != lattice.cols()) throw MalformedInput("quotient_structure: lattice generators are not independent");
  // Solve L X = R: with L = U D V, X = V^-1 D^-1 U^-1 R.
  auto y = snf.U_inv * relations;
  IntMatrix z(k, relations.cols());
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t c = 0; c < y.cols(); ++c) {
      if (i >= k) {
        if (y(i, c) != 0) throw ContainmentError("quotient_structure: relation column " + std::to_string(c) + " is not in the lattice");
        continue;
      }
      if (y(i, c) % snf.D(i, i) != 0)
        throw ContainmentError("quotient_structure: relation column " + std::to_string(c) + " is not in the lattice");
      z(i, c) = y(i, c) / snf.D(i, i);
    }
  auto x = snf.V_inv.columns(0, k) * z;  // V^-1 is k x k here since L has k columns
  auto q = smith_normal_form(x);
  if (q.rank() < k) throw RankError("quotient_structure: relations have rank " + std::to_string(q.rank()) +
                                    " < " + std::to_string(k) + ", quotient is infinite");
  FiniteAbelianStructure out;
  for (const auto& d : q.diagonal())
    if (d != 1) out.invariant_factors.push_back(abs(d));
  return out;
}

}  // namespace prodquot
