#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mlfact {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  static IntMatrix column(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Int> col(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  /// Rows [r0, r1) as a new matrix.
  IntMatrix row_slice(std::size_t r0, std::size_t r1) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row i += t * row j
  void add_row(std::size_t i, std::size_t j, const Int& t);
  /// col i += t * col j
  void add_col(std::size_t i, std::size_t j, const Int& t);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const = default;

  std::vector<Int> apply(const std::vector<Int>& v) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Horizontal concatenation [a | b].
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// Vertical concatenation [a ; b].
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal [a 0 ; 0 b].
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product a ⊗ b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form S = U * M * V with U, V unimodular, S diagonal with
/// non-negative entries satisfying the divisibility chain d_i | d_{i+1}.
/// The inverses of the transforms are tracked alongside.
struct SmithResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  IntMatrix Uinv;
  IntMatrix Vinv;
  std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

/// Exact determinant (Bareiss). Requires a square matrix.
Int determinant(const IntMatrix& M);

/// Columns spanning the integer kernel {x : Mx = 0}.
IntMatrix kernel_lattice(const IntMatrix& M);

/// Solve Mx = v over the integers; nullopt when unsolvable.
std::optional<std::vector<Int>> solve(const IntMatrix& M,
                                      const std::vector<Int>& v);

/// Does v lie in the column lattice of L?
bool lattice_contains(const IntMatrix& L, const std::vector<Int>& v);

/// Solve Mx ≡ v modulo the column lattice of R (returns the x part).
std::optional<std::vector<Int>> solve_mod(const IntMatrix& M,
                                          const IntMatrix& R,
                                          const std::vector<Int>& v);

}  // namespace mlfact
