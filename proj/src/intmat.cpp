#include "mlfact/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace mlfact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (const auto& x : r) entries_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::row_slice(std::size_t r0, std::size_t r1) const {
  IntMatrix m(r1 - r0, cols_);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i - r0, j) = at(i, j);
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& t) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += t * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& t) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += t * at(k, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("IntMatrix multiply: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix add: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i)
    c.entries_[i] += b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix subtract: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i)
    c.entries_[i] -= b.entries_[i];
  return c;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix c = *this;
  for (auto& x : c.entries_) x = -x;
  return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntMatrix apply: size mismatch");
  std::vector<Int> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack: row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack: column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return c;
}

namespace {

// Elementary row/column operations on S, mirrored into the transforms and
// their tracked inverses. Row op E acts as S <- E S, U <- E U,
// Uinv <- Uinv E^{-1}; column op acts dually on V.
struct SnfWork {
  IntMatrix S, U, V, Uinv, Vinv;

  void row_swap(std::size_t i, std::size_t j) {
    S.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    S.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    S.negate_row(i);
    U.negate_row(i);
    Uinv.negate_col(i);
  }
  void row_add(std::size_t i, std::size_t j, const Int& t) {
    S.add_row(i, j, t);
    U.add_row(i, j, t);
    Uinv.add_col(j, i, -t);
  }
  void col_add(std::size_t i, std::size_t j, const Int& t) {
    S.add_col(i, j, t);
    V.add_col(i, j, t);
    Vinv.add_row(j, i, -t);
  }
};

Int abs_int(const Int& x) { return x < 0 ? -x : x; }

// Floor-free symmetric quotient: q minimising |a - q*b|.
Int round_quot(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (abs_int(r) * 2 > abs_int(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SnfWork w{M, IntMatrix::identity(m), IntMatrix::identity(n),
            IntMatrix::identity(m), IntMatrix::identity(n)};
  std::size_t t = 0;
  const std::size_t bound = std::min(m, n);
  while (t < bound) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int a = abs_int(w.S.at(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (w.S.at(i, t) == 0) continue;
      Int q = round_quot(w.S.at(i, t), w.S.at(t, t));
      w.row_add(i, t, -q);
      if (w.S.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (w.S.at(t, j) == 0) continue;
      Int q = round_quot(w.S.at(t, j), w.S.at(t, t));
      w.col_add(j, t, -q);
      if (w.S.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank, iterate

    // enforce that the pivot divides the remaining submatrix
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (w.S.at(i, j) % w.S.at(t, t) != 0) {
          w.row_add(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;

    if (w.S.at(t, t) < 0) w.row_negate(t);
    ++t;
  }
  SmithResult r{std::move(w.S), std::move(w.U), std::move(w.V),
                std::move(w.Uinv), std::move(w.Vinv), 0};
  for (std::size_t i = 0; i < bound; ++i)
    if (r.S.at(i, i) != 0) ++r.rank;
  return r;
}

Int determinant(const IntMatrix& M) {
  if (!M.is_square()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix a = M;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix kernel_lattice(const IntMatrix& M) {
  SmithResult r = smith_normal_form(M);
  const std::size_t n = M.cols();
  IntMatrix basis(n, n - r.rank);
  for (std::size_t j = r.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      basis.at(i, j - r.rank) = r.V.at(i, j);
  return basis;
}

std::optional<std::vector<Int>> solve(const IntMatrix& M,
                                      const std::vector<Int>& v) {
  if (v.size() != M.rows())
    throw std::invalid_argument("solve: size mismatch");
  SmithResult r = smith_normal_form(M);
  std::vector<Int> y = r.U.apply(v);
  std::vector<Int> q(M.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r.rank) {
      const Int& d = r.S.at(i, i);
      if (y[i] % d != 0) return std::nullopt;
      q[i] = y[i] / d;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return r.V.apply(q);
}

bool lattice_contains(const IntMatrix& L, const std::vector<Int>& v) {
  return solve(L, v).has_value();
}

std::optional<std::vector<Int>> solve_mod(const IntMatrix& M,
                                          const IntMatrix& R,
                                          const std::vector<Int>& v) {
  auto x = solve(hstack(M, R), v);
  if (!x) return std::nullopt;
  x->resize(M.cols());
  return x;
}

}  // namespace mlfact
