#include "zhelo/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhelo {

namespace {

// Forward fraction-free elimination (one-step Bareiss with row pivoting and
// column skips). Rows are mpz; divisions by the previous pivot are exact by
// the Sylvester identity. Returns pivot columns; `rows` holds the echelon.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& rows, int cols) {
  std::vector<int> pivot_cols;
  mpz_class prev(1);
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    // pivot choice: fewest nonzeros, then lowest index
    size_t best = rows.size();
    int best_nnz = -1;
    for (size_t i = r; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      int nnz = 0;
      for (int j = c; j < cols; ++j)
        if (sgn(rows[i][j]) != 0) ++nnz;
      if (best == rows.size() || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const mpz_class piv = rows[r][c];
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) {
        // still rescale by piv/prev to keep the Bareiss invariant
        for (int j = c; j < cols; ++j) {
          if (sgn(rows[i][j]) == 0) continue;
          mpz_class t = rows[i][j] * piv;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          rows[i][j] = t;
        }
        continue;
      }
      const mpz_class f = rows[i][c];
      for (int j = c; j < cols; ++j) {
        mpz_class t = rows[i][j] * piv - f * rows[r][j];
        if (sgn(t) != 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = t;
      }
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivot_cols;
}

std::vector<std::vector<mpz_class>> clear_denominators(const Mat& m) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      const mpz_class d = m.at(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> row(m.cols());
    bool nonzero = false;
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& v = m.at(i, j);
      row[j] = v.num() * (l / v.den());
      nonzero = nonzero || sgn(row[j]) != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> Mat::row(int i) const {
  std::vector<Rat> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& w = b.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Mat::apply: dimension mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

int Mat::rank() const {
  auto rows = clear_denominators(*this);
  return static_cast<int>(bareiss_echelon(rows, cols_).size());
}

std::vector<std::vector<Rat>> Mat::nullspace() const {
  auto rows = clear_denominators(*this);
  const std::vector<int> piv = bareiss_echelon(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[f] = Rat(1);
    for (int i = static_cast<int>(piv.size()) - 1; i >= 0; --i) {
      const int pc = piv[i];
      if (pc > f) continue;  // columns right of f are zero except solved pivots
      Rat acc(0);
      for (int j = pc + 1; j < cols_; ++j) {
        if (sgn(rows[i][j]) == 0 || v[j].is_zero()) continue;
        acc += Rat(rows[i][j]) * v[j];
      }
      v[pc] = -acc / Rat(rows[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  return rref_rows(std::move(basis));
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("Mat::solve: dimension mismatch");
  Mat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < rows_; ++i) rows.push_back(aug.row(i));
  auto r = rref_rows(std::move(rows));
  std::vector<Rat> x(cols_, Rat(0));
  std::vector<bool> solved(cols_, false);
  for (const auto& row : r) {
    int p = -1;
    for (int j = 0; j <= cols_; ++j)
      if (!row[j].is_zero()) { p = j; break; }
    if (p == cols_) return std::nullopt;  // 0 = 1 row: inconsistent
    if (p < 0) continue;
    x[p] = row[cols_];
    solved[p] = true;
    for (int j = p + 1; j < cols_; ++j)
      if (!row[j].is_zero()) return std::nullopt;  // underdetermined
  }
  for (int j = 0; j < cols_; ++j)
    if (!solved[j]) return std::nullopt;
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat inv(rows_, rows_);
  for (int k = 0; k < rows_; ++k) {
    std::vector<Rat> e(rows_, Rat(0));
    e[k] = Rat(1);
    auto col = solve(e);
    if (!col) return std::nullopt;
    for (int i = 0; i < rows_; ++i) inv.at(i, k) = (*col)[i];
  }
  return inv;
}

std::vector<std::vector<Rat>> rref_rows(std::vector<std::vector<Rat>> rows) {
  RowSpace sp;
  for (auto& r : rows) sp.add(std::move(r));
  return sp.basis();
}

bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
  return rref_rows(a) == rref_rows(b);
}

bool RowSpace::add(std::vector<Rat> v) {
  v = reduce(std::move(v));
  int p = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) { p = static_cast<int>(j); break; }
  if (p < 0) return false;
  const Rat lead = v[p];
  for (auto& x : v) x /= lead;
  // clear the new pivot column from existing rows
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = rows_[i][p];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) rows_[i][j] -= c * v[j];
  }
  // insert ordered by pivot column
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const auto& r = rows_[i];
    for (size_t j = 0; j < v.size(); ++j)
      if (!r[j].is_zero()) v[j] -= c * r[j];
  }
  return v;
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace zhelo
