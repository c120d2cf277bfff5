#pragma once

// Dense exact matrices over Rat. Rank and nullspace run a fraction-free
// (Bareiss) integer elimination after clearing row denominators, so every
// intermediate value is an exact minor of the scaled input.

#include <optional>
#include <vector>

#include "zhelo/rational.hpp"

namespace zhelo {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<Rat> row(int i) const;

  Mat transpose() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  int rank() const;
  // RREF-canonical basis of the right nullspace (deterministic pivot order:
  // leftmost column first, candidate row with fewest nonzeros then lowest index)
  std::vector<std::vector<Rat>> nullspace() const;
  // unique solution of A x = b, or nullopt when singular/inconsistent
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  std::optional<Mat> inverse() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Reduced row echelon form of a list of vectors: canonical basis of the row
// span (pivot entries 1, pivot columns cleared, rows ordered by pivot column,
// zero rows dropped).
std::vector<std::vector<Rat>> rref_rows(std::vector<std::vector<Rat>> rows);

bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);

// Incremental exact row space for span bookkeeping.
class RowSpace {
 public:
  // reduces v against the current basis; inserts the remainder when nonzero.
  // Returns true when v enlarged the space.
  bool add(std::vector<Rat> v);
  // remainder of v after reduction (zero vector iff v lies in the span)
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  bool contains(const std::vector<Rat>& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rat>>& basis() const { return rows_; }

 private:
  std::vector<std::vector<Rat>> rows_;  // kept in RREF
  std::vector<int> pivots_;
};

}  // namespace zhelo
