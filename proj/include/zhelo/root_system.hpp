#pragma once

// Root-system data for the simple types A-G: Cartan matrix, positive roots,
// the invariant form normalized so long roots have squared length 2, and
// exact change of basis between the simple-root and fundamental-weight
// coordinates. Indexing follows Bourbaki node numbering.
//
// Convention (pinned by tests): cartan(i, j) = alpha_j(h_i), the pairing of
// simple root alpha_j against simple coroot h_i.

#include <string>
#include <vector>

#include "zhelo/matrix.hpp"
#include "zhelo/rational.hpp"

namespace zhelo {

struct LieType {
  char family;  // 'A'..'G'
  int rank;

  static LieType parse(const std::string& s);  // case-insensitive, e.g. "b3"
  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
  bool valid() const;

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

enum class WeightBasis {
  Fundamental,       // coefficients over the fundamental weights
  SimpleRoot,        // coefficients over the simple roots
  CorootCoordinate,  // values lambda(h_1..h_l); numerically equal to Fundamental
};

struct Weight {
  std::vector<Rat> coords;
  WeightBasis basis;
};

class RootSystem {
 public:
  static RootSystem build(LieType t);
  // closure construction from an arbitrary valid Cartan matrix (used for
  // Langlands duals, whose node labelling may leave the Bourbaki tables)
  static RootSystem from_cartan(LieType t, const std::vector<std::vector<int>>& cartan);

  LieType type() const { return type_; }
  int rank() const { return rank_; }

  int cartan(int i, int j) const { return cartan_[i][j]; }        // alpha_j(h_i)
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // positive roots as integer vectors in the simple-root basis,
  // sorted by (height, lex); simple roots come first
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  static int height(const std::vector<int>& root);

  // invariant form on the weight space: form(i, j) = (alpha_i, alpha_j)
  const Mat& form() const { return form_; }
  // (alpha_i, alpha_i) / 2
  const Rat& half_norm(int i) const { return d_[i]; }
  Rat inner(const std::vector<int>& a, const std::vector<int>& b) const;  // root-basis args

  const Mat& root_to_weight() const { return r2w_; }  // the Cartan matrix over Rat
  const Mat& weight_to_root() const { return w2r_; }

  Weight convert(const Weight& w, WeightBasis target) const;
  // lambda(h_i) for a weight in any basis
  Rat pair_coroot(const Weight& w, int i) const;

  Weight rho() const;  // (1,...,1) in the fundamental basis
  Weight simple_reflection(int i, const Weight& w) const;  // in the caller's basis

  RootSystem langlands_dual() const;

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_;
  std::vector<Rat> d_;
  Mat form_, r2w_, w2r_;

  RootSystem() : rank_(0) {}
  void validate() const;
};

}  // namespace zhelo
