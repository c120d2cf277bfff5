#pragma once

// Chevalley-basis realization of the simple Lie algebra attached to a root
// system: exact structure constants, adjoint matrices, Killing form, and the
// principal sl2 triple. Basis order: root vectors x_gamma for the positive
// roots (height/lex order), then the negative roots in the mirrored order,
// then the Cartan elements h_1..h_l.
//
// Structure-constant signs follow the extraspecial-pair convention: for each
// sum xi the minimal special pair (alpha, beta) gets N = +(p+1) where p is
// the largest k with beta - k*alpha a root; every other constant is derived
// from the standard length-weighted bracket identities. The constructor
// certifies the table with a full Jacobi sweep plus |N| = p+1 integrality
// before returning.

#include <map>
#include <utility>
#include <vector>

#include "zhelo/matrix.hpp"
#include "zhelo/root_system.hpp"

namespace zhelo {

// sparse element over the Lie algebra basis
using SparseVec = std::vector<std::pair<int, Rat>>;

struct SL2Triple {
  std::vector<Rat> e, f, h;
};

class LieAlgebra {
 public:
  explicit LieAlgebra(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  int num_roots() const { return 2 * rs_.num_positive_roots(); }

  // basis indexing
  int root_index(int signed_root) const;       // internal signed-root id -> basis index
  int basis_index_positive(int k) const { return k; }
  int basis_index_negative(int k) const { return npos_ + k; }
  int basis_index_cartan(int i) const { return 2 * npos_ + i; }
  bool is_root_vector(int b) const { return b < 2 * npos_; }
  // root in the simple-root basis for a root-vector basis index
  std::vector<int> root_of(int b) const;

  SparseVec bracket_basis(int a, int b) const;
  std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
  Mat ad_matrix(const std::vector<Rat>& a) const;

  // structure constant N(alpha, beta) for root-vector pairs with alpha+beta a root
  Rat structure_constant(int root_a, int root_b) const;

  const Mat& killing() const { return killing_; }
  Rat killing_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

  // e = sum of simple positive root vectors, f = sum d_i * y_i with
  // (C^T) d = (2,...,2); h = [e,f] pairs to 2 against every simple root
  SL2Triple principal_sl2() const;

  std::vector<Rat> basis_vector(int b) const;

 private:
  RootSystem rs_;
  int npos_, dim_;
  std::vector<std::vector<int>> roots_;           // positives then negatives
  std::map<std::vector<int>, int> root_lookup_;   // root vector -> id in roots_
  mutable std::map<std::pair<int, int>, Rat> nmemo_;
  Mat killing_;

  int negate(int rid) const { return rid < npos_ ? rid + npos_ : rid - npos_; }
  bool is_positive_id(int rid) const { return rid < npos_; }
  int find_root(const std::vector<int>& r) const;  // -1 when not a root
  Rat norm2(const std::vector<int>& r) const { return rs_.inner(r, r); }
  int string_p(int ra, int rb) const;  // max k with beta - k*alpha a root
  std::pair<int, int> extraspecial(int sum_rid) const;
  Rat n_positive(int ra, int rb) const;
  Rat n_general(int ra, int rb) const;
  std::vector<Rat> coroot_of(int rid) const;  // h-coordinates of gamma^vee
  void compute_killing();
  void validate() const;
};

}  // namespace zhelo
