#pragma once

// Sparse multivariate polynomials over Rat in the coroot coordinates h1..hl
// (linear coordinates on the dual Cartan: h_i reads off lambda(h_i)).
// Term order is degree-lexicographic with h1 > h2 > ... > hl; the map is kept
// free of zero coefficients so equality is representation equality.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhelo/rational.hpp"

namespace zhelo {

struct Monomial {
  std::vector<int32_t> e;

  int degree() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // quotient exponents; caller must have checked divides()
  Monomial operator/(const Monomial& m) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// true when a precedes b in deglex (a "smaller")
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, MonoLess>;

  explicit Poly(int rank = 0) : rank_(rank) {}
  static Poly zero(int rank) { return Poly(rank); }
  static Poly constant(int rank, const Rat& c);
  static Poly one(int rank) { return constant(rank, Rat(1)); }
  // the coordinate function h_{i+1} (0-based index)
  static Poly variable(int rank, int i);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  // nullopt encodes degree -infinity for the zero polynomial; std::optional
  // ordering (nullopt below every value) matches the intended semantics
  std::optional<int> degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  Rat coefficient(const Monomial& m) const;
  void set_coefficient(const Monomial& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, Poly p);
  friend Poly operator*(Poly p, const Rat& c) { return c * std::move(p); }
  Poly pow(int n) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rat eval(const std::vector<Rat>& point) const;
  // ring homomorphism h_i -> images[i]; all images must share a rank
  Poly substitute(const std::vector<Poly>& images) const;

  // exact quotient, or nullopt when the division leaves a remainder
  std::optional<Poly> divide_exact(const Poly& d) const;

  Poly homogeneous_part(int d) const;
  Poly truncate_above(int d) const;  // drop terms of degree > d

  // canonical text form: deglex-descending, explicit signs, h1..hl
  std::string to_string() const;

 private:
  int rank_;
  TermMap terms_;

  void check_rank(const Poly& o) const;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// affine convenience: h_i + shift
Poly linear_factor(int rank, int i, const Rat& shift);

}  // namespace zhelo
