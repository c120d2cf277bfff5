#pragma once

// Restricted rational functions: a polynomial numerator over a multiset of
// univariate linear denominator factors (h_i + k). This is the smallest class
// closed under the psi-ratio twists the Zhelobenko operators introduce.
// Stored form is canonical: factors sorted, no factor divides the numerator.

#include <string>
#include <vector>

#include "zhelo/poly.hpp"

namespace zhelo {

struct LinFactor {
  int var;    // 0-based variable index
  Rat shift;  // the factor h_{var+1} + shift

  friend bool operator==(const LinFactor& a, const LinFactor& b) {
    return a.var == b.var && a.shift == b.shift;
  }
  friend bool operator<(const LinFactor& a, const LinFactor& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.shift < b.shift;
  }
};

class LinearFraction {
 public:
  explicit LinearFraction(Poly num) : num_(std::move(num)) {}
  LinearFraction(Poly num, std::vector<LinFactor> den);

  const Poly& num() const { return num_; }
  const std::vector<LinFactor>& den() const { return den_; }
  int rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }

  Poly den_poly() const;

  LinearFraction operator-() const { return LinearFraction(-num_, den_); }
  friend LinearFraction operator+(const LinearFraction& a, const LinearFraction& b);
  friend LinearFraction operator-(const LinearFraction& a, const LinearFraction& b);
  friend LinearFraction operator*(const LinearFraction& a, const LinearFraction& b);
  friend LinearFraction operator*(const Poly& p, const LinearFraction& f);
  friend LinearFraction operator*(const Rat& c, const LinearFraction& f);

  // exact equality as rational functions (cross-multiplied)
  friend bool operator==(const LinearFraction& a, const LinearFraction& b);
  friend bool operator!=(const LinearFraction& a, const LinearFraction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Poly num_;
  std::vector<LinFactor> den_;

  void normalize();
};

}  // namespace zhelo
