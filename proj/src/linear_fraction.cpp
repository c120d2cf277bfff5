#include "zhelo/linear_fraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zhelo {

LinearFraction::LinearFraction(Poly num, std::vector<LinFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void LinearFraction::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::sort(den_.begin(), den_.end());
  std::vector<LinFactor> kept;
  for (const auto& f : den_) {
    auto q = num_.divide_exact(linear_factor(num_.rank(), f.var, f.shift));
    if (q) {
      num_ = std::move(*q);
    } else {
      kept.push_back(f);
    }
  }
  den_ = std::move(kept);
}

Poly LinearFraction::den_poly() const {
  Poly d = Poly::one(num_.rank());
  for (const auto& f : den_) d = d * linear_factor(num_.rank(), f.var, f.shift);
  return d;
}

namespace {

// multiset union-max of denominator factors; also the per-side complements
struct DenMerge {
  std::vector<LinFactor> common;
  Poly extra_a, extra_b;  // multiply a's/b's numerator by these
};

DenMerge merge_dens(const LinearFraction& a, const LinearFraction& b) {
  std::map<std::pair<int, Rat>, std::pair<int, int>> counts;
  for (const auto& f : a.den()) counts[{f.var, f.shift}].first++;
  for (const auto& f : b.den()) counts[{f.var, f.shift}].second++;
  DenMerge m{{}, Poly::one(a.rank()), Poly::one(a.rank())};
  for (const auto& [key, cnt] : counts) {
    const int mx = std::max(cnt.first, cnt.second);
    for (int k = 0; k < mx; ++k) m.common.push_back(LinFactor{key.first, key.second});
    const Poly f = linear_factor(a.rank(), key.first, key.second);
    for (int k = cnt.first; k < mx; ++k) m.extra_a = m.extra_a * f;
    for (int k = cnt.second; k < mx; ++k) m.extra_b = m.extra_b * f;
  }
  return m;
}

}  // namespace

LinearFraction operator+(const LinearFraction& a, const LinearFraction& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("LinearFraction: rank mismatch");
  DenMerge m = merge_dens(a, b);
  return LinearFraction(a.num_ * m.extra_a + b.num_ * m.extra_b, std::move(m.common));
}

LinearFraction operator-(const LinearFraction& a, const LinearFraction& b) {
  return a + (-b);
}

LinearFraction operator*(const LinearFraction& a, const LinearFraction& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("LinearFraction: rank mismatch");
  std::vector<LinFactor> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return LinearFraction(a.num_ * b.num_, std::move(den));
}

LinearFraction operator*(const Poly& p, const LinearFraction& f) {
  return LinearFraction(p) * f;
}

LinearFraction operator*(const Rat& c, const LinearFraction& f) {
  if (c.is_zero()) return LinearFraction(Poly::zero(f.rank()));
  return LinearFraction(c * f.num_, f.den_);
}

bool operator==(const LinearFraction& a, const LinearFraction& b) {
  if (a.rank() != b.rank()) return false;
  // canonical forms agree iff the cross-multiplied identity holds
  return a.num_ * b.den_poly() == b.num_ * a.den_poly();
}

std::string LinearFraction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ") / (";
  for (size_t i = 0; i < den_.size(); ++i) {
    if (i) s += "*";
    s += "(" + linear_factor(num_.rank(), den_[i].var, den_[i].shift).to_string() + ")";
  }
  return s + ")";
}

}  // namespace zhelo
