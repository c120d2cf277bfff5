#include "zhelo/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zhelo {

int Monomial::degree() const {
  int d = 0;
  for (int32_t x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
  return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lexicographic with h1 the most significant variable
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Poly Poly::constant(int rank, const Rat& c) {
  Poly p(rank);
  if (!c.is_zero()) p.terms_.emplace(Monomial{std::vector<int32_t>(rank, 0)}, c);
  return p;
}

Poly Poly::variable(int rank, int i) {
  if (i < 0 || i >= rank) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(rank);
  Monomial m{std::vector<int32_t>(rank, 0)};
  m.e[i] = 1;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coefficient(const Monomial& m, const Rat& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Poly::check_rank(const Poly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("Poly: rank mismatch");
}

Poly Poly::operator-() const {
  Poly r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_rank(o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_rank(o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_rank(b);
  Poly r(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      Rat c = ca * cb;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

Poly operator*(const Rat& c, Poly p) {
  if (c.is_zero()) return Poly::zero(p.rank_);
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r = one(rank_);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != rank_)
    throw std::invalid_argument("Poly::eval: dimension mismatch");
  // memoized powers per variable
  std::vector<std::vector<Rat>> pw(rank_, {Rat(1)});
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < rank_; ++i) {
      int e = m.e[i];
      auto& p = pw[i];
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * point[i]);
      t *= p[e];
    }
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("Poly::substitute: wrong number of images");
  const int out_rank = images.empty() ? rank_ : images[0].rank();
  std::vector<std::vector<Poly>> pw(rank_);
  for (int i = 0; i < rank_; ++i) pw[i].push_back(Poly::one(out_rank));
  Poly acc(out_rank);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(out_rank, c);
    for (int i = 0; i < rank_; ++i) {
      int e = m.e[i];
      auto& p = pw[i];
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
      if (e > 0) t = t * p[e];
    }
    acc += t;
  }
  return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  check_rank(d);
  if (d.is_zero()) throw std::invalid_argument("Poly::divide_exact: zero divisor");
  Poly r = *this;
  Poly q(rank_);
  const auto& dl = *d.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& rl = *r.terms_.rbegin();
    if (!dl.first.divides(rl.first)) return std::nullopt;
    Monomial qm = rl.first / dl.first;
    Rat qc = rl.second / dl.second;
    Poly step(rank_);
    step.terms_.emplace(qm, qc);
    q += step;
    r -= step * d;
  }
  return q;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(rank_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::truncate_above(int d) const {
  Poly r(rank_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace(m, c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat c = it->second;
    const Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < rank_; ++i) {
      int e = it->first.e[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << a.to_string();
    } else {
      if (a != Rat(1)) os << a.to_string() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly linear_factor(int rank, int i, const Rat& shift) {
  Poly p = Poly::variable(rank, i);
  p += Poly::constant(rank, shift);
  return p;
}

}  // namespace zhelo
