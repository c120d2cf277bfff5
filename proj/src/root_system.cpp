#include "zhelo/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace zhelo {

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("LieType: expected e.g. 'A2', got '" + s + "'");
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("LieType: malformed rank in '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  LieType t{fam, rank};
  if (!t.valid()) throw std::invalid_argument("LieType: illegal type '" + s + "'");
  return t;
}

bool LieType::valid() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

// cartan[i][j] = alpha_j(h_i); Bourbaki numbering throughout
std::vector<std::vector<int>> cartan_for(LieType t) {
  const int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto chain = [&](int a, int b) { c[a][b] = -1; c[b][a] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      // alpha_l short: alpha_{l-1}(h_l) = -2
      c[l - 1][l - 2] = -2;
      c[l - 2][l - 1] = -1;
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      // alpha_l long: alpha_l(h_{l-1}) = -2
      c[l - 2][l - 1] = -2;
      c[l - 1][l - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case 'E':
      // nodes 1-3-4-5-6(-7(-8)) with 2 attached to 4
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 3; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case 'F':
      chain(0, 1);
      chain(2, 3);
      // alpha_3, alpha_4 short: alpha_2(h_3) = -2
      c[2][1] = -2;
      c[1][2] = -1;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long: alpha_2(h_1) = -3
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("cartan_for: bad family");
  }
  return c;
}

}  // namespace

int RootSystem::height(const std::vector<int>& root) {
  int h = 0;
  for (int x : root) h += x;
  return h;
}

RootSystem RootSystem::build(LieType t) {
  if (!t.valid()) throw std::invalid_argument("RootSystem: illegal type " + t.to_string());
  return from_cartan(t, cartan_for(t));
}

RootSystem RootSystem::from_cartan(LieType t, const std::vector<std::vector<int>>& cartan) {
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = t.rank;
  rs.cartan_ = cartan;
  const int l = rs.rank_;

  // close the simple roots under simple reflections
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < l; ++i) {
    std::vector<int> a(l, 0);
    a[i] = 1;
    all.insert(a);
    work.push_back(a);
  }
  while (!work.empty()) {
    std::vector<int> b = work.back();
    work.pop_back();
    for (int i = 0; i < l; ++i) {
      int pairing = 0;  // b(h_i)
      for (int j = 0; j < l; ++j) pairing += cartan[i][j] * b[j];
      std::vector<int> r = b;
      r[i] -= pairing;
      if (all.insert(r).second) work.push_back(r);
    }
  }
  for (const auto& r : all) {
    bool pos = false, neg = false;
    for (int x : r) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("RootSystem: mixed-sign root in closure");
    if (pos) rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              const int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  // symmetrize: d_i * cartan[i][j] = d_j * cartan[j][i]; scale so max d = 1,
  // which makes long roots have squared length 2
  std::vector<Rat> d(l, Rat(0));
  d[0] = Rat(1);
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      if (cartan[i][j] == 0 || !d[j].is_zero() || i == j) continue;
      d[j] = d[i] * Rat(cartan[i][j], 1) / Rat(cartan[j][i], 1);
      queue.push_back(j);
    }
  }
  Rat dmax = d[0];
  for (const Rat& x : d) {
    if (x.is_zero()) throw std::logic_error("RootSystem: disconnected Dynkin diagram");
    if (x > dmax) dmax = x;
  }
  for (Rat& x : d) x /= dmax;
  rs.d_ = d;

  rs.form_ = Mat(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.form_.at(i, j) = d[i] * Rat(cartan[i][j], 1);

  rs.r2w_ = Mat(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.r2w_.at(i, j) = Rat(cartan[i][j], 1);
  auto inv = rs.r2w_.inverse();
  if (!inv) throw std::logic_error("RootSystem: singular Cartan matrix");
  rs.w2r_ = *inv;

  rs.validate();
  return rs;
}

void RootSystem::validate() const {
  const int l = rank_;
  for (int i = 0; i < l; ++i) {
    if (cartan_[i][i] != 2) throw std::logic_error("RootSystem: Cartan diagonal must be 2");
    for (int j = 0; j < l; ++j)
      if (i != j && cartan_[i][j] > 0)
        throw std::logic_error("RootSystem: positive off-diagonal Cartan entry");
  }
  // form symmetric and positive definite (leading principal minors)
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (form_.at(i, j) != form_.at(j, i)) throw std::logic_error("RootSystem: form not symmetric");
  // positive definiteness: symmetric elimination must meet positive pivots only
  Mat g = form_;
  for (int k = 0; k < l; ++k) {
    if (g.at(k, k).sign() <= 0) throw std::logic_error("RootSystem: form not positive definite");
    for (int i = k + 1; i < l; ++i) {
      const Rat f = g.at(i, k) / g.at(k, k);
      if (f.is_zero()) continue;
      for (int j = k; j < l; ++j) g.at(i, j) -= f * g.at(k, j);
    }
  }
  // coroot consistency: 2(alpha_j, alpha_i)/(alpha_i, alpha_i) = cartan[i][j]
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat lhs = Rat(2) * form_.at(i, j) / (Rat(2) * d_[i]);
      if (lhs != Rat(cartan_[i][j], 1))
        throw std::logic_error("RootSystem: form/Cartan inconsistency");
    }
}

Rat RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      acc += Rat(a[i], 1) * form_.at(i, j) * Rat(b[j], 1);
    }
  }
  return acc;
}

Weight RootSystem::convert(const Weight& w, WeightBasis target) const {
  if (static_cast<int>(w.coords.size()) != rank_)
    throw std::invalid_argument("Weight: dimension mismatch");
  auto as_fundamental = [&]() -> std::vector<Rat> {
    switch (w.basis) {
      case WeightBasis::Fundamental:
      case WeightBasis::CorootCoordinate:
        return w.coords;  // numerically identical coordinate systems
      case WeightBasis::SimpleRoot:
        return r2w_.apply(w.coords);
    }
    throw std::logic_error("Weight: bad basis tag");
  };
  switch (target) {
    case WeightBasis::Fundamental:
    case WeightBasis::CorootCoordinate:
      return Weight{as_fundamental(), target};
    case WeightBasis::SimpleRoot:
      return Weight{w2r_.apply(as_fundamental()), target};
  }
  throw std::logic_error("Weight: bad target basis tag");
}

Rat RootSystem::pair_coroot(const Weight& w, int i) const {
  return convert(w, WeightBasis::Fundamental).coords[i];
}

Weight RootSystem::rho() const {
  return Weight{std::vector<Rat>(rank_, Rat(1)), WeightBasis::Fundamental};
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple_reflection: bad index");
  const Rat t = pair_coroot(w, i);
  Weight r = w;
  if (w.basis == WeightBasis::SimpleRoot) {
    r.coords[i] -= t;
  } else {
    // alpha_i in fundamental coordinates is column i of the Cartan matrix
    for (int k = 0; k < rank_; ++k) r.coords[k] -= t * Rat(cartan_[k][i], 1);
  }
  return r;
}

RootSystem RootSystem::langlands_dual() const {
  std::vector<std::vector<int>> ct(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) ct[i][j] = cartan_[j][i];
  LieType dual = type_;
  if (type_.family == 'B') dual.family = 'C';
  else if (type_.family == 'C') dual.family = 'B';
  return from_cartan(dual, ct);
}

}  // namespace zhelo
