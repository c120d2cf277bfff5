#include "zhelo/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zhelo {

LieAlgebra::LieAlgebra(const RootSystem& rs) : rs_(rs) {
  npos_ = rs_.num_positive_roots();
  dim_ = 2 * npos_ + rs_.rank();
  roots_ = rs_.positive_roots();
  for (const auto& r : rs_.positive_roots()) {
    std::vector<int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    roots_.push_back(std::move(neg));
  }
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) root_lookup_[roots_[i]] = i;
  compute_killing();
  validate();
}

int LieAlgebra::find_root(const std::vector<int>& r) const {
  auto it = root_lookup_.find(r);
  return it == root_lookup_.end() ? -1 : it->second;
}

int LieAlgebra::root_index(int rid) const { return rid; }

std::vector<int> LieAlgebra::root_of(int b) const {
  if (!is_root_vector(b)) throw std::invalid_argument("root_of: not a root vector index");
  return roots_[b];
}

int LieAlgebra::string_p(int ra, int rb) const {
  // largest k >= 0 with beta - k*alpha a root
  std::vector<int> cur = roots_[rb];
  const std::vector<int>& a = roots_[ra];
  int p = 0;
  for (;;) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= a[i];
    if (find_root(cur) < 0) break;
    ++p;
  }
  return p;
}

std::pair<int, int> LieAlgebra::extraspecial(int sum_rid) const {
  // minimal positive alpha (in the stored height/lex order) with both alpha
  // and xi - alpha positive roots; pairs (alpha, xi - alpha) with alpha < beta
  const std::vector<int>& xi = roots_[sum_rid];
  for (int a = 0; a < npos_; ++a) {
    std::vector<int> rest(xi.size());
    for (size_t i = 0; i < xi.size(); ++i) rest[i] = xi[i] - roots_[a][i];
    const int b = find_root(rest);
    if (b >= 0 && is_positive_id(b) && a < b) return {a, b};
  }
  throw std::logic_error("extraspecial: no decomposition for a non-simple positive root");
}

Rat LieAlgebra::n_positive(int ra, int rb) const {
  if (ra > rb) return -n_positive(rb, ra);
  const auto key = std::make_pair(ra, rb);
  auto it = nmemo_.find(key);
  if (it != nmemo_.end()) return it->second;

  std::vector<int> sum(roots_[ra].size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = roots_[ra][i] + roots_[rb][i];
  const int rs_sum = find_root(sum);
  if (rs_sum < 0) throw std::logic_error("n_positive: sum is not a root");

  Rat result;
  const auto [a1, b1] = extraspecial(rs_sum);
  if (a1 == ra) {
    result = Rat(string_p(ra, rb) + 1);
  } else {
    // four-term identity on (a1, b1, -ra, -rb):
    //   N(a1,b1)N(-ra,-rb)/(xi,xi) + N(b1,-ra)N(a1,-rb)/(b1-ra)^2
    //                              + N(-ra,a1)N(b1,-rb)/(a1-ra)^2 = 0
    Rat t2(0), t3(0);
    {
      std::vector<int> diff(sum.size());
      for (size_t i = 0; i < sum.size(); ++i) diff[i] = roots_[b1][i] - roots_[ra][i];
      if (find_root(diff) >= 0)
        t2 = n_general(b1, negate(ra)) * n_general(a1, negate(rb)) / rs_.inner(diff, diff);
    }
    {
      std::vector<int> diff(sum.size());
      for (size_t i = 0; i < sum.size(); ++i) diff[i] = roots_[a1][i] - roots_[ra][i];
      if (find_root(diff) >= 0)
        t3 = n_general(negate(ra), a1) * n_general(b1, negate(rb)) / rs_.inner(diff, diff);
    }
    result = norm2(rs_sum) * (t2 + t3) / n_positive(a1, b1);
  }
  nmemo_.emplace(key, result);
  return result;
}

Rat LieAlgebra::n_general(int ra, int rb) const {
  const bool pa = is_positive_id(ra), pb = is_positive_id(rb);
  if (pa && pb) return n_positive(ra, rb);
  if (!pa && !pb) return -n_general(negate(ra), negate(rb));
  if (!pa) return -n_general(rb, ra);
  // mixed: a positive, b = -g negative, a != g, a - g a root
  const int g = negate(rb);
  std::vector<int> diff(roots_[ra].size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = roots_[ra][i] - roots_[g][i];
  const int d = find_root(diff);
  if (d < 0) throw std::logic_error("n_general: difference is not a root");
  if (is_positive_id(d)) {
    // cyclic rule on (a, -g, -d), sum zero: N(a,-g) = (d,d)/(a,a) * N(-g,-d)
    return norm2(d) / norm2(ra) * (-n_positive(g, d));
  }
  // delta = g - a positive: cyclic rule on (a, -g, delta): N(a,-g) = (delta,delta)/(g,g) * N(delta,a)
  const int nd = negate(d);
  return norm2(nd) / norm2(g) * n_positive(nd, ra);
}

Rat LieAlgebra::structure_constant(int root_a, int root_b) const { return n_general(root_a, root_b); }

std::vector<Rat> LieAlgebra::coroot_of(int rid) const {
  // gamma^vee in the h-basis: coefficient c_k d_k / d_gamma for gamma = sum c_k alpha_k
  const std::vector<int>& g = roots_[rid];
  const Rat dg = norm2(rid) / Rat(2);
  std::vector<Rat> h(rs_.rank(), Rat(0));
  for (int k = 0; k < rs_.rank(); ++k)
    h[k] = Rat(g[k], 1) * rs_.half_norm(k) / dg;
  return h;
}

SparseVec LieAlgebra::bracket_basis(int a, int b) const {
  if (a == b) return {};
  const int l = rs_.rank();
  const bool ra = is_root_vector(a), rb = is_root_vector(b);
  if (!ra && !rb) return {};  // Cartan is abelian
  if (!ra || !rb) {
    // [h_i, x_gamma] = gamma(h_i) x_gamma, bilinear antisymmetric
    const int hb = ra ? b : a;
    const int xv = ra ? a : b;
    const int i = hb - 2 * npos_;
    const std::vector<int>& g = roots_[xv];
    int pairing = 0;
    for (int j = 0; j < l; ++j) pairing += rs_.cartan(i, j) * g[j];
    if (pairing == 0) return {};
    Rat c(ra ? -pairing : pairing);
    return {{xv, c}};
  }
  // two root vectors
  const std::vector<int>& ga = roots_[a];
  const std::vector<int>& gb = roots_[b];
  std::vector<int> sum(l);
  bool zero = true;
  for (int i = 0; i < l; ++i) {
    sum[i] = ga[i] + gb[i];
    zero = zero && sum[i] == 0;
  }
  if (zero) {
    // [x_gamma, x_-gamma] = gamma^vee; sign: positive root first gives +
    const int pos = is_positive_id(a) ? a : b;
    const Rat sign(is_positive_id(a) ? 1 : -1);
    auto h = coroot_of(pos);
    SparseVec out;
    for (int i = 0; i < l; ++i)
      if (!h[i].is_zero()) out.push_back({basis_index_cartan(i), sign * h[i]});
    return out;
  }
  const int target = find_root(sum);
  if (target < 0) return {};
  const Rat n = n_general(a, b);
  if (n.is_zero()) return {};
  return {{target, n}};
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<Rat> out(dim_, Rat(0));
  for (int a = 0; a < dim_; ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < dim_; ++b) {
      if (v[b].is_zero()) continue;
      for (const auto& [k, c] : bracket_basis(a, b)) out[k] += u[a] * v[b] * c;
    }
  }
  return out;
}

Mat LieAlgebra::ad_matrix(const std::vector<Rat>& a) const {
  Mat m(dim_, dim_);
  for (int b = 0; b < dim_; ++b) {
    for (int i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& [k, c] : bracket_basis(i, b)) m.at(k, b) += a[i] * c;
    }
  }
  return m;
}

std::vector<Rat> LieAlgebra::basis_vector(int b) const {
  std::vector<Rat> v(dim_, Rat(0));
  v[b] = Rat(1);
  return v;
}

void LieAlgebra::compute_killing() {
  const int l = rs_.rank();
  killing_ = Mat(dim_, dim_);
  // kappa(h_i, h_j) = sum over roots gamma of gamma(h_i) gamma(h_j)
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat acc(0);
      for (const auto& g : roots_) {
        int pi = 0, pj = 0;
        for (int k = 0; k < l; ++k) {
          pi += rs_.cartan(i, k) * g[k];
          pj += rs_.cartan(j, k) * g[k];
        }
        acc += Rat(pi) * Rat(pj);
      }
      killing_.at(basis_index_cartan(i), basis_index_cartan(j)) = acc;
    }
  // kappa(x_gamma, x_delta) vanishes unless delta = -gamma (weight zero trace);
  // the surviving pairs come from an honest trace over the basis
  for (int a = 0; a < 2 * npos_; ++a) {
    const int na = negate(a);
    Rat acc(0);
    for (int b = 0; b < dim_; ++b) {
      // coefficient of basis b in [x_a, [x_na, b]]
      for (const auto& [k1, c1] : bracket_basis(na, b))
        for (const auto& [k2, c2] : bracket_basis(a, k1))
          if (k2 == b) acc += c1 * c2;
    }
    killing_.at(a, na) = acc;
  }
}

Rat LieAlgebra::killing_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  Rat acc(0);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!b[j].is_zero() && !killing_.at(i, j).is_zero()) acc += a[i] * b[j] * killing_.at(i, j);
  }
  return acc;
}

void LieAlgebra::validate() const {
  const int l = rs_.rank();
  // |N(alpha,beta)| = p+1 and integrality, for every root pair summing to a root
  for (int a = 0; a < 2 * npos_; ++a)
    for (int b = 0; b < 2 * npos_; ++b) {
      if (a == b || negate(a) == b) continue;
      std::vector<int> sum(l);
      for (int i = 0; i < l; ++i) sum[i] = roots_[a][i] + roots_[b][i];
      if (find_root(sum) < 0) continue;
      const Rat n = n_general(a, b);
      const Rat expect(string_p(a, b) + 1);
      if (n.abs() != expect || !n.is_integer())
        throw std::logic_error("LieAlgebra: structure constant magnitude mismatch at pair (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
  // full Jacobi sweep over basis triples, sparse accumulation
  SparseVec acc;
  auto flush_check = [&](int a, int b, int c) {
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t i = 0;
    while (i < acc.size()) {
      Rat s = acc[i].second;
      size_t j = i + 1;
      while (j < acc.size() && acc[j].first == acc[i].first) s += acc[j++].second;
      if (!s.is_zero())
        throw std::logic_error("LieAlgebra: Jacobi identity fails on triple (" +
                               std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
      i = j;
    }
    acc.clear();
  };
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      const SparseVec ab = bracket_basis(a, b);
      for (int c = b + 1; c < dim_; ++c) {
        for (const auto& [k, v] : ab)
          for (const auto& [k2, v2] : bracket_basis(k, c)) acc.push_back({k2, v * v2});
        for (const auto& [k, v] : bracket_basis(b, c))
          for (const auto& [k2, v2] : bracket_basis(k, a)) acc.push_back({k2, v * v2});
        for (const auto& [k, v] : bracket_basis(c, a))
          for (const auto& [k2, v2] : bracket_basis(k, b)) acc.push_back({k2, v * v2});
        flush_check(a, b, c);
      }
    }
}

SL2Triple LieAlgebra::principal_sl2() const {
  const int l = rs_.rank();
  // solve sum_i d_i alpha_j(h_i) = 2 for all j, i.e. C^T d = (2,...,2)
  Mat ct(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) ct.at(i, j) = Rat(rs_.cartan(j, i), 1);
  auto d = ct.solve(std::vector<Rat>(l, Rat(2)));
  if (!d) throw std::logic_error("principal_sl2: singular Cartan system");

  SL2Triple t;
  t.e.assign(dim_, Rat(0));
  t.f.assign(dim_, Rat(0));
  for (int i = 0; i < l; ++i) {
    std::vector<int> simple(l, 0);
    simple[i] = 1;
    const int rid = find_root(simple);
    t.e[basis_index_positive(rid)] = Rat(1);
    t.f[basis_index_negative(rid)] = (*d)[i];
  }
  t.h = bracket(t.e, t.f);

  // sl2 relations, exact
  auto check = [&](const std::vector<Rat>& lhs, const std::vector<Rat>& rhs, const char* what) {
    if (lhs != rhs) throw std::logic_error(std::string("principal_sl2: relation failed: ") + what);
  };
  auto scale = [&](const std::vector<Rat>& v, const Rat& c) {
    std::vector<Rat> r = v;
    for (auto& x : r) x *= c;
    return r;
  };
  check(bracket(t.h, t.e), scale(t.e, Rat(2)), "[h,e] = 2e");
  check(bracket(t.h, t.f), scale(t.f, Rat(-2)), "[h,f] = -2f");
  return t;
}

}  // namespace zhelo
