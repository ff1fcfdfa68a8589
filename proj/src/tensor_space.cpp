#include "tensorgen/tensor_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tensorgen {

namespace {

void require_mode(const GridVector& v, CoeffMode mode, const char* who) {
  if (v.mode() != mode) {
    throw std::invalid_argument(std::string(who) + ": wrong coefficient mode");
  }
}

void require_k_range(const ModuleShape& shape, int k, const char* who) {
  if (k < 1 || k > shape.m) {
    throw std::invalid_argument(std::string(who) + ": requires 1 <= k <= m");
  }
}

}  // namespace

ModuleShape ModuleShape::make(int m, int n, long long p,
                              std::optional<int> alpha) {
  if (m < 2 || m > n) {
    throw std::invalid_argument("ModuleShape: requires 2 <= m <= n");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("ModuleShape: p must be prime");
  }
  ModuleShape s;
  s.m = m;
  s.n = n;
  s.p = p;
  // q = p^alpha must cover the largest anti-diagonal length m+n-1.
  const long long need = static_cast<long long>(m) + n - 1;
  int min_alpha = 1;
  long long q = p;
  while (q < need) {
    // The shapes in range keep q well inside long long.
    q *= p;
    ++min_alpha;
  }
  if (alpha) {
    if (*alpha < min_alpha) {
      throw std::invalid_argument(
          "ModuleShape: p^alpha must be >= m+n-1; pairs beyond the group "
          "order are rejected, not modeled");
    }
    s.alpha = *alpha;
  } else {
    s.alpha = min_alpha;
  }
  return s;
}

Integer GridVector::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void GridVector::add_term(int i, int j, Integer c) {
  if (i < 1 || i > shape_.m || j < 1 || j > shape_.n) {
    throw std::invalid_argument("GridVector: index outside the grid");
  }
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  Integer v = it == terms_.end() ? std::move(c) : it->second + c;
  if (mode_ == CoeffMode::ModP) {
    v %= shape_.p;
    if (v < 0) v += shape_.p;
  }
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(key, std::move(v));
  } else {
    it->second = std::move(v);
  }
}

int diagonal_dim(const ModuleShape& shape, DiagonalIndex d) {
  if (d < 1 || d > shape.m + shape.n - 1) return 0;
  const int lo = std::max(1, d + 1 - shape.n);
  const int hi = std::min(shape.m, d);
  return hi - lo + 1;
}

OrderedDiagonalBasis diagonal_basis(const ModuleShape& shape,
                                    DiagonalIndex d) {
  if (diagonal_dim(shape, d) == 0) {
    throw std::invalid_argument("diagonal_basis: empty diagonal");
  }
  OrderedDiagonalBasis b;
  b.d = d;
  const int lo = std::max(1, d + 1 - shape.n);
  const int hi = std::min(shape.m, d);
  for (int i = lo; i <= hi; ++i) b.pairs.emplace_back(i, d + 1 - i);
  return b;
}

OrderedDiagonalBasis basis_low(const ModuleShape& shape, int k) {
  require_k_range(shape, k, "basis_low");
  return diagonal_basis(shape, k);
}

OrderedDiagonalBasis basis_high(const ModuleShape& shape, int k) {
  require_k_range(shape, k, "basis_high");
  return diagonal_basis(shape, shape.m + shape.n - k);
}

std::optional<DiagonalIndex> diagonal_support(const GridVector& v) {
  if (v.is_zero()) return std::nullopt;
  int d = -1;
  for (const auto& [ij, c] : v.terms()) {
    const int here = ij.first + ij.second - 1;
    if (d < 0) {
      d = here;
    } else if (d != here) {
      return std::nullopt;
    }
  }
  return d;
}

GridVector apply_N(const GridVector& v) {
  GridVector out(v.shape(), v.mode());
  for (const auto& [ij, c] : v.terms()) {
    const auto [i, j] = ij;
    if (i > 1) out.add_term(i - 1, j, c);
    if (j > 1) out.add_term(i, j - 1, c);
  }
  return out;
}

GridVector apply_N_power(const GridVector& v, int r) {
  if (r < 0) throw std::invalid_argument("apply_N_power: negative power");
  if (r == 0) return v;
  const ModuleShape& s = v.shape();
  GridVector out(s, v.mode());
  for (const auto& [ij, c] : v.terms()) {
    const auto [i, j] = ij;
    // N^r f_{i,j} = sum_l C(r, l) f_{i+l-r, j-l}, kept in range.
    const long long lo = std::max<long long>(0, r - i + 1);
    const long long hi = std::min<long long>(r, j - 1);
    for (long long l = lo; l <= hi; ++l) {
      const int a = static_cast<int>(i + l - r);
      const int b = static_cast<int>(j - l);
      if (v.mode() == CoeffMode::ModP) {
        out.add_term(a, b, c * binomial_mod_p(r, l, s.p));
      } else {
        out.add_term(a, b, c * binomial(r, l));
      }
    }
  }
  return out;
}

GridVector x_vector(const ModuleShape& shape, int i) {
  if (i < 1 || i > shape.m) {
    throw std::invalid_argument("x_vector: requires 1 <= i <= m");
  }
  GridVector x(shape, CoeffMode::Integers);
  for (int j = 1; j <= i; ++j) {
    x.add_term(j, i + 1 - j, (j % 2 == 1) ? 1 : -1);
  }
  return x;
}

IntMatrix build_A(const ModuleShape& shape, int k) {
  require_k_range(shape, k, "build_A");
  const long long top = static_cast<long long>(shape.m) + shape.n - 2 * k;
  IntMatrix a(k, k);
  for (int s = 1; s <= k; ++s) {
    for (int t = 1; t <= k; ++t) {
      a.at(s - 1, t - 1) = binomial(top, shape.n - k + s - t);
    }
  }
  return a;
}

IntMatrix matrix_of_N_power(const ModuleShape& shape, int k) {
  require_k_range(shape, k, "matrix_of_N_power");
  const int r = shape.m + shape.n - 2 * k;
  const auto high = basis_high(shape, k);
  const auto low = basis_low(shape, k);
  IntMatrix a(k, k);
  for (int t = 0; t < k; ++t) {
    GridVector e(shape, CoeffMode::Integers);
    e.add_term(high.pairs[t].first, high.pairs[t].second, 1);
    const GridVector img = apply_N_power(e, r);
    for (int s = 0; s < k; ++s) {
      a.at(s, t) = img.coeff(low.pairs[s].first, low.pairs[s].second);
    }
  }
  return a;
}

FpMatrix matrix_of_N_power_fp(const ModuleShape& shape, int k) {
  require_k_range(shape, k, "matrix_of_N_power_fp");
  const int r = shape.m + shape.n - 2 * k;
  const auto high = basis_high(shape, k);
  const auto low = basis_low(shape, k);
  FpMatrix a(shape.p, k, k);
  for (int t = 0; t < k; ++t) {
    GridVector e(shape, CoeffMode::ModP);
    e.add_term(high.pairs[t].first, high.pairs[t].second, 1);
    const GridVector img = apply_N_power(e, r);
    for (int s = 0; s < k; ++s) {
      a.at(s, t) = static_cast<long long>(
          img.coeff(low.pairs[s].first, low.pairs[s].second));
    }
  }
  return a;
}

std::map<std::pair<int, int>, Integer> to_v_basis(const GridVector& v) {
  const ModuleShape& s = v.shape();
  std::map<std::pair<int, int>, Integer> out;
  for (const auto& [ij, c] : v.terms()) {
    const auto [i, j] = ij;
    // f_{i,j} = sum_{l=1}^{j} C(n-i, j-l) v_{i,l}.
    for (int l = 1; l <= j; ++l) {
      Integer w;
      if (v.mode() == CoeffMode::ModP) {
        w = c * binomial_mod_p(s.n - i, j - l, s.p);
        w %= s.p;
      } else {
        w = c * binomial(s.n - i, j - l);
      }
      if (w == 0) continue;
      auto [it, inserted] = out.emplace(std::make_pair(i, l), w);
      if (!inserted) {
        it->second += w;
        if (v.mode() == CoeffMode::ModP) {
          it->second %= s.p;
          if (it->second < 0) it->second += s.p;
        }
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

GridVector add(const GridVector& v, const GridVector& w) {
  if (!(v.shape() == w.shape()) || v.mode() != w.mode()) {
    throw std::invalid_argument("add: incompatible grid vectors");
  }
  GridVector out = v;
  for (const auto& [ij, c] : w.terms()) {
    out.add_term(ij.first, ij.second, c);
  }
  return out;
}

GridVector scale(const GridVector& v, const Integer& c) {
  GridVector out(v.shape(), v.mode());
  for (const auto& [ij, x] : v.terms()) {
    out.add_term(ij.first, ij.second, x * c);
  }
  return out;
}

GridVector reduce_mod_p(const GridVector& v) {
  require_mode(v, CoeffMode::Integers, "reduce_mod_p");
  GridVector out(v.shape(), CoeffMode::ModP);
  for (const auto& [ij, c] : v.terms()) {
    out.add_term(ij.first, ij.second, c);
  }
  return out;
}

}  // namespace tensorgen
