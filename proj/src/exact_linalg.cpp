#include "tensorgen/exact_linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tensorgen {

namespace {

void require_square(const IntMatrix& a, const char* who) {
  if (a.rows != a.cols) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
}

long long canon(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
      static_cast<unsigned __int128>(p));
}

long long invmod(long long a, long long p) {
  // Extended Euclid; a must be nonzero mod p, p prime.
  long long t = 0, newt = 1, r = p, newr = canon(a, p);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::invalid_argument("invmod: not invertible");
  return canon(t, p);
}

// Deletes row i and column j; used by the cofactor path.
IntMatrix minor_matrix(const IntMatrix& a, int i, int j) {
  IntMatrix s(a.rows - 1, a.cols - 1);
  for (int r = 0, sr = 0; r < a.rows; ++r) {
    if (r == i) continue;
    for (int c = 0, sc = 0; c < a.cols; ++c) {
      if (c == j) continue;
      s.at(sr, sc) = a.at(r, c);
      ++sc;
    }
    ++sr;
  }
  return s;
}

IntMatrix adjugate_by_cofactors(const IntMatrix& a) {
  const int k = a.rows;
  IntMatrix adj(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Integer cof = det_int(minor_matrix(a, i, j));
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

// Fraction-free Gauss-Jordan on [a | I]. Every division is exact (asserted
// via exact_div); at completion the left block is d*I with d the final
// pivot and the right block is d * a^{-1}, so the adjugate is the right
// block times the sign of the row permutation. Returns false when no pivot
// is available in some column, i.e. when a is singular.
bool adjugate_by_jordan(const IntMatrix& a, IntMatrix* out) {
  const int k = a.rows;
  IntMatrix w(k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, k + i) = 1;
  }
  int sign = 1;
  Integer prev = 1;
  for (int r = 0; r < k; ++r) {
    int piv = -1;
    for (int i = r; i < k; ++i) {
      if (w.at(i, r) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return false;
    if (piv != r) {
      for (int j = 0; j < 2 * k; ++j) std::swap(w.at(piv, j), w.at(r, j));
      sign = -sign;
    }
    const Integer pivot = w.at(r, r);
    for (int i = 0; i < k; ++i) {
      if (i == r) continue;
      const Integer f = w.at(i, r);
      for (int j = 0; j < 2 * k; ++j) {
        w.at(i, j) = exact_div(pivot * w.at(i, j) - f * w.at(r, j), prev);
      }
    }
    prev = pivot;
  }
  IntMatrix adj(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      adj.at(i, j) = sign > 0 ? w.at(i, k + j) : -w.at(i, k + j);
    }
  }
  *out = adj;
  return true;
}

// Shared elimination core over GF(p): returns rank, and the determinant
// via *det when requested (square input assumed by the det caller).
int eliminate_fp(std::vector<long long>& m, int rows, int cols, long long p,
                 long long* det) {
  long long d = 1;
  int sign = 1;
  int rank = 0;
  auto at = [&](int r, int c) -> long long& { return m[size_t(r) * cols + c]; };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      if (det) d = 0;
      continue;
    }
    if (piv != rank) {
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
      sign = -sign;
    }
    const long long lead = at(rank, c);
    if (det) d = mulmod(d, lead, p);
    const long long inv = invmod(lead, p);
    for (int j = c; j < cols; ++j) at(rank, j) = mulmod(at(rank, j), inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || at(i, c) == 0) continue;
      const long long f = at(i, c);
      for (int j = c; j < cols; ++j) {
        at(i, j) = canon(at(i, j) - mulmod(f, at(rank, j), p), p);
      }
    }
    ++rank;
  }
  if (det) {
    *det = rank < rows ? 0 : canon(sign * d, p);
  }
  return rank;
}

}  // namespace

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

Integer det_int(const IntMatrix& a) {
  require_square(a, "det_int");
  const int k = a.rows;
  if (k == 0) return 1;
  IntMatrix w = a;
  int sign = 1;
  Integer prev = 1;
  for (int r = 0; r + 1 < k; ++r) {
    int piv = -1;
    for (int i = r; i < k; ++i) {
      if (w.at(i, r) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != r) {
      for (int j = r; j < k; ++j) std::swap(w.at(piv, j), w.at(r, j));
      sign = -sign;
    }
    // Bareiss step: all divisions by the previous pivot are exact.
    for (int i = r + 1; i < k; ++i) {
      for (int j = r + 1; j < k; ++j) {
        w.at(i, j) =
            exact_div(w.at(r, r) * w.at(i, j) - w.at(i, r) * w.at(r, j), prev);
      }
      w.at(i, r) = 0;
    }
    prev = w.at(r, r);
  }
  return sign > 0 ? w.at(k - 1, k - 1) : -w.at(k - 1, k - 1);
}

IntMatrix adjugate_int(const IntMatrix& a) {
  require_square(a, "adjugate_int");
  const int k = a.rows;
  if (k == 0) throw std::invalid_argument("adjugate_int: empty matrix");
  if (k == 1) return IntMatrix::identity(1);
  if (k > 8) {
    // Jordan elimination is cubic where cofactors are quintic; it requires
    // a nonsingular input, so singular matrices fall through.
    IntMatrix adj;
    if (adjugate_by_jordan(a, &adj)) return adj;
  }
  return adjugate_by_cofactors(a);
}

FpMatrix reduce_mod_p(const IntMatrix& a, long long p) {
  if (p < 2) throw std::invalid_argument("reduce_mod_p: base must be >= 2");
  FpMatrix m(p, a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      Integer r = a.at(i, j) % p;
      if (r < 0) r += p;
      m.at(i, j) = static_cast<long long>(r);
    }
  }
  return m;
}

int rank_fp(const FpMatrix& a) {
  std::vector<long long> m = a.data;
  return eliminate_fp(m, a.rows, a.cols, a.p, nullptr);
}

long long det_fp(const FpMatrix& a) {
  if (a.rows != a.cols) {
    throw std::invalid_argument("det_fp: matrix must be square");
  }
  if (a.rows == 0) return 1 % a.p;
  std::vector<long long> m = a.data;
  long long d = 0;
  eliminate_fp(m, a.rows, a.cols, a.p, &d);
  return d;
}

int stack_rank_fp(const std::vector<std::vector<long long>>& vectors,
                  long long p) {
  if (p < 2) throw std::invalid_argument("stack_rank_fp: base must be >= 2");
  if (vectors.empty()) return 0;
  const size_t len = vectors.front().size();
  std::vector<long long> m;
  m.reserve(vectors.size() * len);
  for (const auto& v : vectors) {
    if (v.size() != len) {
      throw std::invalid_argument("stack_rank_fp: mismatched vector lengths");
    }
    for (long long x : v) m.push_back(canon(x, p));
  }
  return eliminate_fp(m, static_cast<int>(vectors.size()),
                      static_cast<int>(len), p, nullptr);
}

}  // namespace tensorgen
