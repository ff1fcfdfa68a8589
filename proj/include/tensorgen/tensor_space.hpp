#pragma once

// Tensor product of two Jordan blocks for a cyclic p-group, in the grid
// basis. Let G = <g> have order q = p^alpha over a field of characteristic
// p, and let V_m, V_n be the indecomposable modules of dimensions m <= n.
// V_m (x) V_n carries the basis
//
//     f_{i,j},   1 <= i <= m,  1 <= j <= n,
//
// chosen so that N = g - 1 acts by the grid rule
//
//     N f_{i,j} = f_{i-1,j} + f_{i,j-1}        (out-of-range terms vanish),
//
// whence N^r f_{i,j} = sum_l C(r, l) f_{i+l-r, j-l}. N is homogeneous of
// degree -1 with respect to the anti-diagonal grading
//
//     D_d = < f_{i,j} : i + j = d + 1 >,       1 <= d <= m+n-1.
//
// The vectors x_i = sum_j (-1)^{j-1} f_{j, i+1-j} span ker N. A_k denotes
// the k x k matrix of N^{m+n-2k} : D_{m+n-k} -> D_k written in the ordered
// bases (f_{m-k+1,n}, ..., f_{m,n-k+1}) and (f_{1,k}, ..., f_{k,1}); its
// entries are the binomial coefficients C(m+n-2k, n-k+s-t).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tensorgen/arith.hpp"
#include "tensorgen/exact_linalg.hpp"

namespace tensorgen {

// Shape of the pair V_m (x) V_n in characteristic p, for a cyclic group of
// order p^alpha. Valid shapes have 2 <= m <= n, p prime, and
// p^alpha >= m+n-1 so that every anti-diagonal length is a realizable
// Jordan block size; alpha is chosen minimal when not supplied.
struct ModuleShape {
  int m = 0;
  int n = 0;
  long long p = 0;
  int alpha = 0;

  // Validates and normalizes; throws std::invalid_argument on violation.
  static ModuleShape make(int m, int n, long long p,
                          std::optional<int> alpha = std::nullopt);

  bool operator==(const ModuleShape&) const = default;
};

enum class CoeffMode { Integers, ModP };

// Index of an anti-diagonal D_d.
using DiagonalIndex = int;

// An anti-diagonal together with its ordered basis, listed by increasing
// first index i (so (f_{1,k},...,f_{k,1}) for low diagonals and
// (f_{m-k+1,n},...,f_{m,n-k+1}) for their high mirrors).
struct OrderedDiagonalBasis {
  DiagonalIndex d = 0;
  std::vector<std::pair<int, int>> pairs;
};

// Sparse vector in the f-basis. Carries its shape and coefficient mode;
// in ModP mode every stored coefficient is canonical in [0, p) and zero
// coefficients are never stored. Operations never mix modes silently.
class GridVector {
 public:
  GridVector(const ModuleShape& shape, CoeffMode mode)
      : shape_(shape), mode_(mode) {}

  const ModuleShape& shape() const { return shape_; }
  CoeffMode mode() const { return mode_; }
  const std::map<std::pair<int, int>, Integer>& terms() const {
    return terms_;
  }

  Integer coeff(int i, int j) const;

  // Adds c * f_{i,j}; indices must lie in the grid. Coefficients are
  // canonicalized (and dropped when zero).
  void add_term(int i, int j, Integer c);

  bool is_zero() const { return terms_.empty(); }

  bool operator==(const GridVector&) const = default;

 private:
  ModuleShape shape_;
  CoeffMode mode_;
  std::map<std::pair<int, int>, Integer> terms_;
};

// Dimension of D_d; zero outside 1 <= d <= m+n-1.
int diagonal_dim(const ModuleShape& shape, DiagonalIndex d);

// Ordered basis of D_d by increasing i.
OrderedDiagonalBasis diagonal_basis(const ModuleShape& shape,
                                    DiagonalIndex d);

// The ordered bases of the matching pair D_k and D_{m+n-k}, 1 <= k <= m.
OrderedDiagonalBasis basis_low(const ModuleShape& shape, int k);
OrderedDiagonalBasis basis_high(const ModuleShape& shape, int k);

// The diagonal supporting v, when v is homogeneous; nullopt for 0 or for
// mixed support.
std::optional<DiagonalIndex> diagonal_support(const GridVector& v);

// One application of N = g - 1 by the grid rule, in v's mode.
GridVector apply_N(const GridVector& v);

// N^r v via the closed binomial form; exact in Integers mode, reduced by
// Lucas' theorem in ModP mode (no large intermediates). Requires r >= 0.
GridVector apply_N_power(const GridVector& v, int r);

// Kernel vector x_i = sum_{j=1}^{i} (-1)^{j-1} f_{j, i+1-j}, in Integers
// mode. Requires 1 <= i <= m.
GridVector x_vector(const ModuleShape& shape, int i);

// The k x k matrix A_k over Z, entries C(m+n-2k, n-k+s-t). 1 <= k <= m.
IntMatrix build_A(const ModuleShape& shape, int k);

// Matrix of N^{m+n-2k} : D_{m+n-k} -> D_k assembled column by column by
// applying apply_N_power to the high basis vectors; the independent
// cross-check of build_A. Integer and GF(p) variants.
IntMatrix matrix_of_N_power(const ModuleShape& shape, int k);
FpMatrix matrix_of_N_power_fp(const ModuleShape& shape, int k);

// Change of basis to the plain tensor basis v_{i,j} = u_i (x) w_j:
// f_{i,j} = sum_{l<=j} C(n-i, j-l) v_{i,l}. Returns the coefficient map,
// reduced mod p when v is in ModP mode.
std::map<std::pair<int, int>, Integer> to_v_basis(const GridVector& v);

// v + w; shapes and modes must match (throws std::invalid_argument).
GridVector add(const GridVector& v, const GridVector& w);

// c * v in v's mode.
GridVector scale(const GridVector& v, const Integer& c);

// Explicit reduction Integers -> ModP.
GridVector reduce_mod_p(const GridVector& v);

}  // namespace tensorgen
