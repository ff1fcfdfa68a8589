#pragma once

#include <vector>

#include "tensorgen/arith.hpp"

namespace tensorgen {

// Dense row-major matrix over Z with arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(size_t(r) * size_t(c)) {}

  Integer& at(int r, int c) { return data[size_t(r) * cols + c]; }
  const Integer& at(int r, int c) const { return data[size_t(r) * cols + c]; }

  static IntMatrix identity(int k);

  bool operator==(const IntMatrix&) const = default;
};

// Dense row-major matrix over GF(p); entries are canonical in [0, p).
struct FpMatrix {
  long long p = 0;
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  FpMatrix() = default;
  FpMatrix(long long p_, int r, int c)
      : p(p_), rows(r), cols(c), data(size_t(r) * size_t(c), 0) {}

  long long& at(int r, int c) { return data[size_t(r) * cols + c]; }
  long long at(int r, int c) const { return data[size_t(r) * cols + c]; }

  bool operator==(const FpMatrix&) const = default;
};

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting. Requires a square matrix; det of the 0x0 matrix is 1.
// No rational intermediates, no floating point.
Integer det_int(const IntMatrix& a);

// Adjugate matrix: adjugate_int(a) * a == det_int(a) * I holds exactly,
// including for singular a. The adjugate of a 1x1 matrix is [[1]].
// Requires a square, nonempty matrix.
IntMatrix adjugate_int(const IntMatrix& a);

// Entrywise reduction Z -> GF(p), canonical representatives in [0, p).
FpMatrix reduce_mod_p(const IntMatrix& a, long long p);

// Rank over GF(p) by Gaussian elimination. p must be prime.
int rank_fp(const FpMatrix& a);

// Determinant over GF(p); square input, result canonical in [0, p).
long long det_fp(const FpMatrix& a);

// Rank of the span of equal-length coordinate vectors over GF(p).
// An empty list has rank 0; mismatched lengths throw std::invalid_argument.
// Entries may be any representatives; they are reduced mod p internally.
int stack_rank_fp(const std::vector<std::vector<long long>>& vectors,
                  long long p);

}  // namespace tensorgen
