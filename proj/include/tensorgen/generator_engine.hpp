#pragma once

// Explicit generators for the indecomposable summands of V_m (x) V_n when
// the Jordan partition is standard, with machine-checked certificates.
//
// For 1 <= k <= m let A_k be the binomial transfer matrix between the
// anti-diagonals D_{m+n-k} and D_k, let c_k = (1, -1, ..., (-1)^{k-1})^T
// be the coordinate vector of the kernel vector x_k, and put
// b_k = adj(A_k) c_k. The generator
//
//     y_k = sum_{i=1}^{k} b_k[i] f_{m-k+i, n+1-i}
//
// satisfies N^{m+n-2k} y_k = det(A_k) x_k over Z, unconditionally. When
// det(A_k) is a unit mod p, the orbit of y_k under N spans a summand of
// dimension m+n+1-2k, and for standard pairs the m orbits together span
// the whole grid: that is the decomposition certificate.
//
// det(A_k) also has the closed product form
//     d_k = prod_{l=0}^{k-1} (m+n-2k+l)! l! / ((n-k+l)! (m-k+l)!),
// satisfying C(m+n-k-1, k) d_{k+1} = C(m+n-2k-2, n-k-1) d_k; and for
// standard pairs (odd p) the two sides of that recurrence have equal
// p-adic valuation factor by factor:
//     nu_p(C(m+n-k-1, k)) = nu_p(C(m+n-2k-2, m-k-1)),  0 <= k <= m-1.

#include <stdexcept>
#include <vector>

#include "tensorgen/exact_linalg.hpp"
#include "tensorgen/partition_engine.hpp"
#include "tensorgen/tensor_space.hpp"

namespace tensorgen {

// Thrown when a generator construction is requested for a pair whose
// partition is not standard.
struct NonStandardError : std::domain_error {
  using std::domain_error::domain_error;
};

// Everything checked about one generator y_k.
struct GeneratorCertificate {
  int k = 0;
  int summand_dim = 0;      // m+n+1-2k
  IntMatrix A;              // A_k over Z
  Integer det;              // det(A_k), exact
  std::vector<Integer> c;   // alternating signs
  std::vector<Integer> b;   // adj(A_k) * c
  GridVector y;             // generator over Z
  bool theorem_holds = false;    // N^{m+n-2k} y == det * x_k over Z
  bool det_unit_mod_p = false;   // det(A_k) != 0 mod p
};

// Certificate that the m orbits jointly decompose the grid over GF(p).
struct DecompositionCertificate {
  ModuleShape shape;
  StandardPairWitness witness;
  std::vector<GeneratorCertificate> generators;
  std::vector<int> parts;        // claimed summand dimensions, k = 1..m
  std::vector<bool> orbit_ok;    // per k: N^dim y = 0 and N^{dim-1} y != 0
  int spanning_rank = 0;         // rank of all m+n... orbit vectors; mn when certified
  bool certified = false;
};

// Alternating column (1, -1, ..., (-1)^{k-1})^T; the coordinates of x_k
// in the ordered basis of D_k.
std::vector<Integer> c_vector(int k);

// b_k = adj(A_k) c_k. 1 <= k <= m.
std::vector<Integer> b_vector(const ModuleShape& shape, int k);

// The generator y_k over Z, supported on the ordered basis of D_{m+n-k}.
GridVector y_generator(const ModuleShape& shape, int k);

// Builds y_k and checks N^{m+n-2k} y_k == det(A_k) x_k exactly over Z,
// plus the unit-determinant test mod p.
GeneratorCertificate verify_theorem1(const ModuleShape& shape, int k);

// Closed product formula for det(A_k), 0 <= k <= m. Evaluated with exact
// rational cancellation; throws std::logic_error if the product fails to
// be an integer.
Integer d_formula(const ModuleShape& shape, int k);

// Checks C(m+n-k-1, k) d_{k+1} == C(m+n-2k-2, n-k-1) d_k. 0 <= k <= m-1.
bool check_d_recurrence(const ModuleShape& shape, int k);

// Checks nu_p(C(m+n-k-1, k)) == nu_p(C(m+n-2k-2, m-k-1)) by carry
// counting. 0 <= k <= m-1. Reports; holds on standard pairs for odd p.
bool check_valuation_identity(const ModuleShape& shape, int k);

// Full decomposition certificate. Classifies first and throws
// NonStandardError (naming the failed criterion) for non-standard pairs.
// The orbit spanning rank is accumulated per anti-diagonal: orbit vectors
// on distinct diagonals are independent, so the full mn x mn stacked rank
// equals the sum of the small per-diagonal stacked ranks.
DecompositionCertificate decompose(const ModuleShape& shape);

}  // namespace tensorgen
