#pragma once

// Jordan partitions of V_m (x) V_n and the classification of the pairs
// whose partition is standard, i.e. equal to (m+n-1, m+n-3, ..., n-m+1),
// the generic (characteristic-zero) Clebsch-Gordan shape.
//
// The partition itself is computed by a theory-free oracle: the rank
// profile of the grid nilpotent N over GF(p). Because N is homogeneous of
// degree -1 for the anti-diagonal grading, rank N^r decomposes as the sum
// over diagonals of the ranks of the composite maps D_d -> D_{d-r}; the
// oracle propagates a tagged flag of images down the grading, so no
// matrix larger than min(m, n) is ever eliminated.
//
// The classifier is purely arithmetic. For p = 2 the standard pairs are
// (2, n) with n odd, n >= 3, and (3, 6+4r). For odd p they form the union
// of strata S_t, t >= 0: S_0 is built from the base set
//   {(k, d) : 1 < k <= d <= p+1-k}  union  {(k, p+k-1) : 1 < k <= (p+1)/2}
// translated by multiples of p in the second coordinate, and for t >= 1
// the bases are the pairs (i p^t + (p^t +- 1)/2, j p^t + (p^t +- 1)/2)
// with 1 <= i <= j <= p-i-1 (all four sign choices, minus the reversed
// diagonal pairs with j = i and signs (+,-)), plus the replacement family
// (i p^t + (p^t+1)/2, i p^t + (p^t-1)/2 + p^{t+1}), translated by
// multiples of p^{t+1}.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tensorgen {

// Partition of m*n: weakly decreasing positive parts, one per Jordan block.
struct JordanPartition {
  std::vector<int> parts;

  bool operator==(const JordanPartition&) const = default;
};

// Thrown when the rank-profile oracle is asked for a grid larger than its
// configured budget.
struct BudgetError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Stratum {
  kS0Base,         // (m, d) in the S_0 base set, no translation
  kS0Shifted,      // (m, d + r p), r > 0
  kStT1,           // level-t template pair, no translation
  kStT3,           // replacement family at level t (plus r translations)
  kStShifted,      // level-t template pair with r > 0 translations
  kChar2TwoOdd,    // p = 2: (2, n), n odd >= 3
  kChar2ThreeQuad  // p = 2: (3, 6 + 4r)
};

const char* stratum_name(Stratum s);

// Constructive witness of standardness: enough stratum data to rebuild
// the pair. For S_0 strata i holds m and j the base second coordinate;
// for level-t strata i, j are the template multipliers and sign_m, sign_n
// select between the offsets (p^t+1)/2 and (p^t-1)/2.
struct StandardPairWitness {
  Stratum stratum = Stratum::kS0Base;
  int m = 0, n = 0;
  long long p = 0;
  int t = 0;
  int i = 0, j = 0;
  int r = 0;
  int sign_m = +1, sign_n = +1;

  // Rebuilds (m, n) from the stratum parameters alone.
  std::pair<int, int> reconstruct() const;
};

// The standard partition (m+n-1, m+n-3, ..., n-m+1).
std::vector<int> standard_parts(int m, int n);

// Jordan partition of the grid nilpotent on the m x n grid over GF(p).
// Requires 2 <= m <= n, p prime, and m*n <= budget (else BudgetError).
// Pure rank computation; independent of the classifier.
JordanPartition jordan_partition(int m, int n, long long p,
                                 long long budget = 2500);

bool is_standard(const JordanPartition& partition, int m, int n);

// Arithmetic membership test against the strata above. Returns a witness
// or nullopt; never invokes the oracle.
std::optional<StandardPairWitness> classify_standard(int m, int n,
                                                     long long p);

// All standard pairs with 2 <= m <= n and m+n <= max_sum, sorted
// lexicographically, one witness per pair.
std::vector<StandardPairWitness> enumerate_standard(long long p,
                                                    int max_sum);

}  // namespace tensorgen
