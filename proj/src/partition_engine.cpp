#include "tensorgen/partition_engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tensorgen/arith.hpp"

namespace tensorgen {

namespace {

// --- rank-profile oracle -------------------------------------------------
//
// The grid nilpotent N maps the anti-diagonal D_d into D_{d-1}, so
// rank N^r = sum_d dim N^r(D_d). Walking d downward, we carry a flag
//   D_d = Im_{d,0} >= Im_{d,1} >= ... ,   Im_{d,a} = N^a(D_{d+a}),
// as an echelonized list of vectors tagged with the largest age a whose
// image space contains them. One step down maps the flag through the
// sparse rule f_{i,j} -> f_{i-1,j} + f_{i,j-1}, bumps every age, re-
// echelonizes oldest first, and re-adjoins the standard basis at age 0.
// Every matrix touched has at most min(m, n) rows.

struct TaggedVec {
  int age;
  std::vector<long long> v;  // coordinates in the diagonal basis, by i
};

class FlagOracle {
 public:
  FlagOracle(int m, int n, long long p) : m_(m), n_(n), p_(p) {}

  // histo[a] counts flag vectors of final age exactly a over all diagonals.
  std::vector<long long> run() {
    const int top = m_ + n_ - 1;
    std::vector<long long> histo(static_cast<size_t>(top) + 2, 0);
    std::vector<TaggedVec> flag;
    flag.push_back({0, {1}});  // D_{m+n-1} is one-dimensional
    for (int d = top; d >= 2; --d) {
      flag = step_down(flag, d);
      for (const auto& tv : flag) {
        if (tv.age >= 1) ++histo[tv.age];
      }
    }
    return histo;
  }

 private:
  int lo(int d) const { return std::max(1, d + 1 - n_); }
  int hi(int d) const { return std::min(m_, d); }
  int dim(int d) const { return hi(d) - lo(d) + 1; }

  // Image of a D_d coordinate vector under one application of N.
  std::vector<long long> apply_step(const std::vector<long long>& v,
                                    int d) const {
    const int slo = lo(d), tlo = lo(d - 1), thi = hi(d - 1);
    std::vector<long long> w(static_cast<size_t>(dim(d - 1)), 0);
    for (int o = 0; o < static_cast<int>(v.size()); ++o) {
      const long long c = v[o];
      if (c == 0) continue;
      const int i = slo + o;
      // f_{i,j} -> f_{i-1,j} (same j, diagonal drops) ...
      if (i - 1 >= tlo && i - 1 <= thi) w[i - 1 - tlo] = (w[i - 1 - tlo] + c) % p_;
      // ... + f_{i,j-1}.
      if (i >= tlo && i <= thi) w[i - tlo] = (w[i - tlo] + c) % p_;
    }
    return w;
  }

  std::vector<TaggedVec> step_down(const std::vector<TaggedVec>& flag,
                                   int d) const {
    const int tdim = dim(d - 1);
    std::vector<TaggedVec> next;
    next.reserve(static_cast<size_t>(tdim));
    std::vector<int> pivot_of(static_cast<size_t>(tdim), -1);

    auto reduce_and_insert = [&](int age, std::vector<long long> w) {
      for (int c = 0; c < tdim; ++c) {
        if (w[c] == 0) continue;
        const int pr = pivot_of[c];
        if (pr < 0) {
          // New pivot: normalize the leading entry to 1.
          const long long inv = inv_mod(w[c]);
          for (int j = c; j < tdim; ++j) w[j] = w[j] * inv % p_;
          pivot_of[c] = static_cast<int>(next.size());
          next.push_back({age, std::move(w)});
          return;
        }
        const long long f = w[c];
        const auto& pv = next[pr].v;
        for (int j = c; j < tdim; ++j) {
          w[j] = (w[j] - f * pv[j]) % p_;
          if (w[j] < 0) w[j] += p_;
        }
      }
    };

    // Aged images first (the flag is kept sorted by decreasing age), then
    // the fresh standard basis of the target diagonal at age 0.
    for (const auto& tv : flag) {
      reduce_and_insert(tv.age + 1, apply_step(tv.v, d));
    }
    for (int c = 0; c < tdim; ++c) {
      std::vector<long long> e(static_cast<size_t>(tdim), 0);
      e[c] = 1;
      reduce_and_insert(0, std::move(e));
    }
    return next;
  }

  long long inv_mod(long long a) const {
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
      const long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p_ : t;
  }

  int m_, n_;
  long long p_;
};

// --- classifier ----------------------------------------------------------

std::optional<StandardPairWitness> classify_char2(int m, int n) {
  StandardPairWitness w;
  w.p = 2;
  w.m = m;
  w.n = n;
  if (m == 2 && n >= 3 && n % 2 == 1) {
    w.stratum = Stratum::kChar2TwoOdd;
    w.i = 2;
    w.j = 3;
    w.r = (n - 3) / 2;
    return w;
  }
  if (m == 3 && n >= 6 && (n - 6) % 4 == 0) {
    w.stratum = Stratum::kChar2ThreeQuad;
    w.i = 3;
    w.j = 6;
    w.r = (n - 6) / 4;
    return w;
  }
  return std::nullopt;
}

std::optional<StandardPairWitness> classify_odd(int m, int n, long long p) {
  StandardPairWitness w;
  w.p = p;
  w.m = m;
  w.n = n;

  // S_0, first family: (m, d) with 1 < m <= d <= p+1-m, n = d + r p.
  if (m <= p + 1 - m) {
    const int d = m + static_cast<int>((n - m) % p);
    if (d <= p + 1 - m) {
      w.t = 0;
      w.i = m;
      w.j = d;
      w.r = static_cast<int>((n - d) / p);
      w.stratum = w.r == 0 ? Stratum::kS0Base : Stratum::kS0Shifted;
      return w;
    }
  }
  // S_0, second family: (m, p+m-1), n = p+m-1 + r p.
  if (2 * m <= p + 1 && n >= p + m - 1 && (n - (p + m - 1)) % p == 0) {
    w.t = 0;
    w.i = m;
    w.j = static_cast<int>(p) + m - 1;
    w.r = static_cast<int>((n - w.j) / p);
    w.stratum = w.r == 0 ? Stratum::kS0Base : Stratum::kS0Shifted;
    return w;
  }

  // Levels t >= 1: m must match i p^t + (p^t +- 1)/2 with i >= 1.
  long long q = p;
  for (int t = 1; q <= 2 * static_cast<long long>(m); ++t, q *= p) {
    const long long h_plus = (q + 1) / 2, h_minus = (q - 1) / 2;
    for (int sm : {+1, -1}) {
      const long long hm = sm > 0 ? h_plus : h_minus;
      if ((m - hm) % q != 0) continue;
      const long long i = (m - hm) / q;
      if (i < 1 || 2 * i > p - 1) continue;
      for (int sn : {+1, -1}) {
        const long long hn = sn > 0 ? h_plus : h_minus;
        if (n < hn || (n - hn) % q != 0) continue;
        const long long val = (n - hn) / q;  // = j + p r
        const long long j = val % p;
        const long long r = val / p;
        if (j < 1 || j > p - 1 - i) continue;
        // The sign pattern (+,-) on the diagonal j == i is the reversed
        // pair struck from T_1; with at least one translation it is the
        // replacement family instead.
        const bool diag_pm = (sm > 0 && sn < 0 && j == i);
        if (!diag_pm && j < i) continue;
        if (diag_pm && r == 0) continue;
        w.t = t;
        w.i = static_cast<int>(i);
        w.j = static_cast<int>(j);
        w.sign_m = sm;
        w.sign_n = sn;
        if (diag_pm) {
          w.stratum = Stratum::kStT3;
          w.r = static_cast<int>(r - 1);
        } else {
          w.stratum = r == 0 ? Stratum::kStT1 : Stratum::kStShifted;
          w.r = static_cast<int>(r);
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::kS0Base:
      return "S0-base";
    case Stratum::kS0Shifted:
      return "S0-shift";
    case Stratum::kStT1:
      return "St-T1";
    case Stratum::kStT3:
      return "St-T3";
    case Stratum::kStShifted:
      return "St-shift";
    case Stratum::kChar2TwoOdd:
      return "char2-(2,odd)";
    case Stratum::kChar2ThreeQuad:
      return "char2-(3,6+4r)";
  }
  return "?";
}

std::pair<int, int> StandardPairWitness::reconstruct() const {
  long long q = 1;
  for (int a = 0; a < t; ++a) q *= p;
  const long long h_plus = (q + 1) / 2, h_minus = (q - 1) / 2;
  switch (stratum) {
    case Stratum::kS0Base:
    case Stratum::kS0Shifted:
      return {i, static_cast<int>(j + r * p)};
    case Stratum::kStT1:
    case Stratum::kStShifted: {
      const long long mm = i * q + (sign_m > 0 ? h_plus : h_minus);
      const long long nn = j * q + (sign_n > 0 ? h_plus : h_minus) + r * p * q;
      return {static_cast<int>(mm), static_cast<int>(nn)};
    }
    case Stratum::kStT3: {
      const long long mm = i * q + h_plus;
      const long long nn = i * q + h_minus + (1 + r) * p * q;
      return {static_cast<int>(mm), static_cast<int>(nn)};
    }
    case Stratum::kChar2TwoOdd:
      return {2, 3 + 2 * r};
    case Stratum::kChar2ThreeQuad:
      return {3, 6 + 4 * r};
  }
  return {0, 0};
}

std::vector<int> standard_parts(int m, int n) {
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) parts.push_back(m + n + 1 - 2 * i);
  return parts;
}

JordanPartition jordan_partition(int m, int n, long long p,
                                 long long budget) {
  if (m < 2 || m > n) {
    throw std::invalid_argument("jordan_partition: requires 2 <= m <= n");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("jordan_partition: p must be prime");
  }
  const long long cells = static_cast<long long>(m) * n;
  if (cells > budget) {
    throw BudgetError("jordan_partition: grid of " + std::to_string(cells) +
                      " cells exceeds the oracle budget of " +
                      std::to_string(budget));
  }

  const std::vector<long long> histo = FlagOracle(m, n, p).run();
  // rank N^a = number of flag vectors of age >= a.
  std::vector<long long> rank(histo.size() + 1, 0);
  for (int a = static_cast<int>(histo.size()) - 1; a >= 1; --a) {
    rank[a] = rank[a + 1] + histo[a];
  }
  rank[0] = cells;

  // parts >= j has multiplicity rank[j-1] - rank[j].
  std::vector<long long> ge(rank.size(), 0);
  int top = 0;
  for (size_t j = 1; j < rank.size(); ++j) {
    ge[j] = rank[j - 1] - rank[j];
    if (ge[j] < 0 || (j > 1 && ge[j] > ge[j - 1])) {
      throw std::logic_error("jordan_partition: rank profile not monotone");
    }
    if (ge[j] > 0) top = static_cast<int>(j);
  }
  JordanPartition out;
  for (int j = top; j >= 1; --j) {
    const long long mult = ge[j] - (j + 1 <= top ? ge[j + 1] : 0);
    for (long long s = 0; s < mult; ++s) out.parts.push_back(j);
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
  long long sum = 0;
  for (int x : out.parts) sum += x;
  if (sum != cells || static_cast<int>(out.parts.size()) != m) {
    throw std::logic_error("jordan_partition: inconsistent rank profile");
  }
  return out;
}

bool is_standard(const JordanPartition& partition, int m, int n) {
  return partition.parts == standard_parts(m, n);
}

std::optional<StandardPairWitness> classify_standard(int m, int n,
                                                     long long p) {
  if (m < 2 || m > n) {
    throw std::invalid_argument("classify_standard: requires 2 <= m <= n");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("classify_standard: p must be prime");
  }
  return p == 2 ? classify_char2(m, n) : classify_odd(m, n, p);
}

std::vector<StandardPairWitness> enumerate_standard(long long p,
                                                    int max_sum) {
  std::vector<StandardPairWitness> rows;
  for (int m = 2; 2 * m <= max_sum; ++m) {
    for (int n = m; m + n <= max_sum; ++n) {
      if (auto w = classify_standard(m, n, p)) rows.push_back(*w);
    }
  }
  return rows;
}

}  // namespace tensorgen
