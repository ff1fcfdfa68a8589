#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "jordan_frozen.h"
#include "tensorgen/exact_linalg.hpp"
#include "tensorgen/partition_engine.hpp"

using namespace tensorgen;

namespace {

std::vector<int> parse_parts(const char* s) {
  std::istringstream in(s);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  return out;
}

// Second, slower partition oracle: the dense matrix of N on the full grid,
// powered up column by column, with ranks from generic elimination. Shares
// no code with the flag-propagation path.
std::vector<int> dense_partition(int m, int n, long long p) {
  const int mn = m * n;
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };

  // B starts as the matrix of N itself: column (i,j) holds the image
  // f_{i-1,j} + f_{i,j-1}.
  std::vector<std::vector<long long>> B(
      static_cast<size_t>(mn), std::vector<long long>(static_cast<size_t>(mn), 0));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i > 1) B[static_cast<size_t>(idx(i - 1, j))]
                  [static_cast<size_t>(idx(i, j))] = 1;
      if (j > 1) B[static_cast<size_t>(idx(i, j - 1))]
                  [static_cast<size_t>(idx(i, j))] = 1;
    }
  }

  std::vector<int> rank{mn};
  while (true) {
    const int r = stack_rank_fp(B, p);
    rank.push_back(r);
    if (r == 0) break;
    // Next power: postcompose with N once more, i.e. replace column (i,j)
    // by column(i-1,j) + column(i,j-1) of the previous power.
    std::vector<std::vector<long long>> next(
        static_cast<size_t>(mn),
        std::vector<long long>(static_cast<size_t>(mn), 0));
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int c = idx(i, j);
        for (int row = 0; row < mn; ++row) {
          long long acc = 0;
          if (i > 1) acc += B[static_cast<size_t>(row)]
                             [static_cast<size_t>(idx(i - 1, j))];
          if (j > 1) acc += B[static_cast<size_t>(row)]
                             [static_cast<size_t>(idx(i, j - 1))];
          next[static_cast<size_t>(row)][static_cast<size_t>(c)] = acc % p;
        }
      }
    }
    B = std::move(next);
  }

  // Multiplicity of parts >= j is rank[j-1] - rank[j].
  std::vector<int> ge(rank.size() + 1, 0);
  for (size_t j = 1; j < rank.size(); ++j) ge[j] = rank[j - 1] - rank[j];
  std::vector<int> parts;
  for (int j = static_cast<int>(rank.size()) - 1; j >= 1; --j) {
    for (int s = 0; s < ge[static_cast<size_t>(j)] -
                            ge[static_cast<size_t>(j) + 1];
         ++s) {
      parts.push_back(j);
    }
  }
  return parts;
}

}  // namespace

TEST_CASE("standard_parts shape") {
  CHECK(standard_parts(4, 5) == std::vector<int>{8, 6, 4, 2});
  CHECK(standard_parts(2, 2) == std::vector<int>{3, 1});
  CHECK(standard_parts(2, 7) == std::vector<int>{8, 6});
  for (int m = 2; m <= 9; ++m) {
    for (int n = m; n <= 11; ++n) {
      const auto parts = standard_parts(m, n);
      REQUIRE(static_cast<int>(parts.size()) == m);
      int sum = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        sum += parts[i];
        if (i > 0) CHECK(parts[i] == parts[i - 1] - 2);
      }
      CHECK(sum == m * n);
      CHECK(parts.front() == m + n - 1);
      CHECK(parts.back() == n - m + 1);
    }
  }
}

TEST_CASE("jordan_partition input validation") {
  CHECK_THROWS_AS(jordan_partition(1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(jordan_partition(5, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(jordan_partition(2, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(jordan_partition(51, 51, 3), BudgetError);
  CHECK_THROWS_AS(jordan_partition(3, 4, 2, 11), BudgetError);
  CHECK_NOTHROW(jordan_partition(3, 4, 2, 12));
}

TEST_CASE("jordan_partition matches the frozen table") {
  for (const auto& row : frozen::kJordanCases) {
    const JordanPartition got = jordan_partition(row.m, row.n, row.p);
    CHECK_MESSAGE(got.parts == parse_parts(row.parts),
                  "(m,n,p)=(", row.m, ",", row.n, ",", row.p, ")");
  }
}

TEST_CASE("flag oracle agrees with a dense matrix oracle") {
  // Small shapes (also triangulating the frozen table) ...
  for (long long p : {2, 3, 5, 7}) {
    for (int m = 2; m <= 6; ++m) {
      for (int n = m; n <= 6; ++n) {
        CHECK(jordan_partition(m, n, p).parts == dense_partition(m, n, p));
      }
    }
  }
  // ... and a few larger ones beyond it.
  for (auto [m, n, p] : std::vector<std::tuple<int, int, long long>>{
           {7, 8, 3}, {9, 10, 2}, {6, 16, 5}, {10, 11, 7}, {12, 13, 3}}) {
    CHECK(jordan_partition(m, n, p).parts == dense_partition(m, n, p));
  }
}

TEST_CASE("partition sums and block count") {
  for (long long p : {2, 3, 5}) {
    for (int m = 2; m <= 8; ++m) {
      for (int n = m; n <= 12; ++n) {
        const auto parts = jordan_partition(m, n, p).parts;
        CHECK(static_cast<int>(parts.size()) == m);
        int sum = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
          sum += parts[i];
          if (i > 0) CHECK(parts[i] <= parts[i - 1]);
        }
        CHECK(sum == m * n);
      }
    }
  }
}

TEST_CASE("classifier agrees with the oracle on the frozen table") {
  for (const auto& row : frozen::kJordanCases) {
    const JordanPartition part{parse_parts(row.parts)};
    const bool oracle_standard = is_standard(part, row.m, row.n);
    const bool classifier_standard =
        classify_standard(row.m, row.n, row.p).has_value();
    CHECK_MESSAGE(oracle_standard == classifier_standard,
                  "(m,n,p)=(", row.m, ",", row.n, ",", row.p, ")");
  }
}

TEST_CASE("classifier agrees with the oracle on a fresh sweep") {
  for (long long p : {2, 3, 5, 7}) {
    for (int m = 2; 2 * m <= 30; ++m) {
      for (int n = m; m + n <= 30; ++n) {
        const bool oracle_standard =
            is_standard(jordan_partition(m, n, p), m, n);
        const bool classifier_standard =
            classify_standard(m, n, p).has_value();
        CHECK_MESSAGE(oracle_standard == classifier_standard,
                      "(m,n,p)=(", m, ",", n, ",", p, ")");
      }
    }
  }
}

TEST_CASE("characteristic 2 families") {
  CHECK(classify_standard(2, 3, 2)->stratum == Stratum::kChar2TwoOdd);
  CHECK(classify_standard(2, 9, 2)->stratum == Stratum::kChar2TwoOdd);
  CHECK(classify_standard(3, 6, 2)->stratum == Stratum::kChar2ThreeQuad);
  CHECK(classify_standard(3, 10, 2)->stratum == Stratum::kChar2ThreeQuad);
  CHECK_FALSE(classify_standard(2, 4, 2).has_value());
  CHECK_FALSE(classify_standard(3, 7, 2).has_value());
  CHECK_FALSE(classify_standard(3, 8, 2).has_value());
  CHECK_FALSE(classify_standard(4, 5, 2).has_value());
  CHECK_FALSE(classify_standard(4, 9, 2).has_value());
}

TEST_CASE("odd characteristic strata spot checks") {
  // Base set pairs.
  const auto w23 = classify_standard(2, 3, 7);
  REQUIRE(w23.has_value());
  CHECK(w23->stratum == Stratum::kS0Base);
  CHECK(w23->t == 0);

  CHECK(classify_standard(2, 2, 3)->stratum == Stratum::kS0Base);
  CHECK(classify_standard(2, 5, 3)->stratum == Stratum::kS0Shifted);
  CHECK(classify_standard(2, 4, 3)->stratum == Stratum::kS0Base);
  CHECK(classify_standard(2, 7, 3)->stratum == Stratum::kS0Shifted);

  // Level t = 1 for p = 3: offsets 2 and 1, so m is 4 or 5.
  const auto w45 = classify_standard(4, 5, 3);
  REQUIRE(w45.has_value());
  CHECK(w45->stratum == Stratum::kStT1);
  CHECK(w45->t == 1);
  CHECK(w45->i == 1);
  CHECK(w45->j == 1);

  CHECK(classify_standard(4, 4, 3)->stratum == Stratum::kStT1);
  CHECK(classify_standard(5, 5, 3)->stratum == Stratum::kStT1);
  CHECK(classify_standard(4, 14, 3)->stratum == Stratum::kStShifted);

  // The reversed diagonal pair needs a translation: (5, 4) is rejected by
  // m <= n, and its replacement is (5, 13).
  const auto w513 = classify_standard(5, 13, 3);
  REQUIRE(w513.has_value());
  CHECK(w513->stratum == Stratum::kStT3);
  CHECK(w513->r == 0);
  CHECK(classify_standard(5, 22, 3)->stratum == Stratum::kStT3);
  CHECK(classify_standard(5, 22, 3)->r == 1);

  // Level t = 2 for p = 3: offsets 5 and 4.
  const auto w1313 = classify_standard(13, 13, 3);
  REQUIRE(w1313.has_value());
  CHECK(w1313->stratum == Stratum::kStT1);
  CHECK(w1313->t == 2);

  // Not standard: the worked counterexample for p = 5.
  CHECK_FALSE(classify_standard(4, 5, 5).has_value());
  CHECK_FALSE(classify_standard(2, 3, 3).has_value());
}

TEST_CASE("witnesses reconstruct their pairs") {
  for (long long p : {2, 3, 5, 7}) {
    const auto rows = enumerate_standard(p, 60);
    for (const auto& w : rows) {
      CHECK(w.p == p);
      CHECK(w.reconstruct() == std::make_pair(w.m, w.n));
    }
    // Sorted lexicographically, no duplicates.
    for (size_t s = 1; s < rows.size(); ++s) {
      const auto a = std::make_pair(rows[s - 1].m, rows[s - 1].n);
      const auto b = std::make_pair(rows[s].m, rows[s].n);
      CHECK(a < b);
    }
  }
}

TEST_CASE("enumerate matches membership") {
  for (long long p : {2, 5}) {
    const auto rows = enumerate_standard(p, 40);
    size_t at = 0;
    for (int m = 2; 2 * m <= 40; ++m) {
      for (int n = m; m + n <= 40; ++n) {
        const bool member = classify_standard(m, n, p).has_value();
        const bool listed = at < rows.size() && rows[at].m == m &&
                            rows[at].n == n;
        CHECK(member == listed);
        if (listed) ++at;
      }
    }
    CHECK(at == rows.size());
  }
}

TEST_CASE("enumerate fixed small tables") {
  const auto p2 = enumerate_standard(2, 12);
  std::vector<std::pair<int, int>> got;
  for (const auto& w : p2) got.emplace_back(w.m, w.n);
  CHECK(got == std::vector<std::pair<int, int>>{
                   {2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 6}});

  const auto p3 = enumerate_standard(3, 5);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].m == 2);
  CHECK(p3[0].n == 2);
  CHECK(p3[0].stratum == Stratum::kS0Base);
}
