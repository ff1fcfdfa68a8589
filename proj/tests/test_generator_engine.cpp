#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tensorgen/generator_engine.hpp"

using namespace tensorgen;

TEST_CASE("c_vector alternates signs") {
  CHECK(c_vector(1) == std::vector<Integer>{1});
  CHECK(c_vector(3) == std::vector<Integer>{1, -1, 1});
  CHECK(c_vector(4) == std::vector<Integer>{1, -1, 1, -1});
  CHECK_THROWS_AS(c_vector(0), std::invalid_argument);
}

TEST_CASE("c_vector gives the coordinates of x_k in the low basis") {
  const ModuleShape shape = ModuleShape::make(5, 7, 3);
  for (int k = 1; k <= shape.m; ++k) {
    const GridVector x = x_vector(shape, k);
    const auto basis = basis_low(shape, k);
    const auto c = c_vector(k);
    for (size_t s = 0; s < basis.pairs.size(); ++s) {
      CHECK(x.coeff(basis.pairs[s].first, basis.pairs[s].second) == c[s]);
    }
  }
}

TEST_CASE("b_vector worked values") {
  const ModuleShape s45 = ModuleShape::make(4, 5, 3);
  CHECK(b_vector(s45, 3) == std::vector<Integer>{20, -20, 10});
  CHECK(b_vector(s45, 1) == std::vector<Integer>{1});
  CHECK(b_vector(ModuleShape::make(2, 3, 5), 1) == std::vector<Integer>{1});
}

TEST_CASE("A_k times b_vector is det times c_vector") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {3, 3}, {4, 5}, {5, 8}, {6, 7}}) {
    const ModuleShape shape = ModuleShape::make(m, n, 3);
    for (int k = 1; k <= m; ++k) {
      const IntMatrix A = build_A(shape, k);
      const Integer det = det_int(A);
      const auto b = b_vector(shape, k);
      const auto c = c_vector(k);
      for (int s = 0; s < k; ++s) {
        Integer acc = 0;
        for (int t = 0; t < k; ++t) acc += A.at(s, t) * b[size_t(t)];
        CHECK(acc == det * c[size_t(s)]);
      }
    }
  }
}

TEST_CASE("y_generator worked values and support") {
  const ModuleShape s45 = ModuleShape::make(4, 5, 3);
  const GridVector y3 = y_generator(s45, 3);
  GridVector expect(s45, CoeffMode::Integers);
  expect.add_term(2, 5, 20);
  expect.add_term(3, 4, -20);
  expect.add_term(4, 3, 10);
  CHECK(y3 == expect);
  CHECK(diagonal_support(y3) == s45.m + s45.n - 3);

  // k = m: support runs from f_{1,n} to f_{m,n-m+1}.
  const ModuleShape s36 = ModuleShape::make(3, 6, 2);
  const GridVector ym = y_generator(s36, 3);
  const auto high = basis_high(s36, 3);
  CHECK(high.pairs.front() == std::make_pair(1, 6));
  CHECK(high.pairs.back() == std::make_pair(3, 4));
  for (const auto& [ij, c] : ym.terms()) {
    CHECK(ij.first + ij.second == s36.m + s36.n - 3 + 1);
    CHECK(c != 0);
  }
}

TEST_CASE("verify_theorem1 on the worked example") {
  const ModuleShape s45 = ModuleShape::make(4, 5, 3);
  const GeneratorCertificate cert = verify_theorem1(s45, 3);
  CHECK(cert.theorem_holds);
  CHECK(cert.det == 10);
  CHECK(cert.det_unit_mod_p);  // 10 is a unit mod 3
  CHECK(cert.summand_dim == 4);

  // The same pair in characteristic 5: the integer identity still holds,
  // but 10 vanishes mod 5.
  const GeneratorCertificate cert5 =
      verify_theorem1(ModuleShape::make(4, 5, 5), 3);
  CHECK(cert5.theorem_holds);
  CHECK(cert5.det == 10);
  CHECK_FALSE(cert5.det_unit_mod_p);

  const GeneratorCertificate c23 =
      verify_theorem1(ModuleShape::make(2, 3, 5), 1);
  CHECK(c23.det == 3);
  CHECK(c23.det_unit_mod_p);
  CHECK(c23.theorem_holds);

  // N^{m+n-2k} y_3 lands on det * x_3 = 10 f_{1,3} - 10 f_{2,2} + 10 f_{3,1}.
  const GridVector lhs = apply_N_power(cert.y, 3);
  GridVector expect(s45, CoeffMode::Integers);
  expect.add_term(1, 3, 10);
  expect.add_term(2, 2, -10);
  expect.add_term(3, 1, 10);
  CHECK(lhs == expect);
}

TEST_CASE("theorem holds for every shape and k, standard or not") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const ModuleShape shape = ModuleShape::make(m, n, 3);
      for (int k = 1; k <= m; ++k) {
        const GeneratorCertificate cert = verify_theorem1(shape, k);
        CHECK_MESSAGE(cert.theorem_holds, "(m,n,k)=(", m, ",", n, ",", k, ")");
        CHECK(cert.summand_dim == m + n + 1 - 2 * k);
      }
    }
  }
}

TEST_CASE("d_formula values and bounds") {
  const ModuleShape s45 = ModuleShape::make(4, 5, 3);
  CHECK(d_formula(s45, 0) == 1);
  CHECK(d_formula(s45, 2) == 50);
  CHECK(d_formula(s45, 3) == 10);
  CHECK(d_formula(s45, 4) == 1);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 7}, {6, 6}}) {
    const ModuleShape shape = ModuleShape::make(m, n, 5);
    CHECK(d_formula(shape, m) == 1);
    CHECK(d_formula(shape, 0) == 1);
  }
  CHECK_THROWS_AS(d_formula(s45, 5), std::invalid_argument);
  CHECK_THROWS_AS(d_formula(s45, -1), std::invalid_argument);
}

TEST_CASE("d_formula equals the determinant, and the recurrence holds") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const ModuleShape shape = ModuleShape::make(m, n, 3);
      for (int k = 1; k <= m; ++k) {
        const Integer d = d_formula(shape, k);
        CHECK(d == det_int(build_A(shape, k)));
        CHECK(d > 0);
      }
      for (int k = 0; k < m; ++k) {
        CHECK(check_d_recurrence(shape, k));
      }
    }
  }
}

TEST_CASE("valuation identity spot values") {
  CHECK(check_valuation_identity(ModuleShape::make(2, 3, 5), 1));
  CHECK(check_valuation_identity(ModuleShape::make(2, 3, 5), 0));
  // A non-member where the identity fails: (2,3) for p=3 at k=0 has
  // nu_3(C(4,0)) = 0 but nu_3(C(3,1)) = 1.
  CHECK_FALSE(check_valuation_identity(ModuleShape::make(2, 3, 3), 0));
}

TEST_CASE("valuation identity holds on standard pairs") {
  for (long long p : {3, 5, 7}) {
    for (const auto& w : enumerate_standard(p, 60)) {
      const ModuleShape shape = ModuleShape::make(w.m, w.n, p);
      for (int k = 0; k < w.m; ++k) {
        CHECK_MESSAGE(check_valuation_identity(shape, k),
                      "(m,n,p,k)=(", w.m, ",", w.n, ",", p, ",", k, ")");
      }
    }
  }
}

TEST_CASE("unit determinants on standard pairs") {
  for (long long p : {2, 3, 5, 7}) {
    for (const auto& w : enumerate_standard(p, 30)) {
      const ModuleShape shape = ModuleShape::make(w.m, w.n, p);
      for (int k = 1; k <= w.m; ++k) {
        CHECK(valuation(d_formula(shape, k), p) == 0);
      }
    }
  }
}

TEST_CASE("decompose certifies the worked pairs") {
  const DecompositionCertificate c235 = decompose(ModuleShape::make(2, 3, 5));
  CHECK(c235.certified);
  CHECK(c235.spanning_rank == 6);
  CHECK(c235.parts == std::vector<int>{4, 2});
  REQUIRE(c235.generators.size() == 2);
  CHECK(c235.generators[0].summand_dim == 4);
  CHECK(c235.generators[1].summand_dim == 2);

  const DecompositionCertificate c453 = decompose(ModuleShape::make(4, 5, 3));
  CHECK(c453.certified);
  CHECK(c453.spanning_rank == 20);
  CHECK(c453.parts == std::vector<int>{8, 6, 4, 2});
  for (const auto& g : c453.generators) {
    CHECK(g.theorem_holds);
    CHECK(g.det_unit_mod_p);
  }
  for (bool ok : c453.orbit_ok) CHECK(ok);
}

TEST_CASE("decompose refuses non-standard pairs") {
  CHECK_THROWS_AS(decompose(ModuleShape::make(2, 4, 2)), NonStandardError);
  CHECK_THROWS_AS(decompose(ModuleShape::make(4, 5, 5)), NonStandardError);
  try {
    decompose(ModuleShape::make(2, 4, 2));
    FAIL("expected NonStandardError");
  } catch (const NonStandardError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("not standard") != std::string::npos);
    CHECK(msg.find("(2, 4)") != std::string::npos);
  }
}

TEST_CASE("decompose sweep over small standard pairs") {
  for (long long p : {2, 3, 5, 7}) {
    for (const auto& w : enumerate_standard(p, 24)) {
      const DecompositionCertificate cert =
          decompose(ModuleShape::make(w.m, w.n, p));
      CHECK_MESSAGE(cert.certified, "(m,n,p)=(", w.m, ",", w.n, ",", p, ")");
      CHECK(cert.spanning_rank == w.m * w.n);
      CHECK(cert.parts == standard_parts(w.m, w.n));
      for (size_t k = 0; k < cert.generators.size(); ++k) {
        CHECK(cert.generators[k].summand_dim == cert.parts[k]);
      }
    }
  }
}

TEST_CASE("blocked spanning rank equals the full stacked rank") {
  for (auto [m, n, p] : std::vector<std::tuple<int, int, long long>>{
           {2, 3, 5}, {4, 5, 3}, {3, 6, 2}, {5, 5, 3}, {2, 9, 2}}) {
    const ModuleShape shape = ModuleShape::make(m, n, p);
    const DecompositionCertificate cert = decompose(shape);

    std::vector<std::vector<long long>> stacked;
    for (int k = 1; k <= m; ++k) {
      GridVector v = reduce_mod_p(y_generator(shape, k));
      const int dim = m + n + 1 - 2 * k;
      for (int r = 0; r < dim; ++r) {
        if (r > 0) v = apply_N(v);
        std::vector<long long> coords(static_cast<size_t>(m) * n, 0);
        for (const auto& [ij, c] : v.terms()) {
          coords[static_cast<size_t>(ij.first - 1) * n + (ij.second - 1)] =
              static_cast<long long>(c);
        }
        stacked.push_back(std::move(coords));
      }
    }
    REQUIRE(static_cast<int>(stacked.size()) == m * n);
    CHECK(stack_rank_fp(stacked, p) == cert.spanning_rank);
  }
}
