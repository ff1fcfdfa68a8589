#include "tensorgen/generator_engine.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace tensorgen {

namespace {

void require_k(int k, int lo, int hi, const char* who) {
  if (k < lo || k > hi) {
    throw std::invalid_argument(std::string(who) + ": k out of range");
  }
}

std::string non_standard_message(const ModuleShape& shape) {
  if (shape.p == 2) {
    return "pair (" + std::to_string(shape.m) + ", " +
           std::to_string(shape.n) +
           ") is not standard for p=2: the standard pairs are (2, n) with "
           "n odd >= 3 and (3, 6+4r)";
  }
  return "pair (" + std::to_string(shape.m) + ", " + std::to_string(shape.n) +
         ") is not standard for p=" + std::to_string(shape.p) +
         ": no stratum S_t covers it (neither the S_0 base set nor any "
         "level-t template with its translations)";
}

}  // namespace

std::vector<Integer> c_vector(int k) {
  if (k < 1) throw std::invalid_argument("c_vector: requires k >= 1");
  std::vector<Integer> c(static_cast<size_t>(k));
  for (int s = 0; s < k; ++s) c[s] = (s % 2 == 0) ? 1 : -1;
  return c;
}

std::vector<Integer> b_vector(const ModuleShape& shape, int k) {
  require_k(k, 1, shape.m, "b_vector");
  const IntMatrix adj = adjugate_int(build_A(shape, k));
  const std::vector<Integer> c = c_vector(k);
  std::vector<Integer> b(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    Integer acc = 0;
    for (int j = 0; j < k; ++j) acc += adj.at(i, j) * c[j];
    b[i] = std::move(acc);
  }
  return b;
}

GridVector y_generator(const ModuleShape& shape, int k) {
  require_k(k, 1, shape.m, "y_generator");
  const std::vector<Integer> b = b_vector(shape, k);
  GridVector y(shape, CoeffMode::Integers);
  // Supported on the ordered basis of D_{m+n-k}: f_{m-k+i, n+1-i}.
  for (int i = 1; i <= k; ++i) {
    y.add_term(shape.m - k + i, shape.n + 1 - i, b[i - 1]);
  }
  return y;
}

GeneratorCertificate verify_theorem1(const ModuleShape& shape, int k) {
  require_k(k, 1, shape.m, "verify_theorem1");
  GeneratorCertificate cert{.k = k,
                            .summand_dim = shape.m + shape.n + 1 - 2 * k,
                            .A = build_A(shape, k),
                            .det = 0,
                            .c = c_vector(k),
                            .b = {},
                            .y = GridVector(shape, CoeffMode::Integers)};
  cert.det = det_int(cert.A);
  const IntMatrix adj = adjugate_int(cert.A);
  cert.b.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    Integer acc = 0;
    for (int j = 0; j < k; ++j) acc += adj.at(i, j) * cert.c[j];
    cert.b[i] = std::move(acc);
  }
  for (int i = 1; i <= k; ++i) {
    cert.y.add_term(shape.m - k + i, shape.n + 1 - i, cert.b[i - 1]);
  }
  const GridVector lhs = apply_N_power(cert.y, shape.m + shape.n - 2 * k);
  const GridVector rhs = scale(x_vector(shape, k), cert.det);
  cert.theorem_holds = (lhs == rhs);
  cert.det_unit_mod_p = (cert.det % shape.p != 0);
  return cert;
}

Integer d_formula(const ModuleShape& shape, int k) {
  require_k(k, 0, shape.m, "d_formula");
  const int m = shape.m, n = shape.n;
  std::vector<Integer> fact(static_cast<size_t>(m + n) + 1);
  fact[0] = 1;
  for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;
  Rational d = 1;
  for (int l = 0; l < k; ++l) {
    d *= Rational(fact[size_t(m + n - 2 * k + l)] * fact[size_t(l)],
                  fact[size_t(n - k + l)] * fact[size_t(m - k + l)]);
  }
  if (denominator(d) != 1) {
    throw std::logic_error("d_formula: product is not an integer");
  }
  return numerator(d);
}

bool check_d_recurrence(const ModuleShape& shape, int k) {
  require_k(k, 0, shape.m - 1, "check_d_recurrence");
  const long long m = shape.m, n = shape.n;
  const Integer lhs = binomial(m + n - k - 1, k) * d_formula(shape, k + 1);
  const Integer rhs =
      binomial(m + n - 2 * k - 2, n - k - 1) * d_formula(shape, k);
  return lhs == rhs;
}

bool check_valuation_identity(const ModuleShape& shape, int k) {
  require_k(k, 0, shape.m - 1, "check_valuation_identity");
  const long long m = shape.m, n = shape.n, p = shape.p;
  // nu_p C(m+n-k-1, k) against nu_p C(m+n-2k-2, m-k-1), via Kummer.
  const long long left = carry_count(k, m + n - 2 * k - 1, p);
  const long long right = carry_count(m - k - 1, n - k - 1, p);
  return left == right;
}

DecompositionCertificate decompose(const ModuleShape& shape) {
  const auto witness = classify_standard(shape.m, shape.n, shape.p);
  if (!witness) throw NonStandardError(non_standard_message(shape));

  DecompositionCertificate cert;
  cert.shape = shape;
  cert.witness = *witness;
  cert.parts = standard_parts(shape.m, shape.n);
  const int mn = shape.m * shape.n;
  bool all_ok = true;

  // Orbit vectors grouped by supporting anti-diagonal. N^r y_k lives in
  // D_{m+n-k-r}; vectors on distinct diagonals are independent, so the
  // stacked rank over all mn orbit vectors is the sum over diagonals of
  // the small per-diagonal stacked ranks.
  std::map<int, std::vector<std::vector<long long>>> by_diagonal;

  for (int k = 1; k <= shape.m; ++k) {
    GeneratorCertificate g = verify_theorem1(shape, k);
    const int dim = g.summand_dim;
    bool ok = g.theorem_holds && g.det_unit_mod_p;

    GridVector v = reduce_mod_p(g.y);
    for (int r = 0; r < dim; ++r) {
      const int d = shape.m + shape.n - k - r;
      if (r > 0) v = apply_N(v);
      if (v.is_zero() || diagonal_support(v) != d) {
        ok = false;
        break;
      }
      const auto basis = diagonal_basis(shape, d);
      std::vector<long long> coords;
      coords.reserve(basis.pairs.size());
      for (const auto& [bi, bj] : basis.pairs) {
        coords.push_back(static_cast<long long>(v.coeff(bi, bj)));
      }
      by_diagonal[d].push_back(std::move(coords));
    }
    // N^dim y must vanish: the orbit closes at the summand dimension.
    const bool nilpotent_ok = ok && apply_N(v).is_zero();
    cert.orbit_ok.push_back(nilpotent_ok);
    all_ok = all_ok && nilpotent_ok;
    cert.generators.push_back(std::move(g));
  }

  int rank = 0;
  for (const auto& [d, vecs] : by_diagonal) {
    rank += stack_rank_fp(vecs, shape.p);
  }
  cert.spanning_rank = rank;
  cert.certified = all_ok && rank == mn;
  return cert;
}

}  // namespace tensorgen
