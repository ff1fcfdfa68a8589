#include "tensorgen/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tensorgen/generator_engine.hpp"
#include "tensorgen/partition_engine.hpp"
#include "tensorgen/tensor_space.hpp"

namespace tensorgen {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long long kDefaultBudget = 2500;
constexpr size_t kViolationCap = 50;
constexpr size_t kNonMemberCap = 20;

const std::vector<std::string> kAllChecks = {
    "theorem",  "dets",      "recurrence",
    "valuations", "decompose", "classifier-vs-oracle"};

long long oracle_budget() {
  const char* s = std::getenv("TENSORGEN_ORACLE_BUDGET");
  if (s == nullptr) return kDefaultBudget;
  long long v = 0;
  const char* end = s + std::char_traits<char>::length(s);
  auto [ptr, ec] = std::from_chars(s, end, v);
  if (ec != std::errc() || ptr != end || v <= 0) {
    throw std::invalid_argument(
        "TENSORGEN_ORACLE_BUDGET must be a positive integer, got '" +
        std::string(s) + "'");
  }
  return v;
}

// --- rendering helpers -----------------------------------------------------

ordered_json envelope(const std::string& command, ordered_json inputs,
                      ordered_json result) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  return doc;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// [i, j, coeff] triples sorted by (i, j); decimal strings over Z, plain
// integers mod p.
ordered_json triples_json(const GridVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& [ij, c] : v.terms()) {
    if (v.mode() == CoeffMode::Integers) {
      arr.push_back({ij.first, ij.second, c.str()});
    } else {
      arr.push_back({ij.first, ij.second, static_cast<long long>(c)});
    }
  }
  return arr;
}

std::string triples_plain(const GridVector& v) {
  std::string s;
  for (const auto& [ij, c] : v.terms()) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
         ")*" + c.str();
  }
  return s.empty() ? "0" : s;
}

std::string triples_csv(const GridVector& v) {
  std::string s;
  for (const auto& [ij, c] : v.terms()) {
    if (!s.empty()) s += ';';
    s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
         "," + c.str() + ")";
  }
  return s;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (int x : parts) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

void plain_inputs(std::ostream& out, const std::string& cmd,
                  const ordered_json& inputs) {
  out << cmd << ':';
  for (const auto& [key, val] : inputs.items()) {
    out << ' ' << key << '=';
    if (val.is_string()) {
      out << val.get<std::string>();
    } else {
      out << val.dump();
    }
  }
  out << '\n';
}

// --- partition ---------------------------------------------------------

struct PairArgs {
  long long p = 0;
  int m = 0;
  int n = 0;
  std::optional<int> alpha;
  std::string format = "plain";
};

int cmd_partition(const PairArgs& a, std::ostream& out) {
  const ModuleShape shape = ModuleShape::make(a.m, a.n, a.p, a.alpha);
  const long long budget = oracle_budget();
  const JordanPartition part = jordan_partition(a.m, a.n, a.p, budget);
  const auto witness = classify_standard(a.m, a.n, a.p);
  const bool standard = witness.has_value();
  if (standard != is_standard(part, a.m, a.n)) {
    throw std::logic_error("internal: classifier disagrees with the oracle on (" +
                           std::to_string(a.m) + ", " + std::to_string(a.n) +
                           ") for p=" + std::to_string(a.p));
  }

  ordered_json inputs{{"p", a.p},
                      {"m", a.m},
                      {"n", a.n},
                      {"alpha", shape.alpha},
                      {"budget", budget}};
  ordered_json result;
  result["parts"] = part.parts;
  result["standard"] = standard;
  result["stratum"] =
      standard ? ordered_json(stratum_name(witness->stratum)) : ordered_json();

  if (a.format == "json") {
    emit_json(out, envelope("partition", inputs, result));
  } else if (a.format == "csv") {
    out << "m,n,p,alpha,standard,parts\n"
        << a.m << ',' << a.n << ',' << a.p << ',' << shape.alpha << ','
        << bool_str(standard) << ',' << csv_field(join_parts(part.parts))
        << '\n';
  } else {
    plain_inputs(out, "partition", inputs);
    out << "parts: " << join_parts(part.parts) << '\n';
    out << "standard: " << bool_str(standard) << '\n';
    out << "stratum: " << (standard ? stratum_name(witness->stratum) : "-")
        << '\n';
  }
  return 0;
}

// --- generators ---------------------------------------------------------

int cmd_generators(const PairArgs& a, std::ostream& out) {
  const ModuleShape shape = ModuleShape::make(a.m, a.n, a.p, a.alpha);
  const DecompositionCertificate cert = decompose(shape);

  ordered_json inputs{
      {"p", a.p}, {"m", a.m}, {"n", a.n}, {"alpha", shape.alpha}};
  ordered_json gens = ordered_json::array();
  for (size_t idx = 0; idx < cert.generators.size(); ++idx) {
    const GeneratorCertificate& g = cert.generators[idx];
    ordered_json e;
    e["k"] = g.k;
    e["summand_dim"] = g.summand_dim;
    e["det"] = g.det.str();
    e["det_unit_mod_p"] = g.det_unit_mod_p;
    e["theorem_holds"] = g.theorem_holds;
    e["orbit_ok"] = static_cast<bool>(cert.orbit_ok[idx]);
    ordered_json b = ordered_json::array();
    for (const Integer& x : g.b) b.push_back(x.str());
    e["b"] = std::move(b);
    e["y"] = triples_json(g.y);
    e["y_mod_p"] = triples_json(reduce_mod_p(g.y));
    gens.push_back(std::move(e));
  }
  ordered_json result;
  result["stratum"] = stratum_name(cert.witness.stratum);
  result["parts"] = cert.parts;
  result["spanning_rank"] = cert.spanning_rank;
  result["certified"] = cert.certified;
  result["generators"] = std::move(gens);

  if (a.format == "json") {
    emit_json(out, envelope("generators", inputs, result));
  } else if (a.format == "csv") {
    out << "k,summand_dim,det,det_unit_mod_p,theorem_holds,orbit_ok,y,"
           "y_mod_p\n";
    for (size_t idx = 0; idx < cert.generators.size(); ++idx) {
      const GeneratorCertificate& g = cert.generators[idx];
      out << g.k << ',' << g.summand_dim << ',' << g.det.str() << ','
          << bool_str(g.det_unit_mod_p) << ',' << bool_str(g.theorem_holds)
          << ',' << bool_str(cert.orbit_ok[idx]) << ','
          << csv_field(triples_csv(g.y)) << ','
          << csv_field(triples_csv(reduce_mod_p(g.y))) << '\n';
    }
  } else {
    plain_inputs(out, "generators", inputs);
    out << "stratum: " << stratum_name(cert.witness.stratum) << '\n';
    out << "parts: " << join_parts(cert.parts) << '\n';
    out << "certified: " << bool_str(cert.certified) << " (spanning rank "
        << cert.spanning_rank << " of " << a.m * a.n << ")\n";
    for (size_t idx = 0; idx < cert.generators.size(); ++idx) {
      const GeneratorCertificate& g = cert.generators[idx];
      out << "k=" << g.k << " dim=" << g.summand_dim << " det=" << g.det.str()
          << " unit=" << bool_str(g.det_unit_mod_p)
          << " theorem=" << bool_str(g.theorem_holds)
          << " orbit=" << bool_str(cert.orbit_ok[idx]) << '\n';
      out << "  y: " << triples_plain(g.y) << '\n';
      out << "  y mod " << a.p << ": " << triples_plain(reduce_mod_p(g.y))
          << '\n';
    }
  }
  return cert.certified ? 0 : 1;
}

// --- enumerate ---------------------------------------------------------

struct EnumArgs {
  long long p = 0;
  int max_sum = 0;
  std::string format = "plain";
};

int cmd_enumerate(const EnumArgs& a, std::ostream& out) {
  if (!is_prime(a.p)) {
    throw std::invalid_argument("enumerate: p must be prime");
  }
  if (a.max_sum < 0) {
    throw std::invalid_argument("enumerate: max-sum must be nonnegative");
  }
  const auto rows = enumerate_standard(a.p, a.max_sum);

  ordered_json inputs{{"p", a.p}, {"max_sum", a.max_sum}};
  if (a.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& w : rows) {
      arr.push_back(ordered_json{{"m", w.m},
                                 {"n", w.n},
                                 {"stratum", stratum_name(w.stratum)},
                                 {"t", w.t},
                                 {"i", w.i},
                                 {"j", w.j},
                                 {"r", w.r}});
    }
    ordered_json result;
    result["count"] = rows.size();
    result["pairs"] = std::move(arr);
    emit_json(out, envelope("enumerate", inputs, result));
  } else if (a.format == "csv") {
    out << "m,n,stratum,t,i,j,r\n";
    for (const auto& w : rows) {
      out << w.m << ',' << w.n << ',' << stratum_name(w.stratum) << ',' << w.t
          << ',' << w.i << ',' << w.j << ',' << w.r << '\n';
    }
  } else {
    plain_inputs(out, "enumerate", inputs);
    out << "count: " << rows.size() << '\n';
    out << std::left << std::setw(4) << "m" << std::setw(4) << "n"
        << std::setw(16) << "stratum" << std::setw(3) << "t" << std::setw(3)
        << "i" << std::setw(3) << "j" << "r" << '\n';
    for (const auto& w : rows) {
      out << std::left << std::setw(4) << w.m << std::setw(4) << w.n
          << std::setw(16) << stratum_name(w.stratum) << std::setw(3) << w.t
          << std::setw(3) << w.i << std::setw(3) << w.j << w.r << '\n';
    }
  }
  return 0;
}

// --- verify ---------------------------------------------------------

struct VerifyArgs {
  std::vector<long long> ps;
  int max_sum = 0;
  std::vector<std::string> checks;
  std::string format = "plain";
};

template <typename F>
void for_pairs(int max_sum, F f) {
  for (int m = 2; 2 * m <= max_sum; ++m) {
    for (int n = m; m + n <= max_sum; ++n) f(m, n);
  }
}

struct ViolationLog {
  long long count = 0;
  ordered_json list = ordered_json::array();

  void add(ordered_json v) {
    ++count;
    if (list.size() < kViolationCap) list.push_back(std::move(v));
  }
};

ordered_json check_entry(long long instances, const ViolationLog& log) {
  ordered_json e;
  e["instances"] = instances;
  e["violation_count"] = log.count;
  e["violations"] = log.list;
  return e;
}

int cmd_verify(const VerifyArgs& a, long long budget, std::ostream& out) {
  for (long long p : a.ps) {
    if (!is_prime(p)) {
      throw std::invalid_argument("verify: p must be prime, got " +
                                  std::to_string(p));
    }
  }
  std::vector<std::string> checks = a.checks.empty() ? kAllChecks : a.checks;
  for (const auto& c : checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) ==
        kAllChecks.end()) {
      std::string valid;
      for (const auto& k : kAllChecks) valid += (valid.empty() ? "" : ", ") + k;
      throw std::invalid_argument("verify: unknown check '" + c +
                                  "' (valid: " + valid + ")");
    }
  }
  auto wanted = [&checks](const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };

  ordered_json inputs{{"p", a.ps},
                      {"max_sum", a.max_sum},
                      {"checks", checks},
                      {"budget", budget}};
  ordered_json checks_obj = ordered_json::object();
  long long total_violations = 0;

  if (wanted("theorem")) {
    long long instances = 0;
    ViolationLog log;
    for (long long p : a.ps) {
      for_pairs(a.max_sum, [&](int m, int n) {
        const ModuleShape shape = ModuleShape::make(m, n, p);
        for (int k = 1; k <= m; ++k) {
          ++instances;
          if (!verify_theorem1(shape, k).theorem_holds) {
            log.add({{"p", p}, {"m", m}, {"n", n}, {"k", k}});
          }
        }
      });
    }
    total_violations += log.count;
    checks_obj["theorem"] = check_entry(instances, log);
  }

  if (wanted("dets")) {
    long long instances = 0;
    ViolationLog log;
    for (long long p : a.ps) {
      for_pairs(a.max_sum, [&](int m, int n) {
        const ModuleShape shape = ModuleShape::make(m, n, p);
        for (int k = 1; k <= m; ++k) {
          ++instances;
          const Integer det = det_int(build_A(shape, k));
          if (det != d_formula(shape, k) || det <= 0) {
            log.add({{"p", p}, {"m", m}, {"n", n}, {"k", k}});
          }
        }
      });
    }
    total_violations += log.count;
    checks_obj["dets"] = check_entry(instances, log);
  }

  if (wanted("recurrence")) {
    long long instances = 0;
    ViolationLog log;
    for (long long p : a.ps) {
      for_pairs(a.max_sum, [&](int m, int n) {
        const ModuleShape shape = ModuleShape::make(m, n, p);
        for (int k = 0; k < m; ++k) {
          ++instances;
          if (!check_d_recurrence(shape, k)) {
            log.add({{"p", p}, {"m", m}, {"n", n}, {"k", k}});
          }
        }
      });
    }
    total_violations += log.count;
    checks_obj["recurrence"] = check_entry(instances, log);
  }

  if (wanted("valuations")) {
    // The valuation identity is an odd-characteristic statement; p = 2 is
    // reported as skipped rather than checked.
    long long member_instances = 0;
    long long nonmember_count = 0;
    ordered_json nonmember = ordered_json::array();
    std::vector<long long> skipped;
    ViolationLog log;
    for (long long p : a.ps) {
      if (p == 2) {
        skipped.push_back(2);
        continue;
      }
      for_pairs(a.max_sum, [&](int m, int n) {
        const ModuleShape shape = ModuleShape::make(m, n, p);
        if (classify_standard(m, n, p).has_value()) {
          for (int k = 0; k < m; ++k) {
            ++member_instances;
            if (!check_valuation_identity(shape, k)) {
              log.add({{"p", p}, {"m", m}, {"n", n}, {"k", k}});
            }
          }
        } else {
          for (int k = 0; k < m; ++k) {
            if (!check_valuation_identity(shape, k)) {
              ++nonmember_count;
              if (nonmember.size() < kNonMemberCap) {
                nonmember.push_back({{"p", p}, {"m", m}, {"n", n}, {"k", k}});
              }
              break;
            }
          }
        }
      });
    }
    total_violations += log.count;
    ordered_json e;
    e["member_instances"] = member_instances;
    e["violation_count"] = log.count;
    e["violations"] = log.list;
    e["nonmember_failure_count"] = nonmember_count;
    e["nonmember_failures"] = std::move(nonmember);
    e["skipped_primes"] = skipped;
    checks_obj["valuations"] = std::move(e);
  }

  if (wanted("decompose")) {
    long long instances = 0;
    ViolationLog log;
    for (long long p : a.ps) {
      for_pairs(a.max_sum, [&](int m, int n) {
        if (!classify_standard(m, n, p).has_value()) return;
        ++instances;
        const DecompositionCertificate cert =
            decompose(ModuleShape::make(m, n, p));
        if (!cert.certified) log.add({{"p", p}, {"m", m}, {"n", n}});
      });
    }
    total_violations += log.count;
    checks_obj["decompose"] = check_entry(instances, log);
  }

  if (wanted("classifier-vs-oracle")) {
    long long instances = 0;
    long long budget_skipped = 0;
    ViolationLog log;
    for (long long p : a.ps) {
      for_pairs(a.max_sum, [&](int m, int n) {
        if (static_cast<long long>(m) * n > budget) {
          ++budget_skipped;
          return;
        }
        ++instances;
        const bool cls = classify_standard(m, n, p).has_value();
        const bool orc = is_standard(jordan_partition(m, n, p, budget), m, n);
        if (cls != orc) {
          log.add({{"p", p},
                   {"m", m},
                   {"n", n},
                   {"classifier_standard", cls},
                   {"oracle_standard", orc}});
        }
      });
    }
    total_violations += log.count;
    ordered_json e = check_entry(instances, log);
    e["budget_skipped"] = budget_skipped;
    checks_obj["classifier-vs-oracle"] = std::move(e);
  }

  ordered_json result;
  result["checks"] = std::move(checks_obj);
  result["violations_total"] = total_violations;

  if (a.format == "json") {
    emit_json(out, envelope("verify", inputs, result));
  } else if (a.format == "csv") {
    out << "check,instances,violation_count\n";
    for (const auto& [name, entry] : result["checks"].items()) {
      const long long inst = entry.contains("instances")
                                 ? entry["instances"].get<long long>()
                                 : entry["member_instances"].get<long long>();
      out << csv_field(name) << ',' << inst << ','
          << entry["violation_count"].get<long long>() << '\n';
    }
  } else {
    plain_inputs(out, "verify", inputs);
    for (const auto& [name, entry] : result["checks"].items()) {
      const long long inst = entry.contains("instances")
                                 ? entry["instances"].get<long long>()
                                 : entry["member_instances"].get<long long>();
      out << "check " << name << ": " << inst << " instances, "
          << entry["violation_count"].get<long long>() << " violations";
      if (entry.contains("nonmember_failure_count")) {
        out << ", " << entry["nonmember_failure_count"].get<long long>()
            << " non-member failures";
      }
      if (entry.contains("budget_skipped")) {
        out << ", " << entry["budget_skipped"].get<long long>()
            << " budget-skipped";
      }
      out << '\n';
      for (const auto& v : entry["violations"]) {
        out << "  violation: " << v.dump() << '\n';
      }
    }
    out << "total violations: " << total_violations << '\n';
  }
  return total_violations == 0 ? 0 : 1;
}

// --- valuations ---------------------------------------------------------

int cmd_valuations(const PairArgs& a, std::ostream& out) {
  const ModuleShape shape = ModuleShape::make(a.m, a.n, a.p, a.alpha);
  const auto witness = classify_standard(a.m, a.n, a.p);
  const bool standard = witness.has_value();
  const bool applicable = a.p != 2;

  ordered_json rows = ordered_json::array();
  bool all_equal = true;
  for (int k = 0; k < a.m; ++k) {
    const Valuation left = binomial_valuation(a.m + a.n - k - 1, k, a.p);
    const Valuation right =
        binomial_valuation(a.m + a.n - 2 * k - 2, a.m - k - 1, a.p);
    all_equal = all_equal && left == right;
    rows.push_back(ordered_json{
        {"k", k}, {"left", left}, {"right", right}, {"equal", left == right}});
  }

  ordered_json inputs{
      {"p", a.p}, {"m", a.m}, {"n", a.n}, {"alpha", shape.alpha}};
  ordered_json result;
  result["standard"] = standard;
  result["stratum"] =
      standard ? ordered_json(stratum_name(witness->stratum)) : ordered_json();
  result["applicable"] = applicable;
  result["rows"] = std::move(rows);
  result["all_equal"] = all_equal;

  if (a.format == "json") {
    emit_json(out, envelope("valuations", inputs, result));
  } else if (a.format == "csv") {
    out << "k,left,right,equal\n";
    for (const auto& r : result["rows"]) {
      out << r["k"].get<int>() << ',' << r["left"].get<long long>() << ','
          << r["right"].get<long long>() << ','
          << bool_str(r["equal"].get<bool>()) << '\n';
    }
  } else {
    plain_inputs(out, "valuations", inputs);
    out << "standard: " << bool_str(standard) << '\n';
    out << "applicable: " << bool_str(applicable) << '\n';
    for (const auto& r : result["rows"]) {
      out << "k=" << r["k"].get<int>() << " left=" << r["left"].get<long long>()
          << " right=" << r["right"].get<long long>()
          << " equal=" << bool_str(r["equal"].get<bool>()) << '\n';
    }
    out << "all equal: " << bool_str(all_equal) << '\n';
  }
  // A failing identity on a standard pair in odd characteristic is a real
  // violation; everything else is a report.
  return (standard && applicable && !all_equal) ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "tensorgen: exact Jordan partitions, summand generators, and "
      "certificates for tensor products of Jordan blocks in characteristic "
      "p"};
  app.require_subcommand(1);

  PairArgs part_args;
  CLI::App* partition =
      app.add_subcommand("partition", "Jordan partition of V_m (x) V_n");
  partition->add_option("--p", part_args.p, "characteristic (prime)")
      ->required();
  partition->add_option("--m", part_args.m, "smaller dimension")->required();
  partition->add_option("--n", part_args.n, "larger dimension")->required();
  partition->add_option("--alpha", part_args.alpha,
                        "group order exponent (default: minimal)");
  partition->add_option("--format", part_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  PairArgs gen_args;
  CLI::App* generators = app.add_subcommand(
      "generators", "summand generators with certificates (standard pairs)");
  generators->add_option("--p", gen_args.p, "characteristic (prime)")
      ->required();
  generators->add_option("--m", gen_args.m, "smaller dimension")->required();
  generators->add_option("--n", gen_args.n, "larger dimension")->required();
  generators->add_option("--alpha", gen_args.alpha,
                         "group order exponent (default: minimal)");
  generators->add_option("--format", gen_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "sweep the library invariants");
  verify
      ->add_option("--p", verify_args.ps,
                   "characteristics to sweep (comma separated)")
      ->required()
      ->delimiter(',');
  verify->add_option("--max-sum", verify_args.max_sum, "bound on m+n")
      ->required();
  verify
      ->add_option("--checks", verify_args.checks,
                   "subset of: theorem, dets, recurrence, valuations, "
                   "decompose, classifier-vs-oracle (default: all)")
      ->delimiter(',');
  verify->add_option("--format", verify_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  EnumArgs enum_args;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "table of standard pairs with witnesses");
  enumerate->add_option("--p", enum_args.p, "characteristic (prime)")
      ->required();
  enumerate->add_option("--max-sum", enum_args.max_sum, "bound on m+n")
      ->required();
  enumerate->add_option("--format", enum_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  PairArgs val_args;
  CLI::App* valuations = app.add_subcommand(
      "valuations", "binomial valuation identity report for one pair");
  valuations->add_option("--p", val_args.p, "characteristic (prime)")
      ->required();
  valuations->add_option("--m", val_args.m, "smaller dimension")->required();
  valuations->add_option("--n", val_args.n, "larger dimension")->required();
  valuations->add_option("--alpha", val_args.alpha,
                         "group order exponent (default: minimal)");
  valuations->add_option("--format", val_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(partition)) return cmd_partition(part_args, out);
    if (app.got_subcommand(generators)) return cmd_generators(gen_args, out);
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_args, oracle_budget(), out);
    }
    if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_args, out);
    if (app.got_subcommand(valuations)) return cmd_valuations(val_args, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const NonStandardError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tensorgen
