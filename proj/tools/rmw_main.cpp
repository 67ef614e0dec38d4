// Command-line front end: exact transform construction, identity
// verification sweeps, sector spectrum dumps, tensor-support queries,
// numerical oracle runs, and LP feasibility.
//
// Exit codes: 0 success / all checks pass / feasible; 1 failed check or
// infeasible instance; 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "racahmw/serialize.hpp"

namespace {

using namespace rmw;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    if (r.lo > r.hi) throw std::invalid_argument("");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range: \"" + text + "\" (want lo:hi)");
  }
}

void emit(const std::string& document, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << document;
}

const std::vector<std::string> kAllChecks = {"inv",  "orth", "db",  "recur",
                                             "grid", "col0", "row1"};

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> checks;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), token) == kAllChecks.end())
      throw std::invalid_argument("unknown check: \"" + token + "\"");
    checks.push_back(token);
  }
  if (checks.empty()) throw std::invalid_argument("empty check list");
  return checks;
}

// Runs the selected identity checks; checks needing a spectral grid are
// skipped for n = 0, where the transform is the 1x1 identity.
std::pair<std::vector<CheckReport>, std::vector<std::string>> run_checks(
    const ModelParams& params, const std::vector<std::string>& checks) {
  const MacWilliamsMatrix M = build_matrix(params);
  std::vector<CheckReport> reports;
  std::vector<std::string> skipped;
  for (const auto& name : checks) {
    const bool needs_grid = (name == "recur" || name == "grid" || name == "row1");
    if (needs_grid && params.n == 0) {
      skipped.push_back(name);
      continue;
    }
    if (name == "inv") reports.push_back(verify_involution(M));
    else if (name == "orth") reports.push_back(verify_orthogonality(M));
    else if (name == "db") reports.push_back(verify_detailed_balance(M));
    else if (name == "grid") reports.push_back(check_grid(params));
    else if (name == "col0") reports.push_back(check_col0(M));
    else if (name == "row1") reports.push_back(check_row1(M));
    else if (name == "recur") {
      CheckReport report{"recurrence"};
      try {
        const auto coeffs = extract_recurrence(M, make_sector_table(params));
        for (int b = 0; b < params.n; ++b)
          if (coeffs.forward[b].is_zero()) {
            report.pass = false;
            ++report.violation_count;
            report.witnesses.push_back({b, -1, "0", "nonzero"});
          }
      } catch (const std::runtime_error& e) {
        report.pass = false;
        report.note = e.what();
      }
      reports.push_back(std::move(report));
    }
  }
  return {std::move(reports), std::move(skipped)};
}

LinearConstraint parse_constraint(const std::string& text, int n) {
  // "<c0,c1,...,cn>;<rel>;<rhs>" with rel one of <=, =, >=
  const auto first = text.find(';');
  const auto second = text.find(';', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("malformed constraint: \"" + text +
                                "\" (want coeffs;rel;rhs)");
  LinearConstraint c;
  std::stringstream coeffs(text.substr(0, first));
  std::string token;
  while (std::getline(coeffs, token, ',')) c.coeffs.push_back(Rational::from_string(token));
  if (static_cast<int>(c.coeffs.size()) != n + 1)
    throw std::invalid_argument("constraint needs " + std::to_string(n + 1) +
                                " coefficients");
  const std::string rel = text.substr(first + 1, second - first - 1);
  if (rel == "<=" || rel == "le") c.rel = Relation::LessEq;
  else if (rel == "=" || rel == "==" || rel == "eq") c.rel = Relation::Equal;
  else if (rel == ">=" || rel == "ge") c.rel = Relation::GreaterEq;
  else throw std::invalid_argument("unknown relation: \"" + rel + "\"");
  c.rhs = Rational::from_string(text.substr(second + 1));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Racah/MacWilliams transform toolkit for permutation-invariant qudit codes"};
  app.require_subcommand(1);

  int q = 2, n = 1, b = 0, distance = 1, cap = 200;
  double tol = 1e-8;
  std::string format = "json", output, checks_arg = "inv,orth,db,recur,grid,col0,row1";
  std::string q_range_arg, n_range_arg, profile_arg = "enumerator";
  std::vector<std::string> constraint_args;
  bool approx = false;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--output", output, "write the document to a file instead of stdout");
    if (with_format)
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* matrix_cmd = app.add_subcommand("matrix", "emit the exact transform matrix");
  matrix_cmd->add_option("--q", q, "local dimension")->required();
  matrix_cmd->add_option("--n", n, "block length")->required();
  matrix_cmd->add_flag("--approx", approx, "add floating-point companion fields (json)");
  add_common(matrix_cmd, true);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "emit the sector table");
  spectrum_cmd->add_option("--q", q, "local dimension")->required();
  spectrum_cmd->add_option("--n", n, "block length")->required();
  spectrum_cmd->add_flag("--approx", approx, "add floating-point companion fields (json)");
  add_common(spectrum_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "run exact identity checks");
  verify_cmd->add_option("--q", q, "local dimension");
  verify_cmd->add_option("--n", n, "block length");
  verify_cmd->add_option("--q-range", q_range_arg, "sweep over q (lo:hi)");
  verify_cmd->add_option("--n-range", n_range_arg, "sweep over n (lo:hi)");
  verify_cmd->add_option("--checks", checks_arg, "comma list: inv,orth,db,recur,grid,col0,row1");
  add_common(verify_cmd, false);

  auto* pieri_cmd = app.add_subcommand("pieri", "tensor decomposition and diagonal support");
  pieri_cmd->add_option("--q", q, "local dimension")->required();
  pieri_cmd->add_option("--b", b, "sector index")->required();
  add_common(pieri_cmd, false);

  auto* oracle_cmd = app.add_subcommand("oracle", "numerical brute-force cross-check");
  oracle_cmd->add_option("--q", q, "local dimension")->required();
  oracle_cmd->add_option("--n", n, "block length")->required();
  oracle_cmd->add_option("--tol", tol, "agreement tolerance");
  oracle_cmd->add_option("--cap", cap, "largest admissible symmetric-power dimension");
  add_common(oracle_cmd, false);

  auto* lp_cmd = app.add_subcommand("lp", "exact LP feasibility");
  lp_cmd->add_option("--q", q, "local dimension")->required();
  lp_cmd->add_option("--n", n, "block length")->required();
  lp_cmd->add_option("--distance", distance, "distance parameter")->required();
  lp_cmd->add_option("--profile", profile_arg, "constraint profile");
  lp_cmd->add_option("--constraint", constraint_args,
                     "extra row \"c0,...,cn;rel;rhs\" (repeatable)");
  add_common(lp_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*matrix_cmd) {
      const ModelParams params(q, n);
      const MacWilliamsMatrix M = build_matrix(params);
      emit(format == "csv" ? matrix_to_csv(M) : matrix_to_json(M, approx), output);
      return 0;
    }

    if (*spectrum_cmd) {
      const ModelParams params(q, n);
      const SectorTable table = make_sector_table(params);
      emit(format == "csv" ? sector_table_to_csv(params, table)
                           : sector_table_to_json(params, table, approx),
           output);
      return 0;
    }

    if (*verify_cmd) {
      const auto checks = parse_checks(checks_arg);
      const Range qr = q_range_arg.empty() ? Range{q, q} : parse_range(q_range_arg);
      const Range nr = n_range_arg.empty() ? Range{n, n} : parse_range(n_range_arg);
      const bool sweep = !q_range_arg.empty() || !n_range_arg.empty();

      bool all_pass = true;
      std::vector<std::string> documents;
      for (int qq = qr.lo; qq <= qr.hi; ++qq)
        for (int nn = nr.lo; nn <= nr.hi; ++nn) {
          const ModelParams params(qq, nn);
          auto [reports, skipped] = run_checks(params, checks);
          for (const auto& r : reports) all_pass = all_pass && r.pass;
          documents.push_back(check_reports_to_json(params, reports, skipped));
        }
      emit(sweep ? sweep_to_json(documents, all_pass) : documents.front(), output);
      return all_pass ? 0 : 1;
    }

    if (*pieri_cmd) {
      const ModelParams params(q, 0);
      emit(pieri_to_json(params, b), output);
      return 0;
    }

    if (*oracle_cmd) {
      const ModelParams params(q, n);
      const OracleReport report = oracle_matrix(params, tol, cap);
      emit(oracle_report_to_json(report, cap), output);
      return report.within_tolerance() ? 0 : 1;
    }

    if (*lp_cmd) {
      const ModelParams params(q, n);
      LPInstance instance{params, distance, parse_profile(profile_arg), {}};
      for (const auto& text : constraint_args)
        instance.extra.push_back(parse_constraint(text, n));
      const MacWilliamsMatrix M = build_matrix(params);
      const LPResult result = solve_feasibility(build_lp(instance, M));
      emit(lp_result_to_json(instance, result), output);
      return result.status == LPStatus::Feasible ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ProfileUnknown& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
