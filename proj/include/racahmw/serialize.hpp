// Machine-readable documents for the CLI and for round-trip tests. All
// exact values are serialized in the canonical "p/q" form; floating-point
// companions appear only under the explicit approx flag.

#pragma once

#include <string>
#include <vector>

#include "racahmw/lpbound.hpp"
#include "racahmw/oracle.hpp"
#include "racahmw/pieri.hpp"
#include "racahmw/transform.hpp"

namespace rmw {

std::string matrix_to_json(const MacWilliamsMatrix& M, bool approx = false);

/// Parses a matrix document and cross-validates the redundant fields
/// (dimV, d, x) against the parameters; throws std::invalid_argument on
/// malformed or inconsistent input.
MacWilliamsMatrix matrix_from_json(const std::string& text);

/// Header "b\a,0,1,...,n", then one row of "p/q" entries per matrix row.
std::string matrix_to_csv(const MacWilliamsMatrix& M);

std::string sector_table_to_json(const ModelParams& params, const SectorTable& table,
                                 bool approx = false);
std::string sector_table_to_csv(const ModelParams& params, const SectorTable& table);

std::string check_reports_to_json(const ModelParams& params,
                                  const std::vector<CheckReport>& reports,
                                  const std::vector<std::string>& skipped = {});

/// One result object per (q, n) of a verification sweep.
std::string sweep_to_json(const std::vector<std::string>& per_model_documents, bool pass);

std::string pieri_to_json(const ModelParams& params, int b);

std::string oracle_report_to_json(const OracleReport& report, int cap);

std::string lp_result_to_json(const LPInstance& instance, const LPResult& result);

}  // namespace rmw
