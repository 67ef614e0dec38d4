#include "racahmw/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace rmw {

namespace {

using nlohmann::json;

json rational_array(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

json bigint_array(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

json double_array(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_double());
  return arr;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string matrix_to_json(const MacWilliamsMatrix& M, bool approx) {
  const int n = M.n();
  json doc;
  doc["q"] = M.params.q;
  doc["n"] = n;
  doc["dimV"] = dim_vn(M.params).get_str();
  json d = json::array();
  for (int a = 0; a <= n; ++a) d.push_back(sector_dim(M.params, a).get_str());
  doc["d"] = std::move(d);
  doc["x"] = (n >= 1) ? rational_array(spectral_grid(M.params).x) : json::array();
  json entries = json::array();
  for (const auto& row : M.entries) entries.push_back(rational_array(row));
  doc["entries"] = std::move(entries);
  if (approx) {
    json rows = json::array();
    for (const auto& row : M.entries) rows.push_back(double_array(row));
    doc["entries_approx"] = std::move(rows);
  }
  return dump(doc);
}

MacWilliamsMatrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix document: ") + e.what());
  }
  if (!doc.contains("q") || !doc.contains("n") || !doc.contains("entries"))
    throw std::invalid_argument("matrix document is missing q, n, or entries");
  const ModelParams params(doc["q"].get<int>(), doc["n"].get<int>());
  const int n = params.n;

  MacWilliamsMatrix M{params, {}};
  const auto& entries = doc["entries"];
  if (static_cast<int>(entries.size()) != n + 1)
    throw std::invalid_argument("entry row count does not match n");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n + 1)
      throw std::invalid_argument("entry column count does not match n");
    std::vector<Rational> r;
    r.reserve(n + 1);
    for (const auto& cell : row) r.push_back(Rational::from_string(cell.get<std::string>()));
    M.entries.push_back(std::move(r));
  }

  if (doc.contains("dimV") &&
      Rational::from_string(doc["dimV"].get<std::string>()) != Rational(dim_vn(params)))
    throw std::invalid_argument("dimV field inconsistent with parameters");
  if (doc.contains("d")) {
    const auto& d = doc["d"];
    if (static_cast<int>(d.size()) != n + 1)
      throw std::invalid_argument("d field inconsistent with parameters");
    for (int a = 0; a <= n; ++a)
      if (Rational::from_string(d[a].get<std::string>()) != Rational(sector_dim(params, a)))
        throw std::invalid_argument("d field inconsistent with parameters");
  }
  if (doc.contains("x") && n >= 1) {
    const auto grid = spectral_grid(params).x;
    const auto& x = doc["x"];
    if (static_cast<int>(x.size()) != n + 1)
      throw std::invalid_argument("x field inconsistent with parameters");
    for (int a = 0; a <= n; ++a)
      if (Rational::from_string(x[a].get<std::string>()) != grid[a])
        throw std::invalid_argument("x field inconsistent with parameters");
  }
  return M;
}

std::string matrix_to_csv(const MacWilliamsMatrix& M) {
  const int n = M.n();
  std::string out = "b\\a";
  for (int a = 0; a <= n; ++a) out += "," + std::to_string(a);
  out += "\n";
  for (const auto& row : M.entries) {
    for (int a = 0; a <= n; ++a) {
      if (a > 0) out += ",";
      out += row[a].str();
    }
    out += "\n";
  }
  return out;
}

std::string sector_table_to_json(const ModelParams& params, const SectorTable& table,
                                 bool approx) {
  json doc;
  doc["q"] = params.q;
  doc["n"] = params.n;
  doc["dimV"] = table.dimV.get_str();
  doc["d"] = bigint_array(table.d);
  doc["y"] = bigint_array(table.y);
  doc["x"] = rational_array(table.x);
  doc["cV"] = table.cV.str();
  doc["c"] = rational_array(table.c);
  doc["A"] = table.A.str();
  doc["B"] = table.B.str();
  if (approx) {
    doc["x_approx"] = double_array(table.x);
    doc["cV_approx"] = table.cV.to_double();
    doc["A_approx"] = table.A.to_double();
    doc["B_approx"] = table.B.to_double();
  }
  return dump(doc);
}

std::string sector_table_to_csv(const ModelParams& params, const SectorTable& table) {
  std::string out = "a,d,y,x,c\n";
  for (int a = 0; a <= params.n; ++a) {
    out += std::to_string(a) + "," + table.d[a].get_str() + "," + table.y[a].get_str() +
           "," + table.x[a].str() + "," + table.c[a].str() + "\n";
  }
  return out;
}

std::string check_reports_to_json(const ModelParams& params,
                                  const std::vector<CheckReport>& reports,
                                  const std::vector<std::string>& skipped) {
  json doc;
  doc["q"] = params.q;
  doc["n"] = params.n;
  bool all_pass = true;
  json checks = json::array();
  for (const auto& report : reports) {
    json c;
    c["check"] = report.check;
    c["pass"] = report.pass;
    c["violations"] = report.violation_count;
    if (!report.note.empty()) c["note"] = report.note;
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
      json wj;
      wj["i"] = w.i;
      if (w.j >= 0) wj["j"] = w.j;
      wj["got"] = w.got;
      wj["expected"] = w.expected;
      witnesses.push_back(std::move(wj));
    }
    c["witnesses"] = std::move(witnesses);
    checks.push_back(std::move(c));
    all_pass = all_pass && report.pass;
  }
  doc["checks"] = std::move(checks);
  if (!skipped.empty()) doc["skipped"] = skipped;
  doc["pass"] = all_pass;
  return dump(doc);
}

std::string sweep_to_json(const std::vector<std::string>& per_model_documents, bool pass) {
  json doc;
  json results = json::array();
  for (const auto& text : per_model_documents) results.push_back(json::parse(text));
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  return dump(doc);
}

std::string pieri_to_json(const ModelParams& params, int b) {
  json doc;
  doc["q"] = params.q;
  doc["b"] = b;
  const DynkinLabel start = diagonal_label(params.q, b);
  doc["label"] = start.labels;
  json fund = json::array();
  std::vector<DynkinLabel> composed;
  for (const auto& mid : tensor_fundamental(start)) {
    fund.push_back(mid.labels);
    for (const auto& end : tensor_antifundamental(mid)) composed.push_back(end);
  }
  std::sort(composed.begin(), composed.end());
  doc["tensor_fundamental"] = std::move(fund);
  json comp = json::array();
  for (const auto& label : composed) comp.push_back(label.labels);
  doc["composed"] = std::move(comp);
  json support = json::array();
  for (int r : diagonal_support(params, b)) support.push_back(r);
  doc["support"] = std::move(support);
  return dump(doc);
}

std::string oracle_report_to_json(const OracleReport& report, int cap) {
  json doc;
  doc["q"] = report.params.q;
  doc["n"] = report.params.n;
  doc["dim"] = report.dim;
  doc["tol"] = report.tol;
  doc["cap"] = cap;
  doc["kappa"] = report.kappa;
  doc["matrix"] = report.matrix;
  json dev;
  dev["matrix"] = report.max_abs_deviation;
  dev["grid"] = report.grid_deviation;
  dev["casimir"] = report.casimir_deviation;
  dev["projector"] = report.projector_deviation;
  dev["kappa"] = report.kappa_deviation;
  dev["generator"] = report.generator_deviation;
  doc["deviations"] = std::move(dev);
  doc["pass"] = report.within_tolerance();
  return dump(doc);
}

std::string lp_result_to_json(const LPInstance& instance, const LPResult& result) {
  json doc;
  doc["q"] = instance.params.q;
  doc["n"] = instance.params.n;
  doc["distance"] = instance.distance;
  doc["profile"] = profile_name(instance.profile);
  doc["profile_kind"] = "convention";  // not implied by the transform theory
  json cert;
  if (result.status == LPStatus::Feasible) {
    doc["status"] = "feasible";
    cert["A"] = rational_array(result.point->A);
    cert["B"] = rational_array(result.point->B);
  } else {
    doc["status"] = "infeasible";
    cert["multipliers"] = rational_array(result.farkas->multipliers);
    cert["contradiction"] = result.farkas->contradiction.str();
  }
  doc["certificate"] = std::move(cert);
  return dump(doc);
}

}  // namespace rmw
