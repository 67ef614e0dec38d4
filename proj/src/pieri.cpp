#include "racahmw/pieri.hpp"

#include <algorithm>

namespace rmw {

DynkinLabel::DynkinLabel(std::vector<int> l) : labels(std::move(l)) {
  if (labels.empty()) throw std::invalid_argument("Dynkin label needs rank >= 1");
  for (int v : labels)
    if (v < 0) throw std::invalid_argument("Dynkin labels must be non-negative");
}

DynkinLabel diagonal_label(int q, int a) {
  if (q < 2 || a < 0) throw std::invalid_argument("diagonal label needs q >= 2, a >= 0");
  if (q == 2) return DynkinLabel{{2 * a}};
  std::vector<int> l(q - 1, 0);
  l.front() = a;
  l.back() = a;
  return DynkinLabel{std::move(l)};
}

std::optional<int> diagonal_index(const DynkinLabel& label) {
  const auto& l = label.labels;
  if (l.size() == 1) {
    if (l[0] % 2 != 0) return std::nullopt;
    return l[0] / 2;
  }
  if (l.front() != l.back()) return std::nullopt;
  for (std::size_t i = 1; i + 1 < l.size(); ++i)
    if (l[i] != 0) return std::nullopt;
  return l.front();
}

namespace {

void push_if_valid(std::vector<DynkinLabel>& out, std::vector<int> l) {
  if (std::all_of(l.begin(), l.end(), [](int v) { return v >= 0; }))
    out.emplace_back(std::move(l));
}

}  // namespace

std::vector<DynkinLabel> tensor_fundamental(const DynkinLabel& label) {
  const int r = label.rank();  // q - 1 branches plus the first-node increment
  std::vector<DynkinLabel> out;
  out.reserve(r + 1);

  std::vector<int> l = label.labels;
  ++l[0];
  push_if_valid(out, std::move(l));
  for (int k = 0; k + 1 < r; ++k) {
    l = label.labels;
    --l[k];
    ++l[k + 1];
    push_if_valid(out, std::move(l));
  }
  l = label.labels;
  --l[r - 1];
  push_if_valid(out, std::move(l));
  return out;
}

std::vector<DynkinLabel> tensor_antifundamental(const DynkinLabel& label) {
  const int r = label.rank();
  std::vector<DynkinLabel> out;
  out.reserve(r + 1);

  std::vector<int> l = label.labels;
  ++l[r - 1];
  push_if_valid(out, std::move(l));
  for (int k = r - 1; k > 0; --k) {
    l = label.labels;
    ++l[k - 1];
    --l[k];
    push_if_valid(out, std::move(l));
  }
  l = label.labels;
  --l[0];
  push_if_valid(out, std::move(l));
  return out;
}

std::set<int> diagonal_support(const ModelParams& params, int b) {
  if (b < 0) throw std::invalid_argument("sector index must be non-negative");
  std::set<int> support;
  const DynkinLabel start = diagonal_label(params.q, b);
  for (const auto& mid : tensor_fundamental(start))
    for (const auto& end : tensor_antifundamental(mid))
      if (auto r = diagonal_index(end)) support.insert(*r);
  return support;
}

}  // namespace rmw
