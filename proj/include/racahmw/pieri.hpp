// Tensor-product support computation on SU(q) Dynkin labels: the two
// Pieri branching rules (defining representation and its dual) and the
// diagonal-support query behind tridiagonality of the degree-one twirl.

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "racahmw/sectors.hpp"

namespace rmw {

/// Highest-weight label of an irreducible SU(q) representation:
/// q-1 non-negative integers.
struct DynkinLabel {
  std::vector<int> labels;

  explicit DynkinLabel(std::vector<int> l);

  int rank() const { return static_cast<int>(labels.size()); }  // q - 1
  bool operator==(const DynkinLabel& o) const { return labels == o.labels; }
  bool operator<(const DynkinLabel& o) const { return labels < o.labels; }
};

/// Label of the diagonal sector (a, 0, ..., 0, a); for q = 2 this is (2a).
DynkinLabel diagonal_label(int q, int a);

/// If the label has the diagonal form (r, 0, ..., 0, r), returns r.
std::optional<int> diagonal_index(const DynkinLabel& label);

/// Branching of label (x) defining representation: increment the first
/// node, shift a unit from node k to node k+1, or decrement the last node;
/// summands with a negative entry are omitted. Multiset, in branch order.
std::vector<DynkinLabel> tensor_fundamental(const DynkinLabel& label);

/// The mirror rule for the dual defining representation (node order
/// reversed). Implemented by its own branches so the reversal identity
/// tensor_antifundamental(l) = reverse(tensor_fundamental(reverse(l)))
/// is a testable statement rather than the definition.
std::vector<DynkinLabel> tensor_antifundamental(const DynkinLabel& label);

/// Indices r of the diagonal constituents of E_b (x) F (x) F*. Contains
/// the diagonal support of E_b (x) Ad, and is a subset of
/// {b-1, b, b+1} intersected with the non-negative integers.
std::set<int> diagonal_support(const ModelParams& params, int b);

}  // namespace rmw
