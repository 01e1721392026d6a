#pragma once

#include <string>
#include <vector>

#include "gammalab/common.hpp"
#include "gammalab/graph.hpp"
#include "json.hpp"

namespace gammalab {

/// Assignment of s-element subsets of the ground set {1..n} to vertices.
///
/// Ground element e is stored as bit e-1 of a label. Raw values may break the
/// admissibility conditions; verify_labeling() decides whether they hold.
struct Labeling {
    int n = 0;
    int s = 0;
    std::vector<Mask> labels;

    int size() const { return static_cast<int>(labels.size()); }

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Builds a labeling from 1-indexed element lists; rejects elements outside 1..n.
Labeling make_labeling(int n, int s, const std::vector<std::vector<int>>& labels);

/// Parses "146" (single digits, n <= 9) or "1,4,6" into a label mask.
Mask parse_label(const std::string& text);

/// "146" when n <= 9, otherwise "1,4,6".
std::string format_label(Mask label, int n);

struct Violation {
    enum class Kind { size, injective, union_, edge, nonedge };
    Kind kind;
    std::vector<int> vertices;
    std::string detail;
};

const char* to_string(Violation::Kind kind);

struct VerificationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks label sizes, injectivity, coverage of {1..n}, and that adjacency
/// coincides with |label(v) & label(w)| == s-1 for every pair.
VerificationReport verify_labeling(const Graph& g, const Labeling& labeling);

/// Throws verification_failed with the first violation unless the labeling verifies.
void require_verified(const Graph& g, const Labeling& labeling);

Labeling path_labeling(int d);
Labeling cycle_labeling(int d);
Labeling complete_labeling(int d);
Labeling empty_labeling(int d);
/// Center is the last vertex, matching star_graph().
Labeling star_labeling(int d);

struct LabeledGraph {
    Graph graph;
    Labeling labeling;
};

/// Hamming graph with one ground element per (part, index) pair.
LabeledGraph hamming_labeling(const std::vector<int>& parts);

/// Labeling of induced_subgraph(g, vertices) with the ground set compacted
/// to {1..n'} in the original relative order.
Labeling restrict_labeling(const Graph& g, const Labeling& labeling, Mask vertices);

/// Rewrites a labeling of a connected graph on d >= 2 vertices to label
/// size d-1 over n-s+d-1 ground elements.
Labeling normalize_labeling(const Graph& g, const Labeling& labeling);

/// Disjoint union of labeled parts; labels are padded to a common size
/// max(2, max s_i) and ground sets shifted past the earlier parts.
LabeledGraph compose_components(const std::vector<LabeledGraph>& parts);

/// Bound checks over connected induced subgraphs on at most max_size vertices
/// (0 means all sizes). Both hold for every admissible labeling.
bool check_union_bound(const Graph& g, const Labeling& labeling, int max_size = 0);
bool check_intersection_bound(const Graph& g, const Labeling& labeling, int max_size = 0);

/// Vertex sets inducing connected subgraphs, sizes 1..max_size (0 = all).
std::vector<Mask> connected_vertex_sets(const Graph& g, int max_size = 0);

nlohmann::json labeling_to_json(const Labeling& labeling);
Labeling labeling_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& report);

/// Intersection of all labels (all ones for an empty labeling).
Mask common_elements(const Labeling& labeling);

}  // namespace gammalab
