#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/graph.hpp"
#include "gammalab/labeling.hpp"

namespace gammalab {

enum class Dedupe {
    none,        // raw search output; one ground-set orbit may appear several times
    ground_set,  // quotient by permutations of {1..n}
    full,        // additionally quotient by automorphisms of the graph
};

const char* to_string(Dedupe mode);
Dedupe dedupe_from_string(const std::string& text);

struct SearchConfig {
    /// Label sizes to try per component; empty selects the default
    /// {1 if the component is complete} + {2..d-1}, or {1} for d = 1.
    std::vector<int> s_values;
    /// Largest ground set tried per component; default s + d - 1.
    std::optional<int> n_cap;
    Dedupe dedupe = Dedupe::none;
    /// 0 stops at the first labeling; otherwise collect up to `limit`.
    int limit = 0;
    std::uint64_t node_budget = 100'000'000;
    std::optional<std::chrono::milliseconds> time_budget;
};

/// One (component, s, n range) box that was searched to completion.
struct ExhaustedSpace {
    int component = 0;
    int s = 0;
    int n_max = 0;

    friend bool operator==(const ExhaustedSpace&, const ExhaustedSpace&) = default;
};

struct SearchOutcome {
    enum class Status { found, exhausted, budget_exceeded };

    Status status = Status::exhausted;
    std::vector<Labeling> solutions;
    std::uint64_t nodes_explored = 0;
    /// For exhausted: every box searched without success.
    std::vector<ExhaustedSpace> certificate;
};

const char* to_string(SearchOutcome::Status status);

/// Looks for admissible labelings of g, one connected component at a time;
/// component labelings are combined with compose_components().
SearchOutcome find_labeling(const Graph& g, const SearchConfig& cfg = {});

/// Guards for exhaustive enumeration.
inline constexpr int kEnumerateMaxVertices = 10;
inline constexpr int kEnumerateMaxGround = 12;

/// All admissible labelings with exactly this (s, n), one canonical
/// representative per class of the requested equivalence, sorted.
std::vector<Labeling> enumerate_labelings(const Graph& g, int s, int n, Dedupe up_to);

/// Every labeling found by the raw kernel for exactly (s, n) before any
/// quotienting. Each ground-set orbit is represented at least once.
std::vector<Labeling> enumerate_raw_labelings(const Graph& g, int s, int n);

/// Canonical representative of the orbit of `labeling` under ground-set
/// permutations (and automorphisms of g when `automorphisms` is non-empty).
Labeling canonical_labeling(const Labeling& labeling,
                            const std::vector<std::vector<int>>& automorphisms = {});

std::vector<Labeling> dedupe_labelings(const Graph& g, const std::vector<Labeling>& labelings,
                                       Dedupe mode);

struct Decision {
    bool labelable = false;
    /// Verified labeling of the whole graph when labelable.
    std::optional<Labeling> witness;
    /// When not labelable: the boxes exhausted for each failing component.
    std::vector<ExhaustedSpace> certificate;
    std::vector<int> failing_components;
    std::uint64_t nodes_explored = 0;
};

/// Complete decision procedure. Throws undecided when a component exceeds
/// `component_cap` vertices or the node budget runs out.
Decision decide_labelable(const Graph& g, int component_cap = 10,
                          std::uint64_t node_budget = 100'000'000);

struct ClassRow {
    enum class Verdict { labelable, not_labelable, undecided };

    std::string canonical;  // graph6 of the canonical relabeling
    Graph graph;            // the canonical relabeling itself
    Verdict verdict = Verdict::undecided;
    std::optional<Labeling> witness;
    std::string note;
};

const char* to_string(ClassRow::Verdict verdict);

inline constexpr int kClassifyMaxVertices = 7;

/// Isomorphism classes of graphs on d vertices in canonical form, ordered
/// by edge count then canonical string.
std::vector<Graph> graph_classes(int d, bool connected_only);

/// Runs decide_labelable on every isomorphism class on d vertices.
std::vector<ClassRow> classify_graphs(int d, bool connected_only);

/// Worker count from GAMMALAB_THREADS, else hardware concurrency (at least 1).
int worker_count();

}  // namespace gammalab
