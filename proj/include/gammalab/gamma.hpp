#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammalab/graph.hpp"
#include "gammalab/labeling.hpp"
#include "gammalab/monomial.hpp"
#include "json.hpp"

namespace gammalab {

/// The graph on minimal primes, adjacent when p + q has height one.
struct GammaGraph {
    Graph graph;
    std::vector<VarSet> vertex_primes;  // vertex i is vertex_primes[i]
};

/// Vertices follow the canonical prime order; p ~ q iff |p u q| = c + 1.
GammaGraph gamma_from_ring(const RingPresentation& ring);

struct HeightTwoWitness {
    SquareFreeIdeal ideal;
    int height = 0;
    int components = 0;  // components of Spec(R) - V(ideal)
};

struct GammaReport {
    GammaGraph gamma;
    int beta_gamma = 0;
    bool equidimensional = true;

    // Quantities equal to beta_gamma by the component theorem; the first
    // three have no independent computation here.
    int zeta_top_local_cohomology = 0;
    int zeta_canonical_module = 0;
    int max_ideals_s2ification = 0;

    /// max over proper J with ht(J) >= 2 of beta(Spec(R) - V(J)).
    int max_beta_spec = 0;
    bool max_beta_spec_exhaustive = false;
    std::uint64_t ideals_examined = 0;
    int sampled_checks = 0;

    std::optional<HeightTwoWitness> witness;
    std::vector<std::string> notes;
};

struct Realization {
    RingPresentation ring;
    GammaReport report;
};

/// Ring k[[x1..xn]]/I with I the intersection of the label primes. Checks
/// that the minimal primes are exactly the labels and that Gamma is g under
/// vertex v -> label(v).
Realization realize(const Graph& g, const Labeling& labeling, int exhaustive_cap = 0);

/// Components of Spec(R) - V(J R) as a partition of the minimal primes
/// (indices into ring.min_primes). Requires ht(J R) >= 1.
///
/// p + q is the monomial prime P_{p u q}. A prime P outside V(J) containing
/// p and q contains P_{p u q}, which then also avoids J, so p and q lie in a
/// common component exactly when they are joined by a chain of such links;
/// every point of the open set specializes from some surviving minimal prime.
VertexPartition spec_minus_components(const RingPresentation& ring, const SquareFreeIdeal& j);

/// Height-two ideal whose complement has beta(Gamma_R) components.
/// Requires dim(R) >= 2.
SquareFreeIdeal construct_height2_ideal(const RingPresentation& ring);

struct SpecMaximum {
    int max_components = 0;
    std::uint64_t ideals_examined = 0;
    std::optional<SquareFreeIdeal> argmax;
};

/// Exhaustive maximum of beta(Spec(R) - V(J)) over every proper
/// square-free monomial J with ht(J) >= 2. Limited to n_vars <= 6.
SpecMaximum exhaustive_spec_maximum(const RingPresentation& ring);

inline constexpr int kExhaustiveSpecGuard = 6;

/// Default cap for the exhaustive maximum in theorem_report.
inline constexpr int kDefaultExhaustiveCap = 6;

GammaReport theorem_report(const RingPresentation& ring, int exhaustive_cap = kDefaultExhaustiveCap);

nlohmann::json report_to_json(const GammaReport& report);

}  // namespace gammalab
