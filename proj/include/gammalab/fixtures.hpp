#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammalab/graph.hpp"
#include "gammalab/labeling.hpp"
#include "gammalab/monomial.hpp"
#include "json.hpp"

namespace gammalab {

/// A worked graph example: printed labeling when one is given, else marked
/// not labelable.
struct GraphFixture {
    std::string name;
    Graph graph;
    std::optional<Labeling> labeling;
    bool labelable = true;
};

struct IdealFixture {
    std::string name;
    SquareFreeIdeal ideal;
    std::string gamma_graph6;  // expected Gamma_R
};

/// The 21 connected five-vertex graphs with their printed labelings, copied
/// verbatim (the labeling printed for "20" does not verify).
/// Vertices are numbered clockwise from the top (0 = top).
std::vector<GraphFixture> five_vertex_gallery();

/// The two printed labelings of petersen_graph() (n = 6, s = 3), verbatim.
/// The first misprints vertex 7 as {2,4,6}; only {2,5,6} fits its
/// neighbours, see petersen_corrected_labeling().
std::vector<Labeling> petersen_fixture_labelings();
Labeling petersen_corrected_labeling();

/// The five-vertex graph with no admissible labeling (vertices A..E = 0..4).
Graph non_labelable_graph();

std::vector<IdealFixture> ideal_fixtures();

nlohmann::json fixtures_to_json();

}  // namespace gammalab
