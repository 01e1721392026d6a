#include "gammalab/fixtures.hpp"

#include <algorithm>

namespace gammalab {

namespace {

Graph from_one_indexed(int d, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> zero;
    for (auto [a, b] : edges) zero.emplace_back(a - 1, b - 1);
    return Graph(d, zero);
}

Labeling from_strings(const std::vector<std::string>& labels) {
    Labeling out;
    Mask ground = 0;
    for (const auto& text : labels) {
        Mask m = parse_label(text);
        out.labels.push_back(m);
        ground |= m;
        out.s = popcount(m);
    }
    out.n = ground ? 64 - __builtin_clzll(ground) : 0;
    return out;
}

GraphFixture labeled(std::string name, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<std::string>& labels) {
    return {std::move(name), from_one_indexed(5, edges), from_strings(labels), true};
}

GraphFixture unlabeled(std::string name, const std::vector<std::pair<int, int>>& edges) {
    return {std::move(name), from_one_indexed(5, edges), std::nullopt, false};
}

SquareFreeIdeal ideal(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<VarSet> sets;
    for (const auto& g : gens) sets.push_back(VarSet::of(g));
    return SquareFreeIdeal(n, sets);
}

}  // namespace

std::vector<GraphFixture> five_vertex_gallery() {
    return {
        labeled("1", {{1, 5}, {2, 3}, {3, 4}, {4, 5}}, {"12", "56", "45", "34", "23"}),
        labeled("2", {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}, {"12", "15", "45", "34", "23"}),
        labeled("3", {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
                {"1", "5", "4", "3", "2"}),
        labeled("4", {{1, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 2}, {2, 5}}, {"15", "12", "23", "34", "14"}),
        labeled("5", {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {2, 4}},
                {"25", "12", "13", "14", "24"}),
        unlabeled("6", {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {2, 5}}),
        labeled("7", {{1, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 2}, {2, 5}, {1, 3}, {1, 4}},
                {"12", "13", "23", "24", "14"}),
        labeled("8", {{1, 2}, {1, 5}, {3, 4}, {4, 5}, {3, 5}}, {"45", "56", "12", "13", "14"}),
        labeled("9", {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, {"1234", "2348", "1247", "1346", "1235"}),
        labeled("10", {{1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}}, {"156", "123", "234", "345", "135"}),
        labeled("11", {{2, 3}, {3, 4}, {4, 5}, {1, 4}}, {"137", "345", "234", "123", "126"}),
        // Drawn as a 5-cycle with chords 3-5 and 2-4, which repeats (6); the
        // surrounding text calls it K_{2,3}, the one class otherwise missing.
        unlabeled("12", {{1, 2}, {2, 3}, {2, 5}, {1, 4}, {3, 4}, {4, 5}}),
        labeled("13", {{1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {2, 4}},
                {"356", "123", "124", "125", "235"}),
        labeled("14", {{1, 5}, {2, 3}, {2, 5}, {2, 4}, {3, 4}, {4, 5}, {3, 5}},
                {"56", "12", "13", "14", "15"}),
        labeled("15", {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
                {"25", "12", "13", "14", "15"}),
        unlabeled("16", {{1, 5}, {1, 2}, {2, 3}, {3, 5}, {4, 5}, {2, 5}, {2, 4}}),
        unlabeled("17", {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {3, 5}}),
        labeled("18", {{1, 5}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, {"125", "246", "234", "134", "123"}),
        labeled("19", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {2, 4}},
                {"136", "123", "124", "125", "235"}),
        labeled("20", {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}, {"125", "123", "234", "134", "126"}),
        labeled("21", {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}},
                {"1235", "1234", "2346", "1246", "1345"}),
    };
}

std::vector<Labeling> petersen_fixture_labelings() {
    return {
        from_strings({"146", "346", "236", "123", "124", "156", "345", "246", "135", "245"}),
        from_strings({"245", "256", "236", "123", "124", "345", "156", "346", "135", "146"}),
    };
}

Labeling petersen_corrected_labeling() {
    return from_strings({"146", "346", "236", "123", "124", "156", "345", "256", "135", "245"});
}

Graph non_labelable_graph() {
    return Graph(5, {{3, 2}, {2, 0}, {3, 0}, {2, 1}, {1, 0}, {3, 4}, {1, 4}});
}

std::vector<IdealFixture> ideal_fixtures() {
    return {
        {"node", ideal(2, {{1, 2}}), graph6_encode(complete_graph(2))},
        {"two points", ideal(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), graph6_encode(empty_graph(2))},
        {"triangle", ideal(3, {{1, 2, 3}}), graph6_encode(complete_graph(3))},
        {"path", ideal(4, {{1, 2}, {2, 3}, {3, 4}}), graph6_encode(path_graph(3))},
    };
}

nlohmann::json fixtures_to_json() {
    nlohmann::json gallery = nlohmann::json::array();
    for (const auto& f : five_vertex_gallery()) {
        gallery.push_back({{"name", f.name},
                           {"graph6", graph6_encode(f.graph)},
                           {"graph", graph_to_json(f.graph)},
                           {"labelable", f.labelable},
                           {"labeling", f.labeling ? labeling_to_json(*f.labeling) : nlohmann::json()}});
    }
    nlohmann::json petersen = nlohmann::json::array();
    for (const auto& l : petersen_fixture_labelings()) petersen.push_back(labeling_to_json(l));
    nlohmann::json ideals = nlohmann::json::array();
    for (const auto& f : ideal_fixtures()) {
        ideals.push_back({{"name", f.name}, {"ideal", ideal_to_json(f.ideal)}, {"gamma", f.gamma_graph6}});
    }
    return {{"five_vertex_gallery", gallery},
            {"petersen", {{"graph6", graph6_encode(petersen_graph())}, {"labelings", petersen}}},
            {"non_labelable", graph6_encode(non_labelable_graph())},
            {"ideals", ideals}};
}

}  // namespace gammalab
