#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"
#include "gammalab/fixtures.hpp"
#include "gammalab/search.hpp"
#include "oracles.hpp"

using namespace gammalab;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.size() + b.size());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
    return g;
}

std::set<int> certificate_sizes(const std::vector<ExhaustedSpace>& boxes) {
    std::set<int> out;
    for (const auto& b : boxes) out.insert(b.s);
    return out;
}

}  // namespace

TEST_CASE("find_labeling basics") {
    auto k3 = find_labeling(complete_graph(3));
    REQUIRE(k3.status == SearchOutcome::Status::found);
    CHECK(k3.solutions.front().s == 1);
    CHECK(verify_labeling(complete_graph(3), k3.solutions.front()).ok());

    auto empty = find_labeling(Graph(0));
    REQUIRE(empty.status == SearchOutcome::Status::found);
    CHECK(empty.solutions.front().n == 0);

    SearchConfig cfg;
    cfg.s_values = {3};
    cfg.n_cap = 6;
    auto petersen = find_labeling(petersen_graph(), cfg);
    REQUIRE(petersen.status == SearchOutcome::Status::found);
    CHECK(petersen.solutions.front().n == 6);

    auto nl = find_labeling(non_labelable_graph());
    CHECK(nl.status == SearchOutcome::Status::exhausted);
    CHECK(nl.solutions.empty());
    CHECK(certificate_sizes(nl.certificate) == std::set<int>{2, 3, 4});
    for (const auto& box : nl.certificate) CHECK(box.n_max == box.s + 4);

    CHECK_THROWS_AS(find_labeling(cycle_graph(4), SearchConfig{{0}}), Error);
}

TEST_CASE("budget exhaustion is never reported as exhaustion") {
    SearchConfig cfg;
    cfg.node_budget = 5;
    auto outcome = find_labeling(non_labelable_graph(), cfg);
    CHECK(outcome.status == SearchOutcome::Status::budget_exceeded);
    CHECK(outcome.certificate.empty());
    CHECK_THROWS_AS(decide_labelable(non_labelable_graph(), 10, 5), Error);

    cfg.node_budget = 1'000'000'000;
    cfg.time_budget = std::chrono::milliseconds(0);
    auto timed = find_labeling(petersen_graph(), cfg);
    CHECK(timed.status != SearchOutcome::Status::exhausted);
}

TEST_CASE("disconnected graphs go component by component") {
    auto two = disjoint_union(cycle_graph(5), star_graph(4));
    auto found = find_labeling(two);
    REQUIRE(found.status == SearchOutcome::Status::found);
    CHECK(verify_labeling(two, found.solutions.front()).ok());

    auto bad = disjoint_union(non_labelable_graph(), complete_graph(2));
    auto decision = decide_labelable(bad);
    CHECK_FALSE(decision.labelable);
    CHECK(decision.failing_components == std::vector<int>{0});
    auto flipped = decide_labelable(disjoint_union(complete_graph(2), non_labelable_graph()));
    CHECK_FALSE(flipped.labelable);
    CHECK(flipped.failing_components == std::vector<int>{1});

    CHECK(decide_labelable(empty_graph(4)).labelable);
}

TEST_CASE("decide_labelable") {
    auto star = decide_labelable(star_graph(5));
    REQUIRE(star.labelable);
    CHECK(verify_labeling(star_graph(5), *star.witness).ok());
    CHECK_FALSE(decide_labelable(non_labelable_graph()).labelable);
    try {
        decide_labelable(cycle_graph(6), 5);
        FAIL("expected undecided");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undecided);
    }
}

TEST_CASE("decision agrees with brute force on every graph with d <= 5") {
    for (int d = 1; d <= 5; ++d) {
        for (const auto& g : graph_classes(d, false)) {
            CAPTURE(graph6_encode(g));
            auto decision = decide_labelable(g);
            CHECK(decision.labelable == oracle::labelable_by_brute_force(g));
            if (decision.labelable) CHECK(oracle::is_admissible(g, *decision.witness));
        }
    }
}

TEST_CASE("larger ground sets add nothing on connected graphs") {
    // n <= s + d - 1 for connected graphs: a brute force with extra room
    // finds labelings of exactly the same graphs.
    for (const auto& g : graph_classes(4, true)) {
        CHECK(oracle::labelable_by_brute_force(g, 2) == oracle::labelable_by_brute_force(g, 0));
    }
}

TEST_CASE("symmetry breaking loses no classes") {
    struct Case {
        Graph g;
        int s, n;
    };
    std::vector<Case> cases = {
        {complete_graph(2), 1, 2}, {cycle_graph(4), 2, 4}, {path_graph(4), 2, 5},
        {path_graph(4), 3, 6},     {star_graph(4), 3, 6},  {cycle_graph(5), 2, 5},
        {complete_graph(3), 2, 4}, {complete_graph(4), 3, 5}, {hamming_graph({2, 2}), 3, 6},
        {empty_graph(2), 2, 4},    {empty_graph(3), 2, 5},  {non_labelable_graph(), 4, 8},
    };
    for (const auto& g : graph_classes(4, true)) {
        for (int s = 1; s <= 3; ++s)
            for (int n = s; n <= s + 3; ++n) cases.push_back({g, s, n});
    }
    for (const auto& [g, s, n] : cases) {
        CAPTURE(graph6_encode(g));
        CAPTURE(s);
        CAPTURE(n);
        auto all = oracle::all_labelings(g, s, n);
        auto raw = enumerate_raw_labelings(g, s, n);
        for (const auto& l : raw) CHECK(oracle::is_admissible(g, l));
        auto ground = enumerate_labelings(g, s, n, Dedupe::ground_set);
        auto full = enumerate_labelings(g, s, n, Dedupe::full);
        CHECK(static_cast<int>(ground.size()) == oracle::orbit_count(all, {}));
        CHECK(static_cast<int>(full.size()) == oracle::orbit_count(all, oracle::automorphisms(g)));
        // Every labeling of the oracle lands on one of the canonical representatives.
        std::set<std::vector<Mask>> reps;
        for (const auto& l : ground) reps.insert(l.labels);
        for (const auto& l : all) CHECK(reps.count(canonical_labeling(l).labels) == 1);
    }
    CHECK(enumerate_labelings(complete_graph(2), 1, 2, Dedupe::full).size() == 1);
    CHECK_THROWS_AS(enumerate_labelings(complete_graph(2), 1, 2, Dedupe::none), Error);
    CHECK_THROWS_AS(enumerate_raw_labelings(empty_graph(11), 2, 12), Error);
    CHECK_THROWS_AS(enumerate_raw_labelings(path_graph(3), 2, 13), Error);
}

TEST_CASE("cycle_labeling(4) is among the C4 classes") {
    auto classes = enumerate_labelings(cycle_graph(4), 2, 4, Dedupe::ground_set);
    auto rep = canonical_labeling(cycle_labeling(4));
    CHECK(std::find(classes.begin(), classes.end(), rep) != classes.end());
}

TEST_CASE("canonical labeling is invariant under ground permutations") {
    auto l = petersen_corrected_labeling();
    auto autos = automorphisms(petersen_graph());
    auto rep = canonical_labeling(l, autos);
    for (const auto& sigma : oracle::all_permutations(6)) {
        Labeling moved = l;
        for (auto& m : moved.labels) {
            Mask out = 0;
            for (int e : bits_of(m)) out |= bit(sigma[e]);
            m = out;
        }
        CHECK(canonical_labeling(moved) == canonical_labeling(l));
        CHECK(canonical_labeling(moved, autos) == rep);
    }
}

TEST_CASE("collecting every solution") {
    SearchConfig cfg;
    cfg.s_values = {2};
    cfg.n_cap = 4;
    cfg.limit = 1000;
    cfg.dedupe = Dedupe::ground_set;
    auto outcome = find_labeling(cycle_graph(4), cfg);
    REQUIRE(outcome.status == SearchOutcome::Status::found);
    CHECK(outcome.solutions == enumerate_labelings(cycle_graph(4), 2, 4, Dedupe::ground_set));

    cfg.limit = 0;
    CHECK(find_labeling(cycle_graph(4), cfg).solutions.size() == 1);
}

TEST_CASE("classification") {
    auto three = classify_graphs(3, false);
    CHECK(three.size() == 4);
    for (const auto& row : three) CHECK(row.verdict == ClassRow::Verdict::labelable);
    auto four = classify_graphs(4, false);
    CHECK(four.size() == 11);
    for (const auto& row : four) {
        CHECK(row.verdict == ClassRow::Verdict::labelable);
        CHECK(verify_labeling(row.graph, *row.witness).ok());
        CHECK(row.canonical == canonical_form(row.graph));
    }
    CHECK_THROWS_AS(classify_graphs(8, true), Error);
}

TEST_CASE("the five-vertex gallery is one graph per connected class") {
    std::map<std::string, bool> labelable;
    for (const auto& r : classify_graphs(5, true)) labelable[r.canonical] = r.verdict == ClassRow::Verdict::labelable;
    std::set<std::string> seen;
    for (const auto& f : five_vertex_gallery()) {
        CAPTURE(f.name);
        auto form = canonical_form(f.graph);
        CHECK(seen.insert(form).second);
        REQUIRE(labelable.count(form));
        CHECK(labelable[form] == f.labelable);
        CHECK(labelable[form] == oracle::labelable_by_brute_force(f.graph));
    }
    CHECK(seen.size() == labelable.size());
    CHECK(canonical_form(five_vertex_gallery()[11].graph) == canonical_form(complete_multipartite_graph({2, 3})));
}

TEST_CASE("classification output does not depend on the thread count") {
    setenv("GAMMALAB_THREADS", "1", 1);
    auto single = classify_graphs(5, true);
    setenv("GAMMALAB_THREADS", "4", 1);
    auto multi = classify_graphs(5, true);
    unsetenv("GAMMALAB_THREADS");
    REQUIRE(single.size() == multi.size());
    for (size_t i = 0; i < single.size(); ++i) {
        CHECK(single[i].canonical == multi[i].canonical);
        CHECK(single[i].verdict == multi[i].verdict);
        CHECK(single[i].witness == multi[i].witness);
    }
}

TEST_CASE("dedupe names") {
    CHECK(dedupe_from_string("ground") == Dedupe::ground_set);
    CHECK(dedupe_from_string("full") == Dedupe::full);
    CHECK(dedupe_from_string("none") == Dedupe::none);
    CHECK(std::string(to_string(Dedupe::ground_set)) == "ground");
    CHECK_THROWS_AS(dedupe_from_string("some"), Error);
}
