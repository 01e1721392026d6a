#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gammalab/cli.hpp"
#include "gammalab/fixtures.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/search.hpp"

using namespace gammalab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("gammalab_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

const std::string kC4Ideal = R"({"n_vars":4,"gens":[[1,2],[2,3],[3,4],[1,4]]})";

}  // namespace

TEST_CASE("label matches the library") {
    auto ground = run({"label", "--family", "petersen", "--s", "3", "--all", "--dedupe", "ground"});
    REQUIRE(ground.code == 0);
    auto j = json_of(ground);
    CHECK(j["status"] == "found");
    CHECK(j["count"] == 2);
    auto expected = enumerate_labelings(petersen_graph(), 3, 6, Dedupe::ground_set);
    for (size_t i = 0; i < expected.size(); ++i) CHECK(j["labelings"][i] == labeling_to_json(expected[i]));

    auto full = run({"label", "--family", "petersen", "--s", "3", "--all", "--dedupe", "full"});
    CHECK(json_of(full)["count"] == enumerate_labelings(petersen_graph(), 3, 6, Dedupe::full).size());

    auto text = run({"label", "--family", "cycle,5", "--format", "text"});
    CHECK(text.out == "12 23 34 45 15\n");

    auto nl = run({"label", "--graph6", graph6_encode(non_labelable_graph())});
    REQUIRE(nl.code == 0);
    auto nj = json_of(nl);
    CHECK(nj["status"] == "exhausted");
    CHECK(nj["certificate"].size() == 3);

    auto budget = run({"label", "--graph6", graph6_encode(non_labelable_graph()), "--budget", "3"});
    CHECK(budget.code == 1);
    CHECK(nlohmann::json::parse(budget.err)["error"] == "undecided");
}

TEST_CASE("graph inputs") {
    auto by_family = run({"label", "--family", "star,4", "--format", "text"});
    auto by_graph6 = run({"label", "--graph6", graph6_encode(star_graph(4)), "--format", "text"});
    auto inline_json = run({"label", graph_to_json(star_graph(4)).dump(), "--format", "text"});
    auto path = temp_file("star.json", graph_to_json(star_graph(4)).dump());
    auto by_file = run({"label", "--json", path, "--format", "text"});
    auto positional_file = run({"label", path, "--format", "text"});
    CHECK(by_family.code == 0);
    CHECK(by_family.out == by_graph6.out);
    CHECK(by_family.out == inline_json.out);
    CHECK(by_family.out == by_file.out);
    CHECK(by_family.out == positional_file.out);
}

TEST_CASE("verify") {
    auto labels = labeling_to_json(petersen_corrected_labeling()).dump();
    auto ok = run({"verify", "--family", "petersen", "--labeling", labels});
    CHECK(ok.code == 0);
    CHECK(json_of(ok)["ok"] == true);

    auto printed = labeling_to_json(petersen_fixture_labelings()[0]).dump();
    auto path = temp_file("petersen_printed.json", printed);
    auto bad = run({"verify", "--family", "petersen", path});
    CHECK(bad.code == 1);
    CHECK(json_of(bad)["ok"] == false);
    CHECK(nlohmann::json::parse(bad.err)["error"] == "verification_failed");
}

TEST_CASE("realize, gamma, report and witness") {
    auto labels = labeling_to_json(cycle_labeling(5)).dump();
    auto realized = run({"realize", "--family", "cycle,5", labels});
    REQUIRE(realized.code == 0);
    auto lib = realize(cycle_graph(5), cycle_labeling(5));
    CHECK(json_of(realized)["ring"] == ring_to_json(lib.ring));
    CHECK(json_of(realized)["report"] == report_to_json(lib.report));
    auto text = run({"realize", "--family", "cycle,5", labels, "--format", "text"});
    CHECK(text.out == ring_text(lib.ring) + "\n");

    auto gamma = run({"gamma", kC4Ideal});
    REQUIRE(gamma.code == 0);
    auto gj = json_of(gamma);
    CHECK(gj["graph6"] == "A?");
    for (auto key : {"zeta_H", "zeta_omega", "mspec_T", "max_beta_spec", "beta_gamma"}) {
        CHECK(gj["quantities"][key] == 2);
    }
    CHECK(run({"gamma", kC4Ideal, "--format", "graph6"}).out == "A?\n");

    auto report = run({"report", temp_file("c4.json", kC4Ideal), "--exhaustive-cap", "0"});
    REQUIRE(report.code == 0);
    CHECK(json_of(report)["report"]["quantities"]["max_beta_spec_exhaustive"] == false);

    auto witness = run({"witness", kC4Ideal});
    REQUIRE(witness.code == 0);
    CHECK(json_of(witness)["height"] == 2);
    CHECK(json_of(witness)["components"] == 2);
    CHECK(run({"witness", kC4Ideal, "--format", "text"}).out == "ideal(x1, x2, x3, x4)\n");
}

TEST_CASE("classify") {
    auto r = run({"classify", "--vertices", "5", "--connected"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0, no = 0;
    auto lib = classify_graphs(5, true);
    while (std::getline(lines, line)) {
        auto tab1 = line.find('\t');
        auto tab2 = line.find('\t', tab1 + 1);
        REQUIRE(tab2 != std::string::npos);
        CHECK(line.substr(0, tab1) == lib[rows].canonical);
        std::string verdict = line.substr(tab1 + 1, tab2 - tab1 - 1);
        CHECK(verdict == to_string(lib[rows].verdict));
        if (verdict == "no") {
            ++no;
            CHECK(line.substr(tab2 + 1) == "-");
        } else {
            auto l = labeling_from_json(nlohmann::json::parse(line.substr(tab2 + 1)));
            CHECK(verify_labeling(graph6_decode(line.substr(0, tab1)), l).ok());
        }
        ++rows;
    }
    CHECK(rows == 21);
    CHECK(no == 4);

    auto as_json = run({"classify", "--vertices", "3", "--format", "json"});
    CHECK(json_of(as_json).size() == 4);
}

TEST_CASE("output is byte-stable across runs and thread counts") {
    setenv("GAMMALAB_THREADS", "1", 1);
    auto one = run({"classify", "--vertices", "5"});
    setenv("GAMMALAB_THREADS", "3", 1);
    auto three = run({"classify", "--vertices", "5"});
    unsetenv("GAMMALAB_THREADS");
    CHECK(one.out == three.out);
    CHECK(run({"report", kC4Ideal}).out == run({"report", kC4Ideal}).out);
}

TEST_CASE("families") {
    auto r = run({"families"});
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    CHECK(j["five_vertex_gallery"].size() == 21);
    CHECK(j["petersen"]["labelings"].size() == 2);
    CHECK(j["non_labelable"] == graph6_encode(non_labelable_graph()));
}

TEST_CASE("errors and exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"label", "--family", "petersen", "--wat"}).code == 2);
    CHECK(run({"label", "--family", "petersen", "--graph6", "Bw"}).code == 2);
    CHECK(run({"label"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--vertices", "9"}).code == 2);
    CHECK(run({"label", "--family", "cycle,5", "--dedupe", "maybe"}).code == 2);
    CHECK(run({"label", "--family", "cycle,5", "extra"}).code == 2);
    CHECK(run({"families", "--help"}).code == 0);

    auto mixed = run({"gamma", R"({"n_vars":3,"gens":[[1,2],[1,3]]})"});
    CHECK(mixed.code == 1);
    auto err = nlohmann::json::parse(mixed.err);
    CHECK(err["error"] == "not_equidimensional");
    CHECK(err["detail"].get<std::string>().find("x2*x3") != std::string::npos);

    auto parse = run({"label", "--graph6", "B"});
    CHECK(parse.code == 1);
    CHECK(nlohmann::json::parse(parse.err)["error"] == "parse");
    CHECK(run({"label", "--family", "wheel,4"}).code == 1);
    CHECK(run({"gamma", "/nonexistent/ideal.json"}).code == 1);
    CHECK(run({"witness", R"({"n_vars":2,"gens":[[1,2]]})"}).code == 1);
}
