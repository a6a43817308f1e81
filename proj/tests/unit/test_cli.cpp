#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "maxswp/edge_list.hpp"
#include "maxswp/generators.hpp"
#include "maxswp_cli/commands.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace maxswp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "maxswp");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("maxswp_cli_" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string graph(const std::string& name, const Graph& g) const {
        std::ostringstream text;
        write_edge_list(text, g);
        return write(name, text.str());
    }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

json rational(const std::string& num, const std::string& den) { return {{"num", num}, {"den", den}}; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve a path") {
    TempDir dir;
    const std::string p6 = dir.graph("p6.txt", make_path(6));
    const Run r = run({"solve", p6, "--mode", "path"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 6);
    CHECK(j["mode"] == "path");
    CHECK(j["welfare"] == rational("10", "3"));
    CHECK(j["blocks"] == json::parse("[[0,1,2],[3,4,5]]"));
    CHECK(j["runtime_ms"].is_number());
    CHECK(json::parse(run({"solve", p6}).out)["mode"] == "path");
}

TEST_CASE("tree and exact modes agree") {
    TempDir dir;
    const std::string t = dir.graph("t.txt", random_tree(14, 3).graph());
    const json tree = json::parse(run({"solve", t, "--mode", "tree"}).out);
    const json exact = json::parse(run({"solve", t, "--mode", "exact", "--threads", "2"}).out);
    CHECK(tree["welfare"] == exact["welfare"]);
    CHECK(json::parse(run({"solve", t}).out)["mode"] == "tree");
    const std::string k4 = dir.graph("k4.txt", make_complete(4));
    const json auto_exact = json::parse(run({"solve", k4}).out);
    CHECK(auto_exact["mode"] == "exact");
    CHECK(auto_exact["welfare"] == rational("3", "1"));
}

TEST_CASE("solve error codes") {
    TempDir dir;
    CHECK(run({"solve", dir.file("missing.txt")}).code == cli::kBadInput);
    CHECK(run({"solve", dir.write("bad.txt", "3 1\n0 9\n")}).code == cli::kBadInput);
    const std::string cycle = dir.graph("c25.txt", make_cycle(25));
    const Run big = run({"solve", cycle, "--mode", "exact"});
    CHECK(big.code == cli::kTooLarge);
    CHECK_FALSE(big.err.empty());
    CHECK(run({"solve", cycle}).code == cli::kTooLarge);
    CHECK(run({"solve", cycle, "--mode", "tree"}).code == cli::kBadInput);
    CHECK(run({"solve", cycle, "--mode", "path"}).code == cli::kBadInput);
    CHECK(run({"solve", dir.write("split.txt", "4 2\n0 1\n2 3\n")}).code == cli::kBadInput);
    CHECK(run({"solve", cycle, "--mode", "fast"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("welfare reports") {
    TempDir dir;
    const std::string p4 = dir.graph("p4.txt", make_path(4));
    const Run grand = run({"welfare", p4, dir.write("grand.json", "[[0,1,2,3]]")});
    REQUIRE(grand.code == 0);
    const json g = json::parse(grand.out);
    CHECK(g["welfare"] == rational("13", "6"));
    CHECK(g["average_welfare"] == rational("13", "24"));
    CHECK(g["utilities"][0]["utility"] == rational("11", "24"));
    CHECK(g["blocks"].size() == 1);
    const json split = json::parse(run({"welfare", p4, dir.write("split.json", R"({"blocks": [[0,1],[2,3]]})")}).out);
    CHECK(split["welfare"] == rational("2", "1"));
    CHECK(run({"welfare", p4, dir.write("overlap.json", "[[0,1,2],[2,3]]")}).code == cli::kBadInput);
    CHECK(run({"welfare", p4, dir.write("gap.json", "[[0,1]]")}).code == cli::kBadInput);
    CHECK(run({"welfare", p4, dir.write("dup.json", "[[0,0,1],[2,3]]")}).code == cli::kBadInput);
    CHECK(run({"welfare", p4, dir.write("neg.json", "[[-1,0,1],[2,3]]")}).code == cli::kBadInput);
    CHECK(run({"welfare", p4, dir.write("junk.json", "{not json")}).code == cli::kBadInput);
    CHECK(run({"welfare", p4, dir.write("obj.json", R"({"parts": 1})")}).code == cli::kBadInput);
}

TEST_CASE("solve output round-trips through welfare") {
    TempDir dir;
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const std::string t = dir.graph("t.txt", random_tree(5 + trial * 7, rng()).graph());
        const Run solved = run({"solve", t});
        REQUIRE(solved.code == 0);
        const std::string saved = dir.write("solution.json", solved.out);
        const Run checked = run({"welfare", t, saved});
        REQUIRE(checked.code == 0);
        CHECK(json::parse(checked.out)["welfare"] == json::parse(solved.out)["welfare"]);
    }
}

TEST_CASE("reduce") {
    TempDir dir;
    const std::string sat = dir.write("sat.xsat", "p xsat 3 3\n1 2 3\n1 2 3\n1 2 3\n");
    const Run r = run({"reduce", sat, "--verify", "--output", dir.file("gadget")});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["threshold"] == rational("41", "4"));
    CHECK(j["optimum_equals_threshold"] == true);
    CHECK(j["verify_mode"] == "exact");
    CHECK(j["satisfiable"] == true);
    const Graph gadget = read_edge_list(fs::path(dir.file("gadget.edges")));
    CHECK(gadget.order() == 15);
    CHECK(gadget.size() == 30);
    std::ifstream labels(dir.file("gadget.labels.json"));
    const json l = json::parse(labels);
    CHECK(l["literal_vertices"].size() == 9);
    CHECK(l["clause_vertices"].size() == 3);

    const Run plain = run({"reduce", sat});
    CHECK(plain.code == 0);
    CHECK_FALSE(json::parse(plain.out).contains("optimum"));

    const std::string five =
        dir.write("five.xsat", "p xsat 5 5\n1 2 3\n1 2 4\n1 3 5\n2 4 5\n3 4 5\n");
    const json f = json::parse(run({"reduce", five, "--verify"}).out);
    CHECK(f["verify_mode"] == "forward");
    CHECK_FALSE(f.contains("optimum_equals_threshold"));
    CHECK(f.contains("note"));

    CHECK(run({"reduce", dir.write("bad.xsat", "p xsat 3 3\n1 2 3\n")}).code == cli::kBadInput);
    CHECK(run({"reduce", dir.file("none.xsat")}).code == cli::kBadInput);
}

TEST_CASE("bench") {
    const Run r = run({"bench", "--sizes", "100,1000", "--seed", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,runtime_ms");
    std::size_t rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 2);
    const Run empty = run({"bench", "--sizes", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    CHECK(run({"bench"}).out.empty());
    CHECK(run({"bench", "--sizes", "10,abc"}).code == cli::kUsage);
}

}
