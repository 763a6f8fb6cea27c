#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chroma/cli.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string & input = "")
{
    args.insert(args.begin(), "chroma");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = chroma::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string & text)
{
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("compute emits one JSON object per input line")
{
    auto r = run({"compute", "--pattern", "rainbow"}, "Cl\n\nC~\n");
    CHECK(r.code == 0);
    auto out = lines(r.out);
    REQUIRE(out.size() == 2);
    auto first = nlohmann::json::parse(out[0]);
    CHECK(first["graph"] == "Cl");
    CHECK(first["value"] == 2);
    CHECK(first["coloring"] == "0,0,0,1");
    CHECK(nlohmann::json::parse(out[1])["value"] == 1);
}

TEST_CASE("compute handles every pattern and task")
{
    CHECK(nlohmann::json::parse(run({"compute", "-g", "C~", "-p", "monochromatic"}).out)["value"] == 6);
    CHECK(nlohmann::json::parse(run({"compute", "-g", "C~", "-p", "proper", "--task", "disconnect"}).out)["value"] ==
          2);
    CHECK(nlohmann::json::parse(run({"compute", "-g", "Bw", "-p", "proper-rainbow"}).out)["value"] == 3);
    CHECK(nlohmann::json::parse(run({"compute", "-g", "Cl", "--k", "2"}).out)["value"] == 4);
    auto text = run({"compute", "-g", "Cl", "--format", "text"});
    CHECK(text.out == "Cl rainbow connect k=1 mode=edge min value=2 coloring=0,0,0,1 nodes=1\n");
}

TEST_CASE("bad lines are reported with their line number and do not stop the rest")
{
    auto r = run({"compute"}, "Cl\nnot-graph6\nD?\nC~\n");
    CHECK(r.code == 1);
    CHECK(lines(r.out).size() == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("disconnected input graphs are input errors")
{
    auto r = run({"compute", "-g", "C`"});
    CHECK(r.code == 1);
    CHECK(r.err.find("connected") != std::string::npos);
}

TEST_CASE("budget exhaustion ranks above input errors")
{
    auto r = run({"compute", "--budget", "3"}, "IheA@GUAo\nxx\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("budget default comes from the environment")
{
    ::setenv("CHROMA_BUDGET", "2", 1);
    auto r = run({"compute", "-g", "IheA@GUAo"});
    ::setenv("CHROMA_BUDGET", "zero", 1);
    auto bad = run({"compute", "-g", "Cl"});
    ::unsetenv("CHROMA_BUDGET");
    CHECK(r.code == 2);
    CHECK(bad.code == 1);
}

TEST_CASE("verify reports every property of a coloring")
{
    auto r = run({"verify", "-g", "Cl", "--coloring", "0,1,1,0", "--k", "2"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["connected"] == true);
    CHECK(doc["k_connected"] == false);
    CHECK(doc["disconnected"] == true);
    CHECK(doc["proper_edge_coloring"] == true);
    CHECK(doc["proper_rainbow_connected"] == true);
    CHECK(run({"verify", "-g", "Cl", "--coloring", "0,1"}).code == 1);
    CHECK(run({"verify", "-g", "Cl"}).code == 1);
}

TEST_CASE("verify checks a certificate file")
{
    auto computed = run({"compute", "-g", "Cl"});
    auto doc = nlohmann::json::parse(computed.out);
    const std::string path = "cli_certificate_test.json";
    {
        std::ofstream file(path);
        file << doc.dump();
    }
    auto good = run({"verify", "-g", "Cl", "--coloring", doc["coloring"].get<std::string>(), "--certificate", path});
    auto bad = run({"verify", "-g", "Cl", "--coloring", "0,0,1,1", "--certificate", path});
    std::remove(path.c_str());
    CHECK(nlohmann::json::parse(good.out)["certificate_valid"] == true);
    CHECK(nlohmann::json::parse(bad.out)["certificate_valid"] == false);
    CHECK(run({"verify", "-g", "Cl", "--coloring", "0,1,1,0", "--certificate", "missing.json"}).code == 1);
}

TEST_CASE("count, generate and poly")
{
    CHECK(nlohmann::json::parse(run({"count", "-g", "Bo", "--t", "2"}).out)["count"] == 2);
    CHECK(run({"count", "-g", "Bo"}).code == 1);
    auto gen = run({"generate", "--family", "all_connected_up_to", "--params", "4"});
    CHECK(lines(gen.out).size() == 10);
    CHECK(run({"generate", "--family", "petersen"}).out == "IheA@GUAo\n");
    auto poly = nlohmann::json::parse(run({"poly", "-g", "Bw"}).out);
    CHECK(poly["polynomial"] == "0,2,-3,1");
    CHECK(poly["value_at_4"] == "24");
    auto edge = nlohmann::json::parse(run({"poly", "-g", "Bo", "--edge"}).out);
    CHECK(edge["kind"] == "edge");
    CHECK(edge["polynomial"] == "0,-1,1");
}

TEST_CASE("table lists all eight numbers")
{
    auto r = run({"table", "--family", "cycle", "--params", "4"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rc"] == 2);
    CHECK(doc["pc"] == 2);
    CHECK(doc["mc"] == 2);
    CHECK(doc["cfc"] == 2);
    CHECK(doc["rd"] == 2);
    CHECK(doc["pd"] == 1);
    CHECK(doc["md"] == 2);
    CHECK(doc["prc"] == 2);
    CHECK(doc["exhausted"].empty());

    auto text = run({"table", "-g", "Cl", "-g", "C~", "--format", "text"});
    auto rows = lines(text.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].rfind("graph", 0) == 0);
    CHECK(rows[1].size() == rows[2].size());
}

TEST_CASE("table marks exhausted cells")
{
    auto r = run({"table", "-g", "IheA@GUAo", "--budget", "5"});
    CHECK(r.code == 2);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rc"].is_null());
    CHECK_FALSE(doc["exhausted"].empty());
    auto text = run({"table", "-g", "IheA@GUAo", "--budget", "5", "--format", "text"});
    CHECK(text.out.find('*') != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"compute", "--pattern", "striped"}).code == 1);
    CHECK(run({"compute", "--input", "no-such-file"}).code == 1);
    CHECK(run({"compute", "-p", "proper-rainbow", "--task", "disconnect", "-g", "Cl"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("generated graphs piped into compute match the family option")
{
    auto generated = run({"generate", "--family", "all_connected_up_to", "--params", "4"});
    auto piped = run({"compute", "-p", "proper"}, generated.out);
    auto direct = run({"compute", "-p", "proper", "--family", "all_connected_up_to", "--params", "4"});
    CHECK(piped.code == 0);
    CHECK(piped.out == direct.out);
}

TEST_CASE("text and JSON tables carry the same values")
{
    auto json = lines(run({"table", "--family", "all_connected_up_to", "--params", "4"}).out);
    auto text = lines(run({"table", "--family", "all_connected_up_to", "--params", "4", "--format", "text"}).out);
    REQUIRE(json.size() == 10);
    REQUIRE(text.size() == 11);
    const char * columns[] = {"graph", "n", "m", "rc", "pc", "mc", "cfc", "rd", "pd", "md", "prc"};
    for (std::size_t row = 0; row < json.size(); ++row) {
        auto doc = nlohmann::json::parse(json[row]);
        std::istringstream fields(text[row + 1]);
        for (const char * column : columns) {
            std::string field;
            fields >> field;
            CHECK(field == (doc[column].is_string() ? doc[column].get<std::string>() : doc[column].dump()));
        }
    }
}

TEST_CASE("a single color connects the path on three vertices monochromatically")
{
    auto doc = nlohmann::json::parse(run({"verify", "-p", "monochromatic", "-g", "Bo", "--coloring", "0,0"}).out);
    CHECK(doc["connected"] == true);
}
