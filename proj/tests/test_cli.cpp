// Drives the installed CLI binary end to end: golden payloads for the
// documented examples, exit codes, and the path/word round-trip over a
// sampled corpus.

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SKEWTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = std::move(out);
    return r;
}

Json payload_of(const CliResult& r) {
    REQUIRE(r.exit_code == 0);
    Json envelope = Json::parse(r.output);
    REQUIRE(envelope.contains("payload"));
    REQUIRE(envelope["status"] == "ok");
    return envelope["payload"];
}

Json load_golden(const std::string& name) {
    std::ifstream in(std::string(SKEWTAB_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    return Json::parse(in);
}

}  // namespace

TEST_CASE("golden payloads stay stable") {
    CHECK(payload_of(run_cli("map --word 11221113223")) == load_golden("map_word.json"));
    CHECK(payload_of(run_cli("derive --mu 2,1,0")) == load_golden("derive_mu.json"));
    CHECK(payload_of(run_cli("count --kind motzkin --n 10")) == load_golden("count_motzkin.json"));
}

TEST_CASE("map links path, word, and tableau") {
    Json p = payload_of(run_cli("map --path UUDLLUUDDLD"));
    CHECK(p["word"] == "11221113223");
    CHECK(p["tableau"] == Json::parse("[[1,2,5,6,7],[3,4,9,10],[8,11]]"));

    Json with_trace = payload_of(run_cli("map --path UUDD --trace"));
    CHECK(with_trace["trace"]["labels"] == "1122");
    CHECK(with_trace["trace"]["stages"] == Json::parse("[[2,3],[1,4]]"));
}

TEST_CASE("exit codes follow the error taxonomy") {
    CHECK(run_cli("map --path UDX").exit_code == 1);          // validation
    CHECK(run_cli("map --path UD --word 12").exit_code == 1); // both given
    CHECK(run_cli("nonsense").exit_code == 1);                // usage
    CHECK(run_cli("derive --mu 7 --no-raise-calibration").exit_code == 2);  // calibration
    CHECK(run_cli("conjecture --ell-max 2 --n-max 8 --memory-cap 64").exit_code == 3);
    CHECK(run_cli("count --kind closed --k 9 --n 3").exit_code == 1);
}

TEST_CASE("derive-entry and algebra payloads") {
    Json entry = payload_of(run_cli("derive-entry --cell 1,2 --value 3"));
    CHECK(entry["terms"] == Json::parse(R"([{"coefficient":"1","mu":"2,1"}])"));
    CHECK(entry["combo"]["shifts"] == Json::parse(R"([{"a":1,"s":-1},{"a":-1,"s":-3}])"));

    Json reduced = payload_of(run_cli("algebra reduce --expr \"x^2*M^2\""));
    CHECK(reduced["reduced"] == "(-x + 1)*M - 1");
}

TEST_CASE("seq dumps one decimal per line") {
    CliResult r = run_cli("seq --name motzkin --upto 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n4\n9\n21\n");
}

TEST_CASE("catalog markdown table") {
    CliResult r = run_cli("catalog --mu-max 1 --format markdown");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("| mu |") != std::string::npos);
    CHECK(r.output.find("| (1,1) |") != std::string::npos);
}

TEST_CASE("conjecture reports a clean desk-scale sweep") {
    Json p = payload_of(run_cli("conjecture --ell-max 2 --n-max 10"));
    CHECK(p["summary"]["all_ok"] == true);
    CHECK(p["summary"]["odd_mismatches"] == 0);
    CHECK(p["cells"].size() == 2 * 11);
}

TEST_CASE("sampled corpora round-trip through the CLI") {
    for (int n = 1; n <= 14; ++n) {
        Json corpus = payload_of(
            run_cli("map --sample-corpus 100 --length " + std::to_string(n)))["corpus"];
        REQUIRE(corpus.size() == 100);
        long bad = 0;
        for (const auto& triple : corpus) {
            const std::string path = triple["path"];
            const std::string word = triple["word"];
            Json from_path = payload_of(run_cli("map --path " + path));
            if (from_path["word"] != word) ++bad;
            Json from_word = payload_of(run_cli("map --word " + from_path["word"].get<std::string>()));
            if (from_word["path"] != path) ++bad;
        }
        CHECK_MESSAGE(bad == 0, "length ", n);
    }
}

TEST_CASE("the corpus is deterministic for a fixed seed and varies with it") {
    CliResult a = run_cli("map --sample-corpus 5 --length 9");
    CliResult b = run_cli("map --sample-corpus 5 --length 9");
    CHECK(payload_of(a) == payload_of(b));
    CliResult c = run_cli("map --sample-corpus 5 --length 9 --seed 1234");
    CHECK(payload_of(a) != payload_of(c));
}
