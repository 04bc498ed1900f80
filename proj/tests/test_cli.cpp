#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(IZR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path fixture_dir() {
    auto dir = std::filesystem::temp_directory_path() / "izr_cli_fixtures";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& content) {
    const auto path = fixture_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("check reports identity satisfaction with the documented exit codes") {
    const std::string trivial = write_fixture("trivial.json", R"({"size":1,"table":[[0]]})");
    const std::string imp = write_fixture("imp.json", R"({"size":2,"table":[[1,1],[0,1]]})");
    const std::string cayley = write_fixture("or.tbl", "2\n0 1\n1 1\n");

    RunResult r = run("check --algebra " + trivial + " --identity \"x'' = x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run("check --algebra " + imp + " --identity \"x'' = x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run("check --algebra " + imp +
            " --identity \"x -> (y -> z) = (x -> y) -> z\"");
    CHECK(r.exit_code == 1);
    REQUIRE(r.out.substr(0, 6) == "false\n");
    const auto witness = nlohmann::json::parse(r.out.substr(6));
    CHECK(witness.contains("assignment"));
    CHECK(witness["lhs"] != witness["rhs"]);

    r = run("check --algebra " + cayley + " --identity \"x v y = y v x\"");
    CHECK(r.exit_code == 0);

    // usage errors
    CHECK(run("check --algebra /no/such/file --identity \"0 = 0\"").exit_code == 64);
    CHECK(run("check --algebra " + imp + " --identity \"x'' =\"").exit_code == 64);
    CHECK(run("check --algebra " + imp).exit_code == 64);
    CHECK(run("bogus-subcommand").exit_code == 64);
}

TEST_CASE("classify emits the full report") {
    const std::string imp = write_fixture("imp.json", R"({"size":2,"table":[[1,1],[0,1]]})");
    RunResult r = run("classify --algebra " + imp);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["in_S"] == true);
    CHECK(j["derived_is_birkhoff_system"] == true);
    CHECK(j["derived_essentially_semigroup"] == false);
}

TEST_CASE("enumerate prints one algebra per line plus a metadata line") {
    RunResult r = run("enumerate --size 2 --variety i");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < r.out.size()) {
        std::size_t nl = r.out.find('\n', start);
        lines.push_back(r.out.substr(start, nl - start));
        start = nl + 1;
    }
    REQUIRE(lines.size() == 4);  // 3 classes + metadata
    const auto meta = nlohmann::json::parse(lines.back());
    CHECK(meta["complete"] == true);
    CHECK(meta["count"] == 3);
    CHECK(nlohmann::json::parse(lines[0])["size"] == 2);

    CHECK(run("enumerate --size 2 --variety s").out.find("\"count\":2") != std::string::npos);
    CHECK(run("enumerate --size 0 --variety i").exit_code == 64);
    CHECK(run("enumerate --size 2 --variety zzz").exit_code == 64);
}

TEST_CASE("verify runs suites and search finds the counterexamples") {
    RunResult r = run("verify --suite main --max-size 3");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["checked"] == 21);

    CHECK(run("verify --suite no-such-suite --max-size 2").exit_code == 64);

    r = run("search --name br-not-bisemilattice --max-size 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"count\":15") != std::string::npos);
    CHECK(run("search --name nope --max-size 2").exit_code == 64);
}

TEST_CASE("census rows are stable") {
    RunResult r = run("census --sizes 1..2 --variety i,s");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1, I, 1, ") == 0);
    CHECK(r.out.find("\n1, S, 1, ") != std::string::npos);
    CHECK(r.out.find("\n2, I, 3, ") != std::string::npos);
    CHECK(r.out.find("\n2, S, 2, ") != std::string::npos);
    CHECK(run("census --sizes 2..1 --variety i").exit_code == 64);
    CHECK(run("census --sizes x --variety i").exit_code == 64);
}

TEST_CASE("budget exhaustion exits with code 2") {
    RunResult r = run("enumerate --size 5 --variety i --budget 0");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("\"complete\":false") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across job counts") {
    const RunResult a = run("verify --suite main --max-size 3 --jobs 1");
    const RunResult b = run("verify --suite main --max-size 3 --jobs 8");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the same bytes to a file") {
    const auto path = (fixture_dir() / "enum_out.jsonl").string();
    const RunResult direct = run("enumerate --size 2 --variety i");
    const RunResult filed = run("enumerate --size 2 --variety i --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // identical except the elapsed field in the metadata line
    CHECK(content.substr(0, content.find("\"elapsed\"")) ==
          direct.out.substr(0, direct.out.find("\"elapsed\"")));
}
