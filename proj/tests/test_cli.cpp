// End-to-end checks of the installed command surface: runs the real binary
// through /bin/sh, captures stdout, and inspects exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const char* kCliPath = TEAMREC_CLI_PATH;
const char* kFixturePath = TEAMREC_TEST_DATA_DIR "/fixture_corpus.txt";

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out.push_back(c);
        }
    }
    out += "'";
    return out;
}

RunResult run_cli(const std::vector<std::string>& args, const fs::path& stdout_file) {
    std::string command = shell_quote(kCliPath);
    for (const std::string& arg : args) command += " " + shell_quote(arg);
    command += " > " + shell_quote(stdout_file.string()) + " 2> /dev/null";
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(stdout_file, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    result.stdout_text = text.str();
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("teamrec_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("build reports the fixture's hand counts and writes a snapshot") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    RunResult result = run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.find("papers: 5") != std::string::npos);
    CHECK(result.stdout_text.find("authors: 7") != std::string::npos);
    CHECK(result.stdout_text.find("edges: 7") != std::string::npos);
    CHECK(fs::exists(snapshot));
}

TEST_CASE("build on an empty file reports zeros and still writes a loadable snapshot") {
    TempDir tmp;
    fs::path empty_input = tmp.path / "empty.txt";
    std::ofstream(empty_input).close();
    fs::path snapshot = tmp.path / "empty.snap";
    RunResult build = run_cli({"build", "--input", empty_input.string(), "--snapshot", snapshot.string()},
                              tmp.path / "out.txt");
    CHECK(build.exit_code == 0);
    CHECK(build.stdout_text.find("papers: 0") != std::string::npos);
    CHECK(build.stdout_text.find("authors: 0") != std::string::npos);

    RunResult stats = run_cli({"stats", "--snapshot", snapshot.string()}, tmp.path / "out.txt");
    CHECK(stats.exit_code == 0);
    CHECK(stats.stdout_text.find("papers: 0") != std::string::npos);
}

TEST_CASE("build with a missing input file fails with exit 1") {
    TempDir tmp;
    RunResult result = run_cli({"build", "--input", (tmp.path / "absent.txt").string(),
                                "--snapshot", (tmp.path / "s.snap").string()},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 1);
}

TEST_CASE("recommend emits schema-conformant deterministic JSON") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);

    std::vector<std::string> args{"recommend", "--snapshot", snapshot.string(),
                                  "--name", "Alice Chen", "--query", "network",
                                  "-k", "2", "--t1", "1", "--t2", "2"};
    RunResult first = run_cli(args, tmp.path / "r1.txt");
    REQUIRE(first.exit_code == 0);

    for (int i = 0; i < 4; ++i) {
        RunResult repeat = run_cli(args, tmp.path / "r2.txt");
        CHECK(repeat.exit_code == 0);
        CHECK(repeat.stdout_text == first.stdout_text);
    }

    auto json = nlohmann::json::parse(first.stdout_text);
    CHECK(json.at("seed").at("name") == "Alice Chen");
    CHECK(json.at("seed").at("role") == "prime");
    CHECK(json.at("query") == "network");
    CHECK(json.at("interest").is_null());
    CHECK(json.at("k") == 2);
    CHECK(json.at("fallback_used").is_boolean());
    REQUIRE(json.at("pairs").is_array());
    REQUIRE(json.at("pairs").size() == 2);
    for (const auto& pair : json.at("pairs")) {
        CHECK(pair.at("rank").is_number_integer());
        REQUIRE(pair.at("members").size() == 2);
        CHECK(pair.at("members")[0].at("role") == "assistant");
        CHECK(pair.at("members")[1].at("role") == "student");
        for (const auto& member : pair.at("members")) {
            CHECK(member.at("name").is_string());
            CHECK(member.at("i1").is_number());
            CHECK((member.at("i2").is_null() || member.at("i2").is_number()));
            CHECK(member.at("f").is_number());
        }
    }
    // Key order is part of the contract.
    CHECK(first.stdout_text.rfind("{\"seed\":{\"name\":", 0) == 0);
}

TEST_CASE("recommend supports table output and scorer/pairing flags") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);

    RunResult table = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "Alice Chen",
                               "--query", "network", "-k", "2", "--t1", "1", "--t2", "2",
                               "--format", "table"},
                              tmp.path / "out.txt");
    CHECK(table.exit_code == 0);
    CHECK(table.stdout_text.find("seed: Alice Chen (prime)") != std::string::npos);
    CHECK(table.stdout_text.find("rank") != std::string::npos);

    RunResult tfidf = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "Alice Chen",
                               "--query", "network", "-k", "2", "--t1", "1", "--t2", "2",
                               "--scorer", "tfidf", "--pairing", "product"},
                              tmp.path / "out.txt");
    CHECK(tfidf.exit_code == 0);
    CHECK(nlohmann::json::parse(tfidf.stdout_text).at("pairs").size() == 2);
}

TEST_CASE("recommend with an unknown name exits 2 and echoes the name") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);
    RunResult result = run_cli({"recommend", "--snapshot", snapshot.string(),
                                "--name", "Nonexistent Person", "--query", "network"},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 2);
}

TEST_CASE("usage errors exit 64") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);

    SUBCASE("unknown flag") {
        RunResult result = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "x",
                                    "--query", "q", "--bogus-flag"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 64);
    }
    SUBCASE("bad enum value") {
        RunResult result = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "x",
                                    "--query", "q", "--scorer", "lucene"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 64);
    }
    SUBCASE("non-positive k") {
        RunResult result = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "x",
                                    "--query", "q", "-k", "0"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 64);
    }
    SUBCASE("t1 >= t2") {
        RunResult result = run_cli({"classify", "--snapshot", snapshot.string(), "--name", "Alice Chen",
                                    "--t1", "40", "--t2", "40"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 64);
    }
    SUBCASE("missing subcommand") {
        RunResult result = run_cli({}, tmp.path / "out.txt");
        CHECK(result.exit_code == 64);
    }
}

TEST_CASE("recommend where the missing roles have no candidates emits empty pairs") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);
    // Default thresholds classify everyone as student, so prime/assistant are empty.
    RunResult result = run_cli({"recommend", "--snapshot", snapshot.string(), "--name", "Alice Chen",
                                "--query", "network", "-k", "1"},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 0);
    auto json = nlohmann::json::parse(result.stdout_text);
    CHECK(json.at("pairs").empty());
    CHECK(json.at("fallback_used") == false);
}

TEST_CASE("classify prints role and metric") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);

    SUBCASE("fixture author with one paper is a student under defaults") {
        RunResult result = run_cli({"classify", "--snapshot", snapshot.string(), "--name", "Grace Liu"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 0);
        CHECK(result.stdout_text.find("role=student") != std::string::npos);
        CHECK(result.stdout_text.find("metric=1") != std::string::npos);
    }
    SUBCASE("all three criteria agree with the library on the fixture") {
        for (const std::string& criterion : {"paper", "citation", "neighbor"}) {
            RunResult result = run_cli({"classify", "--snapshot", snapshot.string(),
                                        "--name", "Alice Chen", "--criterion", criterion,
                                        "--t1", "1", "--t2", "2"},
                                       tmp.path / "out.txt");
            CHECK(result.exit_code == 0);
            // paper: 3 papers -> prime; citation: 5 -> prime; neighbor: 4 -> prime
            CHECK(result.stdout_text.find("role=prime") != std::string::npos);
        }
    }
    SUBCASE("synthetic 45-paper author is prime under defaults") {
        std::ostringstream corpus;
        for (int i = 0; i < 45; ++i) {
            corpus << "#*Paper number " << i << "\n#@Prolific Writer; Helper " << i
                   << "\n#index" << i << "\n\n";
        }
        fs::path input = tmp.path / "prolific.txt";
        std::ofstream(input) << corpus.str();
        fs::path snap45 = tmp.path / "prolific.snap";
        REQUIRE(run_cli({"build", "--input", input.string(), "--snapshot", snap45.string()},
                        tmp.path / "out.txt").exit_code == 0);
        RunResult result = run_cli({"classify", "--snapshot", snap45.string(),
                                    "--name", "Prolific Writer"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 0);
        CHECK(result.stdout_text.find("role=prime") != std::string::npos);
        CHECK(result.stdout_text.find("metric=45") != std::string::npos);
    }
    SUBCASE("unknown author exits 2") {
        RunResult result = run_cli({"classify", "--snapshot", snapshot.string(), "--name", "Ghost"},
                                   tmp.path / "out.txt");
        CHECK(result.exit_code == 2);
    }
}

TEST_CASE("stats prints counts and a role histogram that sums to the author count") {
    TempDir tmp;
    fs::path snapshot = tmp.path / "fixture.snap";
    REQUIRE(run_cli({"build", "--input", kFixturePath, "--snapshot", snapshot.string()},
                    tmp.path / "out.txt").exit_code == 0);
    RunResult result = run_cli({"stats", "--snapshot", snapshot.string(), "--t1", "1", "--t2", "2"},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.find("papers: 5") != std::string::npos);
    CHECK(result.stdout_text.find("authors: 7") != std::string::npos);
    CHECK(result.stdout_text.find("edges: 7") != std::string::npos);
    CHECK(result.stdout_text.find("prime: 1") != std::string::npos);
    CHECK(result.stdout_text.find("assistant: 2") != std::string::npos);
    CHECK(result.stdout_text.find("student: 4") != std::string::npos);
}

TEST_CASE("recommend on a corrupt snapshot exits 1") {
    TempDir tmp;
    fs::path bogus = tmp.path / "bogus.snap";
    std::ofstream(bogus) << "not a snapshot";
    RunResult result = run_cli({"recommend", "--snapshot", bogus.string(),
                                "--name", "x", "--query", "q"},
                               tmp.path / "out.txt");
    CHECK(result.exit_code == 1);
}
