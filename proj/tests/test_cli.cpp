#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path tmp = fs::temp_directory_path() / ("invoser_cli_" + std::to_string(::getpid()) +
                                                "_" + std::to_string(counter++) + ".out");
    std::string cmd = std::string(INVOSER_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream is(tmp);
    std::stringstream buf;
    buf << is.rdbuf();
    fs::remove(tmp);
    return RunResult{code, buf.str()};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / ("invoser_cli_scratch_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("table commands") {
    RunResult bell = run_cli("bell-table --max-n 1");
    CHECK(bell.exit_code == 0);
    CHECK(bell.output == "B[1,1] = X1\n");

    RunResult stirling = run_cli("stirling-table --max-n 2");
    CHECK(stirling.exit_code == 0);
    CHECK(stirling.output.find("A[1,1] = X1^-1") != std::string::npos);
    CHECK(stirling.output.find("A[2,1] = -X1^-3*X2") != std::string::npos);

    RunResult lah = run_cli("lah-table --max-n 2");
    CHECK(lah.exit_code == 0);
    CHECK(lah.output.find("L[1,1] = -1") != std::string::npos);
    CHECK(lah.output.find("L[2,1] = 2*X1^-2*X2") != std::string::npos);

    RunResult jsn = run_cli("bell-table --max-n 3 --format json");
    CHECK(jsn.exit_code == 0);
    json parsed = json::parse(jsn.output);
    CHECK(parsed["family"] == "B");
    CHECK(parsed["entries"].size() == 6);
}

TEST_CASE("series eval") {
    RunResult r = run_cli("series eval --expr \"exp(sin(x))-1\" --order 10 --format json");
    CHECK(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed["coeffs"] ==
          json::array({"0", "1", "1", "0", "-3", "-8", "-3", "56", "217", "64", "-2951"}));

    RunResult ordinary = run_cli("series eval --expr \"-x/(1+x)\" --order 4 --convention ordinary");
    CHECK(ordinary.exit_code == 0);
    CHECK(ordinary.output == "0: 0\n1: -1\n2: 1\n3: -1\n4: 1\n");

    RunResult bad = run_cli("series eval --expr \"log(x)\" --order 4");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("involution workflow through files") {
    fs::path dir = scratch_dir();
    fs::path f_json = dir / "f.json";
    fs::path g_json = dir / "g.json";

    RunResult gen =
        run_cli("involution gen --even-seeds 2,24,720,40320 --order 9 --out " + f_json.string());
    CHECK(gen.exit_code == 0);

    RunResult check = run_cli("involution check --series-file " + f_json.string());
    CHECK(check.exit_code == 0);

    RunResult dec = run_cli("involution decompose --series-file " + f_json.string() +
                            " --odd-seeds 1,1,1,1,1 --out " + g_json.string());
    CHECK(dec.exit_code == 0);
    json g = json::parse(std::ifstream(g_json));
    for (const auto& c : g["coeffs"])
        if (c != "0") CHECK(c == "1");  // recovers exp(x)-1

    RunResult conj = run_cli("involution conjugate --g-file " + g_json.string());
    CHECK(conj.exit_code == 0);
    json f_round = json::parse(conj.output);
    json f_orig = json::parse(std::ifstream(f_json));
    CHECK(f_round == f_orig);

    // A non-involutory input is rejected with a nonzero exit.
    fs::path bad_json = dir / "bad.json";
    std::ofstream(bad_json)
        << R"({"convention":"exponential","order":3,"coeffs":["0","1","1","1"]})";
    RunResult bad_check = run_cli("involution check --series-file " + bad_json.string());
    CHECK(bad_check.exit_code == 1);
    RunResult bad_dec =
        run_cli("involution decompose --series-file " + bad_json.string() + " --odd-seeds 1");
    CHECK(bad_dec.exit_code == 2);

    fs::remove_all(dir);
}

TEST_CASE("verify suites") {
    RunResult full = run_cli("verify --suite all --max-n 8 --trials 25");
    CHECK(full.exit_code == 0);
    CHECK(full.output.find("verify: PASS") != std::string::npos);

    RunResult r = run_cli("verify --suite ortho,lemma --max-n 5 --trials 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ortho-inversion") != std::string::npos);
    CHECK(r.output.find("verify: PASS") != std::string::npos);

    RunResult twice = run_cli("verify --suite ortho,lemma --max-n 5 --trials 2");
    CHECK(twice.output == r.output);  // byte-identical for identical flags

    RunResult jsn = run_cli("verify --suite seqinv --max-n 4 --trials 2 --rng-seed 7 --format json");
    CHECK(jsn.exit_code == 0);
    json parsed = json::parse(jsn.output);
    CHECK(parsed["passed"] == true);
    CHECK(parsed["suites"][0]["name"] == "inversion-of-sequences");

    RunResult fault = run_cli("verify --suite ortho --max-n 3 --trials 1 --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("verify: FAIL") != std::string::npos);

    RunResult unknown = run_cli("verify --suite nonsense --max-n 3");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("golden reproduction") {
    std::string fixtures = INVOSER_FIXTURES_DIR;
    RunResult all = run_cli("reproduce-paper --fixtures " + fixtures);
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("reproduce: PASS") != std::string::npos);

    RunResult one = run_cli("reproduce-paper --item f9 --fixtures " + fixtures);
    CHECK(one.exit_code == 0);
    CHECK(one.output == "f9 (involution-coefficients): ok\nreproduce: PASS\n");

    RunResult missing = run_cli("reproduce-paper --item no-such-item --fixtures " + fixtures);
    CHECK(missing.exit_code == 2);

    // Corrupting one fixture value must flip the exit code and show a diff.
    fs::path dir = scratch_dir();
    for (const auto& entry : fs::directory_iterator(fixtures))
        fs::copy_file(entry.path(), dir / entry.path().filename(),
                      fs::copy_options::overwrite_existing);
    {
        std::ifstream is(dir / "lah_row_k1.json");
        json j;
        is >> j;
        j["L4"]["terms"][0]["coef"] = "31";
        std::ofstream os(dir / "lah_row_k1.json");
        os << j.dump(1);
    }
    RunResult corrupted = run_cli("reproduce-paper --fixtures " + dir.string());
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.output.find("lah4 (lah-row): MISMATCH") != std::string::npos);
    CHECK(corrupted.output.find("- ") != std::string::npos);
    CHECK(corrupted.output.find("+ ") != std::string::npos);
    CHECK(corrupted.output.find("reproduce: FAIL") != std::string::npos);
    fs::remove_all(dir);
}

TEST_SUITE_END();
