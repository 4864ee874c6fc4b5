#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <epset/app.hpp>
#include <linoep/io.hpp>
#include <linoep/linoep.hpp>

#include "support/makers.hpp"

namespace {

const std::filesystem::path kFixtures{LINOEP_FIXTURE_DIR};

struct RunOutput {
    int code = 0;
    std::string out;
    std::string err;
};

RunOutput run_epset(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = epset::run(args, out, err);
    return RunOutput{code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return (kFixtures / name).string();
}

}  // namespace

TEST_CASE("linoep on the identity basis: zero coefficients, zero residuals") {
    const RunOutput run = run_epset({"linoep", "--input", fixture("basis3.csv")});
    REQUIRE(run.code == epset::kExitOk);

    const nlohmann::json report = nlohmann::json::parse(run.out);
    CHECK(report["command"] == "linoep");
    CHECK(report["n"] == 3);
    CHECK(report["m"] == 3);
    CHECK(report["status"] == "ok");

    REQUIRE(report["alphas"].size() == 2);
    for (const auto& a : report["alphas"]) {
        CHECK(std::strtod(a.get<std::string>().c_str(), nullptr) == 0.0);
    }
    CHECK(std::strtod(report["gamma"].get<std::string>().c_str(), nullptr) == 0.0);
    for (const auto& [key, value] : report["residuals"].items()) {
        CHECK(std::strtod(value.get<std::string>().c_str(), nullptr) == 0.0);
    }
}

TEST_CASE("noep on the worked triple reports gamma = 3/11 and d-energy 6") {
    const RunOutput run = run_epset({"noep", "--input", fixture("y3.csv")});
    REQUIRE(run.code == epset::kExitOk);

    const nlohmann::json report = nlohmann::json::parse(run.out);
    const double gamma =
        std::strtod(report["gamma"].get<std::string>().c_str(), nullptr);
    CHECK(std::abs(gamma - 3.0 / 11.0) <= 1e-12);
    const double d_energy = std::strtod(
        report["energy"]["d_component_energy"].get<std::string>().c_str(),
        nullptr);
    CHECK(std::abs(d_energy - 6.0) <= 1e-12);
    REQUIRE(report["d_vectors"].size() == 4);
    REQUIRE(report["z2"].size() == 3);
}

TEST_CASE("analyze flags the cancellation fixture") {
    const RunOutput run = run_epset({"analyze", "--input", fixture("cancel3.csv")});
    REQUIRE(run.code == epset::kExitOk);

    const nlohmann::json report = nlohmann::json::parse(run.out);
    CHECK(report["families"] == nlohmann::json::array({"Cancellation"}));
    CHECK(report["is_energy_preserving"] == true);
    CHECK(report["nested_permutations"].empty());
}

TEST_CASE("json input gives the same report as csv input") {
    const RunOutput csv = run_epset({"noep", "--input", fixture("y3.csv")});
    const RunOutput json = run_epset({"noep", "--input", fixture("vectors3.json")});
    REQUIRE(csv.code == epset::kExitOk);
    REQUIRE(json.code == epset::kExitOk);
    CHECK(csv.out == json.out);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string command : {"gsom", "linoep", "noep", "analyze", "sweep"}) {
        const RunOutput first = run_epset({command, "--input", fixture("y3.csv")});
        const RunOutput second = run_epset({command, "--input", fixture("y3.csv")});
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("report vector payloads reparse to bit-identical doubles") {
    const RunOutput run = run_epset({"noep", "--input", fixture("y3.csv")});
    REQUIRE(run.code == epset::kExitOk);
    const nlohmann::json report = nlohmann::json::parse(run.out);

    const linoep::VectorSet input =
        linoep::read_vector_set(fixture("y3.csv"));
    linoep::LinoepResult expected = linoep::linoep_transform(input);
    expected = linoep::noep_extend(std::move(expected),
                                   linoep::sum_vectors(input));

    const auto& c_vectors = report["c_vectors"];
    REQUIRE(c_vectors.size() == expected.c_set.size());
    for (std::size_t i = 0; i < expected.c_set.size(); ++i) {
        for (std::size_t j = 0; j < expected.c_set.dim(); ++j) {
            const double parsed = std::strtod(
                c_vectors[i][j].get<std::string>().c_str(), nullptr);
            CHECK(parsed == expected.c_set[i][j]);
        }
    }
    const auto& z2 = report["z2"];
    for (std::size_t j = 0; j < expected.z2.dim(); ++j) {
        const double parsed =
            std::strtod(z2[j].get<std::string>().c_str(), nullptr);
        CHECK(parsed == expected.z2[j]);
    }
}

TEST_CASE("--perm reorders the input before the transform") {
    const RunOutput run =
        run_epset({"linoep", "--input", fixture("pair2.csv"), "--perm", "1,0"});
    REQUIRE(run.code == epset::kExitOk);
    const nlohmann::json report = nlohmann::json::parse(run.out);
    const auto& c1 = report["c_vectors"][0];
    CHECK(std::strtod(c1[0].get<std::string>().c_str(), nullptr) == -0.5);
    CHECK(std::strtod(c1[1].get<std::string>().c_str(), nullptr) == 0.5);
}

TEST_CASE("sweep emits n! lexicographic entries") {
    const RunOutput run = run_epset({"sweep", "--input", fixture("pair2.csv")});
    REQUIRE(run.code == epset::kExitOk);
    const nlohmann::json report = nlohmann::json::parse(run.out);
    REQUIRE(report["entries"].size() == 2);
    CHECK(report["entries"][0]["permutation"] == nlohmann::json::array({0, 1}));
    CHECK(report["entries"][1]["permutation"] == nlohmann::json::array({1, 0}));
}

TEST_CASE("input errors exit with code 2 and an error report") {
    SUBCASE("malformed csv") {
        const RunOutput run = run_epset(
            {"linoep", "--input", fixture("malformed/bad_number.csv")});
        CHECK(run.code == epset::kExitInputError);
        CHECK(run.err.find("line 2") != std::string::npos);
        const nlohmann::json report = nlohmann::json::parse(run.out);
        CHECK(report["status"] == "error");
        CHECK(report["exit_code"] == epset::kExitInputError);
        // diagnostics are confined to standard error
        CHECK(run.out.find("line 2") == std::string::npos);
    }
    SUBCASE("dependent input for a transform") {
        const RunOutput run =
            run_epset({"gsom", "--input", fixture("cancel3.csv")});
        CHECK(run.code == epset::kExitInputError);
    }
    SUBCASE("missing file") {
        const RunOutput run = run_epset({"linoep", "--input", "no_such_file.csv"});
        CHECK(run.code == epset::kExitInputError);
    }
    SUBCASE("analyze needs two vectors") {
        const auto tmp = std::filesystem::temp_directory_path() / "epset_one.csv";
        std::ofstream(tmp) << "1,2,3\n";
        const RunOutput run = run_epset({"analyze", "--input", tmp.string()});
        CHECK(run.code == epset::kExitInputError);
        std::filesystem::remove(tmp);
    }
}

TEST_CASE("the tool caps the number of vectors at 64") {
    const auto tmp = std::filesystem::temp_directory_path() / "epset_wide.csv";
    {
        std::ofstream file(tmp);
        for (int i = 1; i <= 65; ++i) file << i << "\n";
    }
    const RunOutput run = run_epset({"analyze", "--input", tmp.string()});
    CHECK(run.code == epset::kExitInputError);
    std::filesystem::remove(tmp);
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(run_epset({}).code == epset::kExitUsageError);
    CHECK(run_epset({"linoep"}).code == epset::kExitUsageError);  // no --input
    CHECK(run_epset({"linoep", "--input", "x.csv", "--bogus"}).code ==
          epset::kExitUsageError);
    CHECK(run_epset({"linoep", "--input", "x.csv", "--tol", "-1"}).code ==
          epset::kExitUsageError);
    CHECK(run_epset({"gen", "--family", "nested"}).code ==
          epset::kExitUsageError);  // no --seed
    CHECK(run_epset({"gen", "--family", "weird", "--seed", "1"}).code ==
          epset::kExitUsageError);
}

TEST_CASE("help is a success") {
    const RunOutput run = run_epset({"--help"});
    CHECK(run.code == epset::kExitOk);
    CHECK(run.out.find("epset") != std::string::npos);
}

TEST_CASE("gen emits deterministic parseable sets") {
    const RunOutput first = run_epset({"gen", "--family", "nested", "--seed", "7"});
    const RunOutput second = run_epset({"gen", "--family", "nested", "--seed", "7"});
    REQUIRE(first.code == epset::kExitOk);
    CHECK(first.out == second.out);

    const linoep::VectorSet set = linoep::parse_csv_set(first.out);
    CHECK(set.size() == 3);
    CHECK(set.dim() == 3);

    const RunOutput other = run_epset({"gen", "--family", "nested", "--seed", "8"});
    CHECK(other.out != first.out);

    const RunOutput json =
        run_epset({"gen", "--family", "cancellation", "--seed", "5", "--format",
                   "json"});
    REQUIRE(json.code == epset::kExitOk);
    CHECK(linoep::parse_json_set(json.out).size() == 3);
}

TEST_CASE("--output writes the report to a file") {
    const auto tmp = std::filesystem::temp_directory_path() / "epset_report.json";
    const RunOutput run = run_epset(
        {"analyze", "--input", fixture("basis3.csv"), "--output", tmp.string()});
    REQUIRE(run.code == epset::kExitOk);
    CHECK(run.out.empty());

    std::ifstream in(tmp, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const nlohmann::json report = nlohmann::json::parse(buffer.str());
    CHECK(report["command"] == "analyze");
    std::filesystem::remove(tmp);
}

TEST_CASE("sweep respects --limit-n") {
    const RunOutput run = run_epset(
        {"sweep", "--input", fixture("quad4.csv"), "--limit-n", "3"});
    CHECK(run.code == epset::kExitInputError);
}
