#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mh/json_io.hpp"
#include "mh/verify.hpp"
#include "test_util.hpp"

using namespace mh;
using nlohmann::json;

TEST_CASE("symfun json round trip") {
    std::mt19937 rng(808);
    for (int d = 1; d <= 4; ++d) {
        SymFunD f(d, Basis::PowerSum);
        for (const auto& p : enumerate_partitions(d)) f.set_coeff(p, testutil::random_ratqt(rng));
        SymFunD back = io::symfun_from_json(io::symfun_to_json(f));
        CHECK(back == f);
    }
}

TEST_CASE("macdonald json export shape") {
    auto table = macdonald_table(2);
    json j = io::macdonald_to_json(*table);
    CHECK(j["degree"] == 2);
    CHECK(j["rows"]["2"]["1,1"] == "(q*t^2 - 2*q*t + q + t^2 - 2*t + 1)/(2)");
    std::string csv = io::macdonald_to_csv(*table);
    CHECK(csv.find("\"2\"") != std::string::npos);
    CHECK(csv.find("q*t^2 - 2*q*t + q + t^2 - 2*t + 1") != std::string::npos);
}

TEST_CASE("mh result json") {
    auto r = hurwitz::mh(0, 1, {Partition::parse("1"), Partition::parse("1")});
    json j = io::mh_result_to_json(r);
    CHECK(j["value"] == "(t - 1)/(q - 1)");
    CHECK(j["genus"] == 0);
    CHECK(j["constraint_ok"] == true);

    auto bad = hurwitz::mh(0, 2, {Partition::parse("2")});
    json jb = io::mh_result_to_json(bad);
    CHECK(jb["value"] == "0");
    CHECK(jb["genus"].is_null());
    CHECK(jb["constraint_ok"] == false);
}

TEST_CASE("operator json") {
    auto op = cutjoin::cut_and_join(Partition::parse("1"), 1);
    json j = io::operator_to_json(*op, false);
    CHECK(j["1"]["1"]["0"] == "(1)");
    json j1 = io::operator_to_json(*op, true);
    CHECK(j1["1"]["1"] == "(1)");
}

TEST_CASE("disk cache round trip is byte identical") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "mh_cache_test";
    fs::remove_all(dir);

    auto table = macdonald_table(3);
    io::save_table_cache(dir.string(), *table);
    auto loaded = io::load_table_cache(dir.string(), 3);
    REQUIRE(loaded != nullptr);
    CHECK(io::macdonald_to_json(*loaded).dump(2) == io::macdonald_to_json(*table).dump(2));
    CHECK(io::macdonald_to_csv(*loaded) == io::macdonald_to_csv(*table));

    // the saved file re-serializes identically after a load/save cycle
    std::ifstream in1(dir.string() + "/macdonald_d3.json");
    std::string first((std::istreambuf_iterator<char>(in1)), std::istreambuf_iterator<char>());
    io::save_table_cache(dir.string(), *loaded);
    std::ifstream in2(dir.string() + "/macdonald_d3.json");
    std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(first == second);

    // schema mismatch is rejected
    {
        std::ofstream bad(dir.string() + "/macdonald_d4.json");
        bad << "{\"schema_version\": 999, \"degree\": 4}";
    }
    CHECK(io::load_table_cache(dir.string(), 4) == nullptr);
    fs::remove_all(dir);
}

TEST_CASE("parallel and serial sweeps agree") {
    verify::set_jobs(1);
    auto serial = verify::eigen_sweep(3);
    verify::set_jobs(4);
    auto parallel = verify::eigen_sweep(3);
    verify::set_jobs(1);
    CHECK(serial.ok == parallel.ok);
    CHECK(serial.cases == parallel.cases);
}

TEST_CASE("wave json keys") {
    wave::WaveSeries s = wave::phi(0, 2, {Partition::parse("2")}, 0, 1);
    json j = io::wave_to_json(s);
    CHECK(j["d"] == 2);
    CHECK(j["coeffs"].contains("0"));
    CHECK(j["coeffs"].contains("1"));
}
