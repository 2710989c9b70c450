#include "tropgr/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropgr;

namespace {

std::string run_fvector(const std::string& path) {
    std::ostringstream out;
    cli::cmd_fvector(path, out);
    return out.str();
}

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "tropgr_test";
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("fan serialization is deterministic and round trips") {
    Fan f = build_F(2, 5);
    json j1 = fan_to_json(f);
    json j2 = fan_to_json(build_F(2, 5));
    REQUIRE(j1.dump(2) == j2.dump(2));

    Fan back = fan_from_json(j1);
    REQUIRE(back == f);
    REQUIRE(back.rays() == f.rays());

    auto path = temp_dir() / "f25.json";
    write_json_file(path.string(), j1);
    REQUIRE(read_json_file(path.string()) == j1);
}

TEST_CASE("fvector, rays and report commands on a fan file") {
    Fan f = build_F(2, 5);
    auto path = temp_dir() / "f25_report.json";
    write_json_file(path.string(), fan_to_json(f));

    REQUIRE(run_fvector(path.string()) == "5 5\n");

    std::ostringstream rays;
    REQUIRE(cli::cmd_rays(path.string(), rays) == 0);
    std::string ray_lines = rays.str();
    REQUIRE(std::count(ray_lines.begin(), ray_lines.end(), '\n') == 5);

    std::ostringstream rep1, rep2;
    REQUIRE(cli::cmd_report(path.string(), rep1) == 0);
    REQUIRE(cli::cmd_report(path.string(), rep2) == 0);
    REQUIRE(rep1.str() == rep2.str());  // byte-identical on identical input
    REQUIRE(rep1.str().find("f_vector\t5\t5") != std::string::npos);
    REQUIRE(rep1.str().find("n_rays\t5") != std::string::npos);
    REQUIRE(rep1.str().find("census\t2:5") != std::string::npos);
}

TEST_CASE("report notices the trivial fan") {
    auto path = temp_dir() / "trivial.json";
    write_json_file(path.string(), fan_to_json(Fan::trivial()));
    std::ostringstream out;
    REQUIRE(cli::cmd_report(path.string(), out) == 0);
    REQUIRE(out.str().find("trivial fan") != std::string::npos);
    std::ostringstream fv;
    REQUIRE(cli::cmd_fvector(path.string(), fv) == 0);
    REQUIRE(fv.str().find("trivial fan") != std::string::npos);
}

TEST_CASE("malformed fan files are rejected") {
    auto path = temp_dir() / "broken.json";
    {
        std::ofstream f(path);
        f << "{ not json";
    }
    REQUIRE_THROWS_AS(cli::cmd_fvector(path.string(), std::cout), std::runtime_error);
    REQUIRE_THROWS(cli::cmd_report(path.string(), std::cout));
}

TEST_CASE("param and invert round trip through TSV") {
    std::ostringstream tsv;
    REQUIRE(cli::cmd_param(2, 5, "2,3", "", tsv) == 0);
    REQUIRE(tsv.str().find("2,5\t9") != std::string::npos);  // 1 + 2 + 2*3

    std::istringstream in(tsv.str());
    std::ostringstream regions;
    REQUIRE(cli::cmd_invert(2, 5, in, regions) == 0);
    REQUIRE(regions.str().find("1,4\tinner\t2") != std::string::npos);
    REQUIRE(regions.str().find("1,5\tinner\t3") != std::string::npos);
    REQUIRE(regions.str().find("1,3\touter\t1") != std::string::npos);
}

TEST_CASE("param validates counts and positivity") {
    REQUIRE_THROWS(cli::cmd_param(2, 5, "1", "", std::cout));
    REQUIRE_THROWS(cli::cmd_param(2, 5, "1,-2", "", std::cout));
    std::ostringstream ok;
    REQUIRE(cli::cmd_param(2, 5, "1,1", "2,2,2,2", ok) == 0);
}

TEST_CASE("sp-check prints counts and verdict") {
    std::ostringstream out;
    REQUIRE(cli::cmd_sp_check(5, 1, out) == 0);
    REQUIRE(out.str().find("tree_cones\t5") != std::string::npos);
    REQUIRE(out.str().find("fan_cones\t5") != std::string::npos);
    REQUIRE(out.str().find("equal\tyes") != std::string::npos);
}

TEST_CASE("oracle grid run") {
    std::ostringstream out;
    REQUIRE(cli::cmd_oracle(3, out) == 0);
    // 7 grid points plus the two designated rejections.
    std::string oracle_lines = out.str();
    REQUIRE(std::count(oracle_lines.begin(), oracle_lines.end(), '\n') == 9);
    REQUIRE(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("split-report over a toy refinement") {
    Fan before = build_F(2, 5);
    ExponentPolynomial extra(2);
    extra.add_term({0, 0}, 1);
    extra.add_term({0, 1}, 1);  // min(0, x2) splits two of the five chambers
    Fan after = common_refinement(before, linearity_fan(tropicalize(extra)));

    auto dir = temp_dir();
    write_json_file((dir / "before.json").string(), fan_to_json(before));
    write_json_file((dir / "after.json").string(), fan_to_json(after));

    std::ostringstream out;
    REQUIRE(cli::cmd_split_report((dir / "before.json").string(), (dir / "after.json").string(),
                                  out) == 0);
    REQUIRE(out.str().find("children_histogram") != std::string::npos);

    // Reversing the roles is a containment violation.
    std::ostringstream bad;
    REQUIRE(cli::cmd_split_report((dir / "after.json").string(), (dir / "before.json").string(),
                                  bad) == 1);
}

TEST_CASE("check-tables passes on the shipped fixture and fails on a corrupted one") {
    std::string dir = default_fixture_dir();
    std::ostringstream out;
    REQUIRE(cli::cmd_check_tables(3, 6, dir, 1, out) == 0);
    REQUIRE(out.str().find("FAIL") == std::string::npos);
    REQUIRE(out.str().find("PASS\tF36.rays") != std::string::npos);

    // Corrupt one ray in a copy of the fixture.
    json j = read_json_file(dir + "/f36.json");
    j["rays"][0][0] = 7;
    auto tmp = temp_dir() / "fixtures_corrupt";
    std::filesystem::create_directories(tmp);
    write_json_file((tmp / "f36.json").string(), j);
    std::ostringstream bad;
    REQUIRE(cli::cmd_check_tables(3, 6, tmp.string(), 1, bad) == 1);
    REQUIRE(bad.str().find("FAIL\tF36.rays") != std::string::npos);
    REQUIRE(bad.str().find("expected") != std::string::npos);

    // Missing fixture directory is a usage error.
    REQUIRE_THROWS_AS(cli::cmd_check_tables(3, 6, (tmp / "nowhere").string(), 1, std::cout),
                      std::runtime_error);
}
