#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "hosc/report.hpp"
#include "hosc/spectral.hpp"
#include "hosc/time_grid.hpp"
#include "hosc/trial_family.hpp"

using namespace hosc;

namespace {

VerificationReport sample_report() {
    VerificationReport rep;
    rep.suite = "demo";
    rep.params = {{"dimension", 1}, {"cutoff", 8}};
    rep.trials = {{8, 0, 1.0, 2.0, 0.5},
                  {8, 1, 3.0, 2.0, 1.5},
                  {16, 0, 2.0, 2.0, 1.0},
                  {16, 1, 4.0, 2.0, 2.0}};
    rep.aggregate_from_trials();
    rep.pass = true;
    rep.tolerance = 1.25;
    rep.notes = {"first note", "second note"};
    return rep;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("aggregation: max, median, and per-cutoff maxima") {
    VerificationReport rep = sample_report();
    CHECK(rep.aggregate.max == 2.0);
    CHECK(rep.aggregate.median == doctest::Approx(1.25));  // mean of 1.0 and 1.5
    CHECK(rep.aggregate.c_hat_by_cutoff.at(8) == 1.5);
    CHECK(rep.aggregate.c_hat_by_cutoff.at(16) == 2.0);

    rep.trials.push_back({16, 2, 0.0, 1.0, 0.75});
    rep.aggregate_from_trials();
    CHECK(rep.aggregate.median == 1.0);  // odd count picks the middle
}

TEST_CASE("report JSON schema: key order and round trip") {
    VerificationReport rep = sample_report();
    Json j = rep.to_json();
    std::string dumped = j.dump();
    CHECK(dumped.rfind("{\"suite\":\"demo\",\"params\":", 0) == 0);
    CHECK(dumped.find("\"aggregate\"") != std::string::npos);
    CHECK(dumped.find("\"c_hat_by_cutoff\"") != std::string::npos);
    // trial records carry the five canonical keys in order
    CHECK(j["trials"][0].dump() ==
          "{\"cutoff\":8,\"trial\":0,\"lhs\":1.0,\"rhs\":2.0,\"ratio\":0.5}");

    VerificationReport back = VerificationReport::from_json(j);
    CHECK(back.suite == rep.suite);
    CHECK(back.trials.size() == rep.trials.size());
    CHECK(back.trials[1].ratio == rep.trials[1].ratio);
    CHECK(back.aggregate.max == rep.aggregate.max);
    CHECK(back.pass == rep.pass);
    CHECK(back.tolerance == rep.tolerance);
    CHECK(back.notes == rep.notes);
    CHECK(back.to_json() == j);  // loss-free round trip
}

TEST_CASE("CSV export is one row per trial with shortest digits") {
    VerificationReport rep = sample_report();
    std::string csv = rep.to_csv();
    CHECK(csv.rfind("suite,cutoff,trial,lhs,rhs,ratio\n", 0) == 0);
    CHECK(csv.find("demo,8,0,1,2,0.5\n") != std::string::npos);
    CHECK(csv.find("demo,16,1,4,2,2\n") != std::string::npos);
    // header plus one line per record
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + rep.trials.size());
}

TEST_CASE("field serialization round-trips bit for bit") {
    TrialFamily fam;
    fam.dimension = 2;
    fam.cutoff = 6;
    SpectralField f = fam.draw(9);
    Json j = field_to_json(f);
    CHECK(j["dimension"] == 2);
    CHECK(j["cutoff"] == 6);
    REQUIRE(j["coefficients"].size() == f.size());
    SpectralField back = field_from_json(j);
    CHECK(back.dimension == f.dimension);
    CHECK(back.cutoff == f.cutoff);
    CHECK(back.coefficients == f.coefficients);
}

TEST_CASE("field deserialization validates the layout") {
    Json j = {{"dimension", 1}, {"cutoff", 5}, {"coefficients", Json::array()}};
    j["coefficients"].push_back({1.0, 0.0});  // needs 3 for cutoff 5 in 1-d
    CHECK_THROWS_AS(field_from_json(j), std::invalid_argument);
    j["dimension"] = 0;
    CHECK_THROWS_AS(field_from_json(j), std::invalid_argument);
}

TEST_CASE("space-time serialization shape") {
    SpaceTimeField u;
    u.initial = zero_field(1, 3);
    u.time = TimeGrid::periodic_uniform(kTwoPi, 4);
    u.space = default_grid(1, 3);
    u.values.assign(u.time.size() * u.space.size(), Complex{1.0, -2.0});
    Json j = spacetime_to_json(u);
    REQUIRE(j["time_nodes"].size() == 4);
    REQUIRE(j["space_points"].size() == u.space.size());
    REQUIRE(j["values"].size() == 4);
    REQUIRE(j["values"][0].size() == u.space.size());
    CHECK(j["values"][0][0][0] == 1.0);
    CHECK(j["values"][0][0][1] == -2.0);
}

TEST_CASE("atomic JSON file round trip") {
    auto path = temp_file("hosc_test_report.json");
    VerificationReport rep = sample_report();
    write_json_file(path.string(), rep.to_json());
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    Json loaded = read_json_file(path.string());
    CHECK(loaded == rep.to_json());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_json_file(path.string()), std::invalid_argument);
}

TEST_CASE("ordered json preserves insertion order") {
    Json j;
    j["zebra"] = 1;
    j["alpha"] = 2;
    CHECK(j.dump() == "{\"zebra\":1,\"alpha\":2}");
}
