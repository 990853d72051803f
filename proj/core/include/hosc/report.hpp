#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hosc/norms.hpp"
#include "hosc/propagators.hpp"
#include "hosc/spectral.hpp"

namespace hosc {

using Json = nlohmann::ordered_json;

// ---- verification reports ---------------------------------------------------

struct TrialRecord {
    int cutoff = 0;
    int trial = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct ReportAggregate {
    double max = 0.0;
    double median = 0.0;
    std::map<int, double> c_hat_by_cutoff;  // max ratio per cutoff
};

struct VerificationReport {
    std::string suite;
    Json params = Json::object();
    std::vector<TrialRecord> trials;
    ReportAggregate aggregate;
    bool pass = false;
    double tolerance = 0.0;
    std::vector<std::string> notes;

    // Fills aggregate from the trial records (max, median, per-cutoff max).
    void aggregate_from_trials();

    Json to_json() const;
    static VerificationReport from_json(const Json& j);

    // One row per (trial, cutoff): suite,cutoff,trial,lhs,rhs,ratio.
    std::string to_csv() const;
};

// ---- field / space-time serialization ----------------------------------------

Json field_to_json(const SpectralField& f);
SpectralField field_from_json(const Json& j);

Json spacetime_to_json(const SpaceTimeField& u);

// ---- file helpers -------------------------------------------------------------

Json read_json_file(const std::string& path);

// Both writers go through a temp file in the destination directory followed
// by an atomic rename.
void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const Json& j);

} // namespace hosc
