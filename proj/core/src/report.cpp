#include "hosc/report.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hosc {

namespace {

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

void VerificationReport::aggregate_from_trials() {
    aggregate = ReportAggregate{};
    if (trials.empty()) return;

    std::vector<double> ratios;
    ratios.reserve(trials.size());
    for (const TrialRecord& t : trials) {
        ratios.push_back(t.ratio);
        auto [it, inserted] = aggregate.c_hat_by_cutoff.try_emplace(t.cutoff, t.ratio);
        if (!inserted) it->second = std::max(it->second, t.ratio);
    }
    aggregate.max = *std::max_element(ratios.begin(), ratios.end());
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    aggregate.median = ratios.size() % 2 == 1
                           ? ratios[mid]
                           : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

Json VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["params"] = params;
    Json jt = Json::array();
    for (const TrialRecord& t : trials) {
        Json rec;
        rec["cutoff"] = t.cutoff;
        rec["trial"] = t.trial;
        rec["lhs"] = t.lhs;
        rec["rhs"] = t.rhs;
        rec["ratio"] = t.ratio;
        jt.push_back(std::move(rec));
    }
    j["trials"] = std::move(jt);
    Json agg;
    agg["max"] = aggregate.max;
    agg["median"] = aggregate.median;
    Json chat = Json::object();
    for (const auto& [cutoff, value] : aggregate.c_hat_by_cutoff) {
        chat[std::to_string(cutoff)] = value;
    }
    agg["c_hat_by_cutoff"] = std::move(chat);
    j["aggregate"] = std::move(agg);
    j["pass"] = pass;
    j["tolerance"] = tolerance;
    j["notes"] = notes;
    return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params");
    for (const Json& rec : j.at("trials")) {
        TrialRecord t;
        t.cutoff = rec.at("cutoff").get<int>();
        t.trial = rec.at("trial").get<int>();
        t.lhs = rec.at("lhs").get<double>();
        t.rhs = rec.at("rhs").get<double>();
        t.ratio = rec.at("ratio").get<double>();
        r.trials.push_back(t);
    }
    const Json& agg = j.at("aggregate");
    r.aggregate.max = agg.at("max").get<double>();
    r.aggregate.median = agg.at("median").get<double>();
    for (const auto& [key, value] : agg.at("c_hat_by_cutoff").items()) {
        r.aggregate.c_hat_by_cutoff[std::stoi(key)] = value.get<double>();
    }
    r.pass = j.at("pass").get<bool>();
    r.tolerance = j.at("tolerance").get<double>();
    for (const Json& note : j.at("notes")) r.notes.push_back(note.get<std::string>());
    return r;
}

std::string VerificationReport::to_csv() const {
    std::string csv = "suite,cutoff,trial,lhs,rhs,ratio\n";
    for (const TrialRecord& t : trials) {
        csv += suite;
        csv += ',';
        csv += std::to_string(t.cutoff);
        csv += ',';
        csv += std::to_string(t.trial);
        csv += ',';
        csv += shortest(t.lhs);
        csv += ',';
        csv += shortest(t.rhs);
        csv += ',';
        csv += shortest(t.ratio);
        csv += '\n';
    }
    return csv;
}

// ---- field / space-time serialization ----------------------------------------

Json field_to_json(const SpectralField& f) {
    Json j;
    j["dimension"] = f.dimension;
    j["cutoff"] = f.cutoff;
    Json coeffs = Json::array();
    for (const Complex& c : f.coefficients) {
        coeffs.push_back(Json::array({c.real(), c.imag()}));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

SpectralField field_from_json(const Json& j) {
    SpectralField f;
    f.dimension = j.at("dimension").get<int>();
    f.cutoff = j.at("cutoff").get<int>();
    if (f.dimension < 1) throw std::invalid_argument("field dimension must be >= 1");
    const Json& coeffs = j.at("coefficients");
    const std::size_t expected = basis_for(f.cutoff, f.dimension).size();
    if (coeffs.size() != expected) {
        throw std::invalid_argument(
            "coefficient count " + std::to_string(coeffs.size()) +
            " does not match the layout size " + std::to_string(expected) +
            " for cutoff " + std::to_string(f.cutoff) + ", dimension " +
            std::to_string(f.dimension));
    }
    f.coefficients.reserve(expected);
    for (const Json& c : coeffs) {
        f.coefficients.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
    return f;
}

Json spacetime_to_json(const SpaceTimeField& u) {
    Json j;
    j["time_nodes"] = u.time.nodes;
    Json pts = Json::array();
    for (std::size_t i = 0; i < u.space.size(); ++i) {
        const auto point = u.space.point(i);
        pts.push_back(std::vector<double>(point.begin(), point.end()));
    }
    j["space_points"] = std::move(pts);
    Json values = Json::array();
    for (std::size_t t = 0; t < u.time.size(); ++t) {
        Json slice = Json::array();
        const auto row = u.at_time(t);
        for (const Complex& v : row) {
            slice.push_back(Json::array({v.real(), v.imag()}));
        }
        values.push_back(std::move(slice));
    }
    j["values"] = std::move(values);
    return j;
}

// ---- file helpers ---------------------------------------------------------------

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace hosc
