#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace abelcoh {

using Json = nlohmann::ordered_json;

struct CheckRecord {
    std::string id;
    /// The identity or statement being checked, in plain notation.
    std::string anchor;
    bool pass = false;
    Json detail;
    double seconds = 0.0;
};

/// Ordered list of check records plus a free-form data payload. Overall status
/// is the conjunction of the records; merging concatenates records and merges
/// data objects key by key, so merging is associative.
class VerificationReport {
public:
    VerificationReport() = default;
    VerificationReport(int rank, std::string command);

    int rank() const { return rank_; }
    const std::string& command() const { return command_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    Json& data() { return data_; }
    const Json& data() const { return data_; }

    void add(CheckRecord record) { checks_.push_back(std::move(record)); }
    void add(std::string id, std::string anchor, bool pass, Json detail = Json::object(), double seconds = 0.0);

    bool passed() const;
    const CheckRecord* find(const std::string& id) const;

    void merge(const VerificationReport& other);

    /// {rank, command, checks:[{id, anchor, pass, detail}], data, passed}.
    /// Timings are omitted unless requested, keeping output byte-stable.
    Json to_json(bool include_timing = false) const;

private:
    int rank_ = 0;
    std::string command_;
    std::vector<CheckRecord> checks_;
    Json data_ = Json::object();
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace abelcoh
