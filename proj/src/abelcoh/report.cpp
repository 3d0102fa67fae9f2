#include "abelcoh/report.hpp"

#include <algorithm>

namespace abelcoh {

VerificationReport::VerificationReport(int rank, std::string command) : rank_(rank), command_(std::move(command)) {}

void VerificationReport::add(std::string id, std::string anchor, bool pass, Json detail, double seconds) {
    checks_.push_back({std::move(id), std::move(anchor), pass, std::move(detail), seconds});
}

bool VerificationReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
    for (const auto& c : checks_)
        if (c.id == id) return &c;
    return nullptr;
}

void VerificationReport::merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    for (const auto& [key, value] : other.data_.items()) data_[key] = value;
}

Json VerificationReport::to_json(bool include_timing) const {
    Json out;
    out["rank"] = rank_;
    out["command"] = command_;
    Json checks = Json::array();
    for (const auto& c : checks_) {
        Json record;
        record["id"] = c.id;
        record["anchor"] = c.anchor;
        record["pass"] = c.pass;
        record["detail"] = c.detail;
        if (include_timing) record["seconds"] = c.seconds;
        checks.push_back(std::move(record));
    }
    out["checks"] = std::move(checks);
    out["data"] = data_;
    out["passed"] = passed();
    return out;
}

} // namespace abelcoh
