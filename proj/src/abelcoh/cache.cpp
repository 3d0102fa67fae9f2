#include "abelcoh/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace abelcoh {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::filesystem::path cache_file(const std::string& dir, int n) {
    return std::filesystem::path(dir) / ("complex-" + complex_cache_key(n) + ".json");
}

} // namespace

std::string complex_cache_key(int n) {
    const std::string content =
        "abelcoh-ce-blocks;rank=" + std::to_string(n) + ";realization=" + std::to_string(kRealizationVersion);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(content)));
    return buf;
}

std::optional<std::vector<BlockRank>> load_block_ranks(const std::string& dir, int n) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(cache_file(dir, n));
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (j.at("key") != complex_cache_key(n) || j.at("rank") != n ||
            j.at("realization") != kRealizationVersion) {
            return std::nullopt;
        }
        std::vector<BlockRank> blocks;
        for (const auto& b : j.at("blocks")) {
            BlockRank r;
            r.key.degree = b.at(0).get<int>();
            r.key.weight = b.at(1).get<std::vector<int>>();
            r.dim = b.at(2).get<std::size_t>();
            r.rank_out = b.at(3).get<std::size_t>();
            blocks.push_back(std::move(r));
        }
        return blocks;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

void save_block_ranks(const std::string& dir, int n, const std::vector<BlockRank>& blocks) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    Json j;
    j["key"] = complex_cache_key(n);
    j["rank"] = n;
    j["realization"] = kRealizationVersion;
    Json rows = Json::array();
    for (const auto& b : blocks) rows.push_back(Json::array({b.key.degree, b.key.weight, b.dim, b.rank_out}));
    j["blocks"] = std::move(rows);
    const auto path = cache_file(dir, n);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
}

} // namespace abelcoh
