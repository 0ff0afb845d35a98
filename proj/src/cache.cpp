#include "cache.hpp"

#include "config.hpp"

#include <filesystem>
#include <fstream>

namespace sqrtlat {

std::string cache_dir() {
    return config().cache_dir;
}

std::optional<nlohmann::json> cache_load(const std::string& name) {
    std::ifstream in(std::filesystem::path(cache_dir()) / name);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // corrupt cache entries are recomputed
    }
}

void cache_store(const std::string& name, const nlohmann::json& j) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    if (ec) return;
    auto path = std::filesystem::path(cache_dir()) / name;
    std::ofstream out(path);
    if (out) out << j.dump();
}

}  // namespace sqrtlat
