#pragma once

#include <json.hpp>
#include <optional>
#include <string>

namespace sqrtlat {

// Cache directory from SQRTLAT_CACHE, default ./cache. Created on first write.
std::string cache_dir();

std::optional<nlohmann::json> cache_load(const std::string& name);
void cache_store(const std::string& name, const nlohmann::json& j);

}  // namespace sqrtlat
