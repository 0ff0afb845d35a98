#pragma once

#include <functional>
#include <map>
#include <string>

namespace sqrtlat {

// Runtime knobs plus the table of every property-based constant used by the
// analysis routines, so the thresholds are auditable (and overridable) in one
// place rather than scattered through the code.
struct Config {
    std::string cache_dir;
    int default_N = 128;
    double height_override = -1.0;  // < 0 means the 10/N rule
    int precision_cap_bits = 4096;
    int threads = 0;                // 0 = hardware concurrency
    std::map<std::string, double> tolerances;
};

// Process-wide configuration; defaults plus SQRTLAT_CACHE / SQRTLAT_THREADS
// applied on first access.
Config& config();

// Overlay key=value pairs from a plain text file ('#' comments allowed).
// Tolerance entries use the prefix tol., e.g. tol.zero_residual=1e-8.
void load_config_file(const std::string& path);

// Named tolerance lookup; unknown names are an error so that a typo cannot
// silently fall back to a default.
double tolerance(const std::string& name);

int thread_budget();

// Static partition of [0, count) over the thread budget. Bodies must be
// independent; each worker runs with its own floating point precision state.
void parallel_for(long count, const std::function<void(long)>& body);

}  // namespace sqrtlat
