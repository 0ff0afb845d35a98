#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sqrtlat {

namespace {

std::map<std::string, double> default_tolerances() {
    return {
        // zero finding and winding
        {"winding_integer_slack", 1e-3},
        {"contour_nudge", 1e-3},
        {"near_contour", 1e-6},
        {"zero_residual", 1e-8},
        {"bisection_tol", 1e-10},
        {"zero_separation", 1e-6},
        {"delta_window_slack", 4.0},
        // property-based brackets
        {"moment_bracket_lo", 0.3},
        {"moment_bracket_hi", 1.5},
        {"psi_moment_lo", 0.6},
        {"psi_moment_hi", 1.4},
        {"rect_ratio_lo", 0.2},
        {"rect_ratio_hi", 5.0},
        {"l2_ratio_lo", 0.2},
        {"l2_ratio_hi", 3.0},
        {"l2norm_trend_lo", 0.5},
        {"l2norm_trend_hi", 2.0},
        {"bulk_bound", 1.0},
        {"hist_mean_ratio", 0.1},
        // pointwise comparison thresholds
        {"delta_tol", 1e-6},
        {"coeff_rel", 1e-6},
        {"kloosterman_tol", 1e-12},
        {"phi_feq_tol", 1e-8},
        {"phi_residue_tol", 1e-3},
        {"laplace_phi_tol", 1e-6},
        {"midregime_coeff", 5.0},
        {"thirdregime_rel", 0.1},
        {"negint_tol", 1e-3},
        {"interp_tol", 1e-6},
    };
}

std::mutex cfg_mtx;

Config make_default() {
    Config c;
    const char* env = std::getenv("SQRTLAT_CACHE");
    c.cache_dir = env && *env ? env : "./cache";
    if (const char* t = std::getenv("SQRTLAT_THREADS")) c.threads = std::atoi(t);
    c.tolerances = default_tolerances();
    return c;
}

}  // namespace

namespace {

void apply_config_file(Config& cfg, const std::string& path);

}  // namespace

Config& config() {
    static Config cfg = [] {
        Config c = make_default();
        if (const char* p = std::getenv("SQRTLAT_CONFIG"))
            if (*p) apply_config_file(c, p);
        return c;
    }();
    return cfg;
}

void load_config_file(const std::string& path) {
    std::lock_guard lk(cfg_mtx);
    apply_config_file(config(), path);
}

namespace {

void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "cache_dir") cfg.cache_dir = val;
        else if (key == "default_N") cfg.default_N = std::stoi(val);
        else if (key == "height") cfg.height_override = std::stod(val);
        else if (key == "precision_cap_bits") cfg.precision_cap_bits = std::stoi(val);
        else if (key == "threads") cfg.threads = std::stoi(val);
        else if (key.rfind("tol.", 0) == 0) cfg.tolerances[key.substr(4)] = std::stod(val);
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

}  // namespace

double tolerance(const std::string& name) {
    const auto& t = config().tolerances;
    auto it = t.find(name);
    if (it == t.end()) throw std::invalid_argument("unknown tolerance name: " + name);
    return it->second;
}

int thread_budget() {
    int t = config().threads;
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void parallel_for(long count, const std::function<void(long)>& body) {
    int nt = thread_budget();
    if (count <= 1 || nt <= 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    if (nt > count) nt = int(count);
    std::vector<std::thread> workers;
    std::exception_ptr first_error;
    std::mutex err_mtx;
    for (int w = 0; w < nt; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (long i = w; i < count; i += nt) body(i);
            } catch (...) {
                std::lock_guard lk(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sqrtlat
