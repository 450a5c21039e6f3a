#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace srh {

// --- warning sink -------------------------------------------------------------
// Warnings go to stderr and are collected so experiment runners can persist
// them in the run manifest.

namespace detail {
struct WarnState {
    std::mutex mu;
    std::vector<std::string> messages;
    bool echo = true;
};
inline WarnState& warn_state() {
    static WarnState s;
    return s;
}
}  // namespace detail

inline void warn(const std::string& msg) {
    auto& s = detail::warn_state();
    std::lock_guard<std::mutex> lock(s.mu);
    s.messages.push_back(msg);
    if (s.echo) std::fprintf(stderr, "[srh] warning: %s\n", msg.c_str());
}

inline std::vector<std::string> drain_warnings() {
    auto& s = detail::warn_state();
    std::lock_guard<std::mutex> lock(s.mu);
    std::vector<std::string> out;
    out.swap(s.messages);
    return out;
}

inline void echo_warnings(bool on) { detail::warn_state().echo = on; }

// --- least-squares line fit -----------------------------------------------------

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    int points = 0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matching samples");
    const int n = static_cast<int>(x.size());
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.points = n;
    if (n > 2) {
        double ss = 0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] - (f.intercept + f.slope * x[i]);
            ss += r * r;
        }
        f.slope_stderr = std::sqrt(ss / (n - 2) / sxx);
    }
    return f;
}

// --- deterministic parallel map -------------------------------------------------
// Runs body(i) for i in [0, count); results must be written into per-index
// slots by the caller so the reduction order never depends on scheduling.

inline void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < count; i += jobs) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace srh
