#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "srh/spectral.hpp"
#include "srh/util.hpp"

namespace srh {

// Discrete p-variation over sampled times, maximized over all subsequences by
// dynamic programming:
//   best(j) = max_{i<j} [ best(i) + d(i,j)^p ],  answer = max_j best(j)
// (with the endpoint term ||v(t_j)||^p added when the partition is allowed to
// end at t = +infinity, where v vanishes by convention). Exact on the sampled
// partition lattice; O(J^2) distance evaluations.
//
// dist(i, j) = ||v(t_j) - v(t_i)||,  norm_to_zero(j) = ||v(t_j)||.
inline double vp_variation_dp(int count, double p,
                              const std::function<double(int, int)>& dist,
                              const std::function<double(int)>& norm_to_zero,
                              bool infinite_endpoint) {
    if (count < 1) throw std::invalid_argument("vp_variation_dp: no samples");
    if (!(p >= 1.0) || std::isinf(p))
        throw std::invalid_argument("vp_variation_dp: require 1 <= p < inf");
    std::vector<double> best(count, 0.0);
    double answer = 0.0;
    for (int j = 0; j < count; ++j) {
        for (int i = 0; i < j; ++i)
            best[j] = std::max(best[j], best[i] + std::pow(dist(i, j), p));
        double closed = best[j];
        if (infinite_endpoint) closed += std::pow(norm_to_zero(j), p);
        answer = std::max(answer, closed);
    }
    return std::pow(answer, 1.0 / p);
}

struct VariationSamples {
    std::vector<double> times;
    std::vector<Field> values;
    bool infinite_endpoint = false;

    void validate() const {
        if (times.size() != values.size() || times.empty())
            throw std::invalid_argument("VariationSamples: time/value mismatch");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument("VariationSamples: times must strictly increase");
    }
};

inline constexpr int kVpExactGuard = 64;

// V^p norm of field samples. Above the guard the samples are coarsened (every
// ceil(J/guard)-th kept, endpoints included) with a warning; the DP stays
// exact on what it is given.
inline double vp_norm_discrete(const VariationSamples& samples, double p) {
    samples.validate();
    const int J = static_cast<int>(samples.times.size());
    std::vector<int> keep;
    if (J > kVpExactGuard) {
        const int stride = (J + kVpExactGuard - 1) / kVpExactGuard;
        for (int j = 0; j < J; j += stride) keep.push_back(j);
        if (keep.back() != J - 1) keep.push_back(J - 1);
        warn("vp_norm_discrete: " + std::to_string(J) + " samples coarsened to " +
             std::to_string(keep.size()) + " for the exact DP guard");
    } else {
        for (int j = 0; j < J; ++j) keep.push_back(j);
    }
    auto dist = [&](int i, int j) {
        const Field& a = samples.values[keep[i]];
        const Field& b = samples.values[keep[j]];
        double acc = 0.0;
        for (std::size_t q = 0; q < a.size(); ++q) acc += std::norm(b.v[q] - a.v[q]);
        const Grid3D& g = a.grid;
        const double w = (a.rep == Rep::physical) ? g.dx * g.dx * g.dx : 1.0 / (g.L * g.L * g.L);
        return std::sqrt(acc * w);
    };
    auto nz = [&](int j) { return l2_norm(samples.values[keep[j]]); };
    return vp_variation_dp(static_cast<int>(keep.size()), p, dist, nz,
                           samples.infinite_endpoint);
}

// convenience overload for scalar-vector samples (used by band surrogates)
inline double vp_norm_discrete(const std::vector<std::vector<double>>& samples, double p,
                               bool infinite_endpoint) {
    if (samples.empty()) throw std::invalid_argument("vp_norm_discrete: no samples");
    auto dist = [&](int i, int j) {
        double acc = 0.0;
        for (std::size_t q = 0; q < samples[i].size(); ++q) {
            const double d = samples[j][q] - samples[i][q];
            acc += d * d;
        }
        return std::sqrt(acc);
    };
    auto nz = [&](int j) {
        double acc = 0.0;
        for (double x : samples[j]) acc += x * x;
        return std::sqrt(acc);
    };
    return vp_variation_dp(static_cast<int>(samples.size()), p, dist, nz, infinite_endpoint);
}

}  // namespace srh
