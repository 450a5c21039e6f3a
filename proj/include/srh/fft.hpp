#pragma once

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "srh/field.hpp"
#include "srh/grid.hpp"

namespace srh {

enum class Direction { forward, inverse };

namespace detail {

inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// One FFTW workspace per grid size. Plans are created with FFTW_ESTIMATE so
// the algorithm choice depends only on n, never on runtime timings; results
// are therefore reproducible run to run.
class FftWorkspace {
  public:
    explicit FftWorkspace(int n) : n_(n) {
        const std::size_t m = static_cast<std::size_t>(n) * n * n;
        in_ = fftw_alloc_complex(m);
        out_ = fftw_alloc_complex(m);
        if (!in_ || !out_) throw std::bad_alloc();
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd_ = fftw_plan_dft_3d(n, n, n, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_3d(n, n, n, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw std::runtime_error("FFTW plan creation failed");
    }

    ~FftWorkspace() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }

    FftWorkspace(const FftWorkspace&) = delete;
    FftWorkspace& operator=(const FftWorkspace&) = delete;

    fftw_complex* in() { return in_; }
    const fftw_complex* out() const { return out_; }
    void run(Direction d) { fftw_execute(d == Direction::forward ? fwd_ : bwd_); }

  private:
    int n_;
    fftw_complex* in_;
    fftw_complex* out_;
    fftw_plan fwd_, bwd_;
};

inline FftWorkspace& workspace_for(int n) {
    thread_local std::map<int, std::unique_ptr<FftWorkspace>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<FftWorkspace>(n)).first;
    return *it->second;
}

}  // namespace detail

// Discrete realization of the continuum pair
//   F(f)(xi)  = dx^3 * sum_x f(x) e^{-i x.xi}
//   Finv(g)(x) = L^-3 * sum_xi g(xi) e^{+i x.xi}
// on centered coordinates. The centering contributes a (-1)^(i+j+k) phase
// relative to the raw DFT; n even makes the phase identical on both sides.
inline Field transform(const Field& f, Direction dir) {
    if (dir == Direction::forward && f.rep != Rep::physical)
        throw std::invalid_argument("transform: forward expects a physical-representation field");
    if (dir == Direction::inverse && f.rep != Rep::spectral)
        throw std::invalid_argument("transform: inverse expects a spectral-representation field");

    const Grid3D& g = f.grid;
    auto& ws = detail::workspace_for(g.n);
    const double scale = (dir == Direction::forward) ? g.dx * g.dx * g.dx
                                                     : 1.0 / (g.L * g.L * g.L);

    Field r(g, dir == Direction::forward ? Rep::spectral : Rep::physical);
    auto* in = reinterpret_cast<cplx*>(ws.in());

    if (dir == Direction::forward) {
        std::memcpy(in, f.v.data(), sizeof(cplx) * f.size());
        ws.run(dir);
        const auto* out = reinterpret_cast<const cplx*>(ws.out());
        std::size_t p = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k, ++p)
                    r.v[p] = out[p] * (((i + j + k) & 1) ? -scale : scale);
    } else {
        std::size_t p = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k, ++p)
                    in[p] = f.v[p] * (((i + j + k) & 1) ? -1.0 : 1.0);
        ws.run(dir);
        const auto* out = reinterpret_cast<const cplx*>(ws.out());
        for (std::size_t p2 = 0; p2 < r.size(); ++p2) r.v[p2] = out[p2] * scale;
    }
    return r;
}

inline Field to_spectral(const Field& f) {
    return f.rep == Rep::spectral ? f : transform(f, Direction::forward);
}

inline Field to_physical(const Field& f) {
    return f.rep == Rep::physical ? f : transform(f, Direction::inverse);
}

}  // namespace srh
