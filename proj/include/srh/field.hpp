#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/grid.hpp"

namespace srh {

using cplx = std::complex<double>;

enum class Rep : std::uint32_t { physical = 0, spectral = 1 };

// Complex scalar field on a Grid3D. Immutable-by-convention value type: all
// operations return fresh fields.
struct Field {
    Grid3D grid;
    Rep rep = Rep::physical;
    std::vector<cplx> v;

    Field() = default;
    Field(const Grid3D& g, Rep r) : grid(g), rep(r), v(g.size(), cplx(0.0, 0.0)) {}

    static Field zeros(const Grid3D& g, Rep r = Rep::physical) { return Field(g, r); }

    cplx& at(int i, int j, int k) { return v[grid.idx(i, j, k)]; }
    const cplx& at(int i, int j, int k) const { return v[grid.idx(i, j, k)]; }

    std::size_t size() const { return v.size(); }

    bool finite() const {
        for (const auto& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }
};

inline void require_same_grid(const Field& a, const Field& b, const char* what) {
    if (a.grid != b.grid)
        throw std::invalid_argument(std::string(what) + ": fields live on different grids");
}

// --- flat binary serialization -----------------------------------------------
// header: uint32 n, float64 L, uint32 representation tag; body: interleaved
// re/im doubles in row-major order.

inline void write_field(const Field& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    std::uint32_t n = static_cast<std::uint32_t>(f.grid.n);
    std::uint32_t rep = static_cast<std::uint32_t>(f.rep);
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(&f.grid.L), sizeof f.grid.L);
    os.write(reinterpret_cast<const char*>(&rep), sizeof rep);
    os.write(reinterpret_cast<const char*>(f.v.data()), sizeof(cplx) * f.v.size());
    if (!os) throw std::runtime_error("write_field: short write to " + path);
}

inline Field read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    std::uint32_t n = 0, rep = 0;
    double L = 0.0;
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    is.read(reinterpret_cast<char*>(&L), sizeof L);
    is.read(reinterpret_cast<char*>(&rep), sizeof rep);
    if (!is || rep > 1) throw std::runtime_error("read_field: bad header in " + path);
    Field f(Grid3D::make(static_cast<int>(n), L), static_cast<Rep>(rep));
    is.read(reinterpret_cast<char*>(f.v.data()), sizeof(cplx) * f.v.size());
    if (!is) throw std::runtime_error("read_field: truncated body in " + path);
    return f;
}

// CSV dump, intended for small grids only.
inline void write_field_csv(const Field& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_field_csv: cannot open " + path);
    os << "i,j,k,re,im\n";
    char line[128];
    for (int i = 0; i < f.grid.n; ++i)
        for (int j = 0; j < f.grid.n; ++j)
            for (int k = 0; k < f.grid.n; ++k) {
                const cplx& z = f.at(i, j, k);
                std::snprintf(line, sizeof line, "%d,%d,%d,%.17g,%.17g\n", i, j, k,
                              z.real(), z.imag());
                os << line;
            }
}

}  // namespace srh
