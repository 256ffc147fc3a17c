#pragma once

// Independent reference implementations used to pin expected values. These
// stay deliberately naive and must not call into the library paths they
// check.

#include <cstdint>
#include <vector>

#include "magstego/vec3.hpp"

namespace oracles {

// GF(256) multiply by shift-and-reduce (peasant multiplication mod 0x11d).
inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    unsigned r = 0;
    unsigned aa = a;
    unsigned bb = b;
    while (bb) {
        if (bb & 1) r ^= aa;
        aa <<= 1;
        if (aa & 0x100) aa ^= 0x11d;
        bb >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

// Polynomial long division over GF(256), coefficients highest degree first.
// Returns the remainder of num / den.
inline std::vector<std::uint8_t> gf_poly_mod(std::vector<std::uint8_t> num,
                                             const std::vector<std::uint8_t>& den) {
    // multiplicative inverse via exhaustive search; slow and independent
    auto inv = [](std::uint8_t v) -> std::uint8_t {
        for (int c = 1; c < 256; ++c)
            if (gf_mul(v, static_cast<std::uint8_t>(c)) == 1) return static_cast<std::uint8_t>(c);
        return 0;
    };
    const std::uint8_t lead_inv = inv(den.front());
    for (std::size_t i = 0; i + den.size() <= num.size(); ++i) {
        const std::uint8_t coef = gf_mul(num[i], lead_inv);
        if (coef == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] ^= gf_mul(den[j], coef);
    }
    return std::vector<std::uint8_t>(num.end() - (den.size() - 1), num.end());
}

// alpha^e with alpha = 2 via repeated shift-and-reduce.
inline std::uint8_t gf_pow_alpha(int e) {
    std::uint8_t v = 1;
    for (int i = 0; i < e; ++i) v = gf_mul(v, 2);
    return v;
}

// Generator polynomial with roots alpha^0..alpha^(n-1), built only from the
// oracle multiply.
inline std::vector<std::uint8_t> rs_generator(int n_sym) {
    std::vector<std::uint8_t> g{1};
    for (int i = 0; i < n_sym; ++i) {
        std::vector<std::uint8_t> next(g.size() + 1, 0);
        const std::uint8_t root = gf_pow_alpha(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j] ^= g[j];
            next[j + 1] ^= gf_mul(g[j], root);
        }
        g = next;
    }
    return g;
}

// Field of a uniformly magnetized cuboid approximated as a lattice of point
// dipoles (cell size in um, magnetization in A/m, lengths in um, B in G).
inline magstego::Vec3 dipole_cell_field(const magstego::Vec3& center, const magstego::Vec3& half,
                                        const magstego::Vec3& m_per_vol, double cell,
                                        const magstego::Vec3& p) {
    using magstego::Vec3;
    const int nx = std::max(1, static_cast<int>(std::round(2 * half.x / cell)));
    const int ny = std::max(1, static_cast<int>(std::round(2 * half.y / cell)));
    const int nz = std::max(1, static_cast<int>(std::round(2 * half.z / cell)));
    const double dx = 2 * half.x / nx, dy = 2 * half.y / ny, dz = 2 * half.z / nz;
    const double cell_vol_um3 = dx * dy * dz;
    // mu0/(4 pi) in T*m/A times G/T; the um^3/um^3 of volume over r^3 cancels
    const double prefactor = 1e-7 * 1e4 * cell_vol_um3;
    Vec3 b{};
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            for (int k = 0; k < nz; ++k) {
                const Vec3 src{center.x - half.x + (i + 0.5) * dx,
                               center.y - half.y + (j + 0.5) * dy,
                               center.z - half.z + (k + 0.5) * dz};
                const Vec3 r = p - src;
                const double rn = magstego::norm(r);
                const double r3 = rn * rn * rn;
                const double mr = magstego::dot(m_per_vol, r);
                b += (3.0 * mr / (rn * rn) * r - m_per_vol) * (prefactor / r3);
            }
        }
    }
    return b;
}

}  // namespace oracles
