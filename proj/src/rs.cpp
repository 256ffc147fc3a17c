#include "magstego/rs.hpp"

#include <algorithm>

#include "magstego/errors.hpp"
#include "magstego/gf256.hpp"

namespace magstego {

namespace gf = gf256;

namespace {

// Syndromes S_i = c(alpha^i), i = 0..n_sym-1, where the codeword is read as
// a polynomial with the first byte as the highest-degree coefficient.
std::vector<std::uint8_t> syndromes(const std::vector<std::uint8_t>& cw, int n_sym) {
    std::vector<std::uint8_t> s(n_sym, 0);
    for (int i = 0; i < n_sym; ++i) {
        const std::uint8_t x = gf::pow_alpha(i);
        std::uint8_t acc = 0;
        for (std::uint8_t byte : cw) acc = static_cast<std::uint8_t>(gf::mul(acc, x) ^ byte);
        s[i] = acc;
    }
    return s;
}

}  // namespace

std::vector<std::uint8_t> rs_generator(int n_sym) {
    std::vector<std::uint8_t> g{1};
    for (int i = 0; i < n_sym; ++i) {
        // multiply by (x - alpha^i); minus is plus in GF(2^8)
        std::vector<std::uint8_t> next(g.size() + 1, 0);
        const std::uint8_t root = gf::pow_alpha(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j] ^= g[j];
            next[j + 1] ^= gf::mul(g[j], root);
        }
        g = std::move(next);
    }
    return g;
}

Codeword rs_encode(const std::vector<std::uint8_t>& data, int n_sym) {
    if (data.empty()) fail(errc::capacity_exceeded, "empty message");
    if (n_sym < 0 || data.size() + static_cast<std::size_t>(n_sym) > 255)
        fail(errc::capacity_exceeded, "data length + n_sym exceeds 255");
    Codeword cw;
    cw.data = data;
    if (n_sym == 0) return cw;

    // remainder of data * x^n_sym divided by the generator
    const std::vector<std::uint8_t> gen = rs_generator(n_sym);
    std::vector<std::uint8_t> rem(data);
    rem.resize(data.size() + n_sym, 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::uint8_t coef = rem[i];
        if (coef == 0) continue;
        for (std::size_t j = 1; j < gen.size(); ++j)
            rem[i + j] ^= gf::mul(gen[j], coef);
    }
    cw.parity.assign(rem.end() - n_sym, rem.end());
    return cw;
}

RsDecodeResult rs_decode(const std::vector<std::uint8_t>& codeword, int n_sym) {
    if (codeword.size() > 255) fail(errc::capacity_exceeded, "codeword longer than 255");
    if (n_sym < 0 || static_cast<std::size_t>(n_sym) >= codeword.size() + 1)
        fail(errc::capacity_exceeded, "n_sym larger than codeword");

    RsDecodeResult res;
    res.data.assign(codeword.begin(), codeword.end() - n_sym);
    if (n_sym == 0) return res;

    const std::vector<std::uint8_t> synd = syndromes(codeword, n_sym);
    if (std::all_of(synd.begin(), synd.end(), [](std::uint8_t v) { return v == 0; })) return res;

    // Berlekamp-Massey: error locator sigma(x), sigma(0) = 1, ascending order.
    std::vector<std::uint8_t> sigma{1}, prev{1};
    int L = 0, m = 1;
    std::uint8_t b = 1;
    for (int n = 0; n < n_sym; ++n) {
        std::uint8_t delta = synd[n];
        for (int i = 1; i <= L; ++i)
            delta ^= gf::mul(sigma[i], synd[n - i]);
        if (delta == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<std::uint8_t> tmp = sigma;
            const std::uint8_t scale = gf::div(delta, b);
            sigma.resize(std::max(sigma.size(), prev.size() + m), 0);
            for (std::size_t i = 0; i < prev.size(); ++i)
                sigma[i + m] ^= gf::mul(prev[i], scale);
            L = n + 1 - L;
            prev = std::move(tmp);
            b = delta;
            m = 1;
        } else {
            const std::uint8_t scale = gf::div(delta, b);
            sigma.resize(std::max(sigma.size(), prev.size() + m), 0);
            for (std::size_t i = 0; i < prev.size(); ++i)
                sigma[i + m] ^= gf::mul(prev[i], scale);
            ++m;
        }
    }
    while (!sigma.empty() && sigma.back() == 0) sigma.pop_back();
    const int n_err = static_cast<int>(sigma.size()) - 1;
    if (n_err <= 0 || 2 * n_err > n_sym) fail(errc::uncorrectable, "error locator degree out of range");

    // Chien search. Position p counts from the end (p = 0 is the last byte);
    // an error at p means sigma(alpha^-p) == 0.
    const int n = static_cast<int>(codeword.size());
    std::vector<int> error_pos;
    for (int p = 0; p < n; ++p) {
        const std::uint8_t x_inv = gf::pow_alpha(-p);
        std::uint8_t acc = 0;
        for (int i = static_cast<int>(sigma.size()) - 1; i >= 0; --i)
            acc = static_cast<std::uint8_t>(gf::mul(acc, x_inv) ^ sigma[i]);
        if (acc == 0) error_pos.push_back(p);
    }
    if (static_cast<int>(error_pos.size()) != n_err)
        fail(errc::uncorrectable, "locator roots do not match error count");

    // Error evaluator Omega = S(x) * sigma(x) mod x^n_sym (ascending order).
    std::vector<std::uint8_t> omega(n_sym, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (int j = 0; i + j < static_cast<std::size_t>(n_sym); ++j)
            omega[i + j] ^= gf::mul(sigma[i], synd[j]);
    }

    // Forney with b = 0: e = X * Omega(X^-1) / sigma'(X^-1), X = alpha^p.
    std::vector<std::uint8_t> corrected(codeword);
    for (int p : error_pos) {
        const std::uint8_t x = gf::pow_alpha(p);
        const std::uint8_t x_inv = gf::pow_alpha(-p);
        std::uint8_t om = 0;
        for (int i = static_cast<int>(omega.size()) - 1; i >= 0; --i)
            om = static_cast<std::uint8_t>(gf::mul(om, x_inv) ^ omega[i]);
        // formal derivative of sigma keeps odd-degree terms only
        std::uint8_t dsig = 0;
        for (std::size_t i = 1; i < sigma.size(); i += 2) {
            std::uint8_t term = sigma[i];
            for (std::size_t k = 0; k + 1 < i; ++k) term = gf::mul(term, x_inv);
            dsig ^= term;
        }
        if (dsig == 0) fail(errc::uncorrectable, "degenerate locator derivative");
        const std::uint8_t magnitude = gf::mul(x, gf::div(om, dsig));
        corrected[n - 1 - p] ^= magnitude;
    }

    const std::vector<std::uint8_t> check = syndromes(corrected, n_sym);
    if (!std::all_of(check.begin(), check.end(), [](std::uint8_t v) { return v == 0; }))
        fail(errc::uncorrectable, "nonzero syndromes after correction");

    res.data.assign(corrected.begin(), corrected.end() - n_sym);
    res.errors_corrected = n_err;
    return res;
}

}  // namespace magstego
