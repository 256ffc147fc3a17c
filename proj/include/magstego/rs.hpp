#pragma once

#include <cstdint>
#include <vector>

namespace magstego {

// Systematic Reed-Solomon over GF(256), generator roots alpha^0..alpha^(n-1)
// (the QR code convention).

struct Codeword {
    std::vector<std::uint8_t> data;
    std::vector<std::uint8_t> parity;

    std::vector<std::uint8_t> bytes() const {
        std::vector<std::uint8_t> out = data;
        out.insert(out.end(), parity.begin(), parity.end());
        return out;
    }
};

struct RsDecodeResult {
    std::vector<std::uint8_t> data;  // corrected message (codeword minus parity)
    int errors_corrected = 0;
};

// Generator polynomial, highest degree first, g[0] == 1, degree n_sym.
std::vector<std::uint8_t> rs_generator(int n_sym);

// Throws CapacityExceeded if data.size() + n_sym > 255 or data is empty.
Codeword rs_encode(const std::vector<std::uint8_t>& data, int n_sym);

// Corrects up to floor(n_sym/2) byte errors; throws Uncorrectable when the
// locator fails or the corrected word still has nonzero syndromes.
RsDecodeResult rs_decode(const std::vector<std::uint8_t>& codeword, int n_sym);

}  // namespace magstego
