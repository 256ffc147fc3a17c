#include "magstego/gf256.hpp"

#include <array>

namespace magstego::gf256 {

namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<int, 256> log{};

    Tables() {
        unsigned v = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = static_cast<std::uint8_t>(v);
            log[v] = i;
            v <<= 1;
            if (v & 0x100) v ^= kReducingPoly;
        }
        for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
        log[0] = -1;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] + t.log[b]];
}

std::uint8_t div(std::uint8_t a, std::uint8_t b) {
    const Tables& t = tables();
    if (a == 0) return 0;
    return t.exp[(t.log[a] - t.log[b] + 255) % 255];
}

std::uint8_t inv(std::uint8_t a) {
    const Tables& t = tables();
    return t.exp[255 - t.log[a]];
}

std::uint8_t pow_alpha(int e) {
    int m = e % 255;
    if (m < 0) m += 255;
    return tables().exp[m];
}

}  // namespace magstego::gf256
