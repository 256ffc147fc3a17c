#pragma once

#include <cstdint>

namespace magstego::gf256 {

// GF(2^8) with reducing polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11d),
// generator alpha = 2. Log/antilog tables are built once at startup.
inline constexpr unsigned kReducingPoly = 0x11d;

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t div(std::uint8_t a, std::uint8_t b);  // b != 0
std::uint8_t inv(std::uint8_t a);                  // a != 0
std::uint8_t pow_alpha(int e);                     // alpha^e, any integer e

}  // namespace magstego::gf256
