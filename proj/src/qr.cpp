#include "magstego/qr.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "magstego/errors.hpp"
#include "magstego/rs.hpp"

namespace magstego {

namespace {

constexpr int kSize = ModuleMatrix::kSize;
constexpr int kTotalCodewords = 44;  // version 2

int ec_codewords(EcLevel e) {
    switch (e) {
        case EcLevel::L: return 10;
        case EcLevel::M: return 16;
        case EcLevel::Q: return 22;
        case EcLevel::H: return 28;
    }
    std::abort();
}

int format_ec_bits(EcLevel e) {
    switch (e) {
        case EcLevel::L: return 1;
        case EcLevel::M: return 0;
        case EcLevel::Q: return 3;
        case EcLevel::H: return 2;
    }
    std::abort();
}

EcLevel level_from_format_bits(int b) {
    switch (b) {
        case 1: return EcLevel::L;
        case 0: return EcLevel::M;
        case 3: return EcLevel::Q;
        default: return EcLevel::H;
    }
}

bool mask_bit(int mask, int r, int c) {
    switch (mask) {
        case 0: return (r + c) % 2 == 0;
        case 1: return r % 2 == 0;
        case 2: return c % 3 == 0;
        case 3: return (r + c) % 3 == 0;
        case 4: return (r / 2 + c / 3) % 2 == 0;
        case 5: return (r * c) % 2 + (r * c) % 3 == 0;
        case 6: return ((r * c) % 2 + (r * c) % 3) % 2 == 0;
        case 7: return ((r + c) % 2 + (r * c) % 3) % 2 == 0;
    }
    std::abort();
}

// 15-bit format word: 5 data bits + BCH(15,5) remainder, XOR-masked.
int format_bits(EcLevel level, int mask) {
    const int data = format_ec_bits(level) << 3 | mask;
    int rem = data;
    for (int i = 0; i < 10; ++i) rem = (rem << 1) ^ ((rem >> 9) * 0x537);
    return ((data << 10) | rem) ^ 0x5412;
}

struct FunctionMap {
    std::array<std::uint8_t, kSize * kSize> is_function{};
    std::array<std::uint8_t, kSize * kSize> value{};

    void set(int r, int c, bool dark) {
        is_function[r * kSize + c] = 1;
        value[r * kSize + c] = dark ? 1 : 0;
    }
    bool function(int r, int c) const { return is_function[r * kSize + c] != 0; }
};

// Finder/separator/timing/alignment/dark modules plus reserved format
// slots. Format bit values are drawn separately per (level, mask).
FunctionMap function_map() {
    FunctionMap fm;
    auto finder = [&fm](int r0, int c0) {
        for (int dr = -1; dr <= 7; ++dr) {
            for (int dc = -1; dc <= 7; ++dc) {
                const int r = r0 + dr, c = c0 + dc;
                if (r < 0 || r >= kSize || c < 0 || c >= kSize) continue;
                const bool dark =
                    dr >= 0 && dr <= 6 && dc >= 0 && dc <= 6 &&
                    (dr == 0 || dr == 6 || dc == 0 || dc == 6 || (dr >= 2 && dr <= 4 && dc >= 2 && dc <= 4));
                fm.set(r, c, dark);
            }
        }
    };
    finder(0, 0);
    finder(0, kSize - 7);
    finder(kSize - 7, 0);

    for (int i = 8; i < kSize - 8; ++i) {
        fm.set(6, i, i % 2 == 0);
        fm.set(i, 6, i % 2 == 0);
    }

    // version-2 alignment pattern, centered at (18,18)
    for (int dr = -2; dr <= 2; ++dr)
        for (int dc = -2; dc <= 2; ++dc)
            fm.set(18 + dr, 18 + dc, std::max(std::abs(dr), std::abs(dc)) != 1);

    // format slots (values drawn later) and the fixed dark module
    for (int i = 0; i <= 5; ++i) fm.set(8, i, false);
    fm.set(8, 7, false);
    fm.set(8, 8, false);
    fm.set(7, 8, false);
    for (int r = 0; r <= 5; ++r) fm.set(r, 8, false);
    for (int i = 0; i < 8; ++i) fm.set(kSize - 1 - i, 8, false);
    for (int c = kSize - 7; c < kSize; ++c) fm.set(8, c, false);
    fm.set(kSize - 8, 8, true);
    return fm;
}

void draw_format(ModuleMatrix& m, EcLevel level, int mask) {
    const int bits = format_bits(level, mask);
    auto bit = [bits](int i) { return ((bits >> i) & 1) != 0; };
    for (int i = 0; i <= 5; ++i) m.set(i, 8, bit(i));
    m.set(7, 8, bit(6));
    m.set(8, 8, bit(7));
    m.set(8, 7, bit(8));
    for (int i = 9; i < 15; ++i) m.set(8, 14 - i, bit(i));
    for (int i = 0; i < 8; ++i) m.set(8, kSize - 1 - i, bit(i));
    for (int i = 8; i < 15; ++i) m.set(kSize - 15 + i, 8, bit(i));
}

// Standard zigzag order of the non-function modules (column pairs right to
// left, alternating up/down, skipping the timing column).
std::vector<std::pair<int, int>> data_module_order(const FunctionMap& fm) {
    std::vector<std::pair<int, int>> order;
    order.reserve(kTotalCodewords * 8);
    for (int right = kSize - 1; right >= 1; right -= 2) {
        if (right == 6) right = 5;
        for (int vert = 0; vert < kSize; ++vert) {
            for (int j = 0; j < 2; ++j) {
                const int c = right - j;
                const bool upward = ((right + 1) & 2) == 0;
                const int r = upward ? kSize - 1 - vert : vert;
                if (!fm.function(r, c)) order.emplace_back(r, c);
            }
        }
    }
    return order;
}

int penalty_score(const ModuleMatrix& m) {
    int score = 0;
    // N1: runs of length >= 5 in rows and columns
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < kSize; ++a) {
            int run = 1;
            for (int b = 1; b < kSize; ++b) {
                const bool cur = axis == 0 ? m.get(a, b) : m.get(b, a);
                const bool prev = axis == 0 ? m.get(a, b - 1) : m.get(b - 1, a);
                if (cur == prev) {
                    if (++run == 5) score += 3;
                    else if (run > 5) score += 1;
                } else {
                    run = 1;
                }
            }
        }
    }
    // N2: 2x2 blocks
    for (int r = 0; r + 1 < kSize; ++r)
        for (int c = 0; c + 1 < kSize; ++c) {
            const bool v = m.get(r, c);
            if (v == m.get(r, c + 1) && v == m.get(r + 1, c) && v == m.get(r + 1, c + 1)) score += 3;
        }
    // N3: finder-like 1:1:3:1:1 with 4 light modules on one side
    static constexpr std::array<int, 11> pat_a = {0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1};
    static constexpr std::array<int, 11> pat_b = {1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0};
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < kSize; ++a) {
            for (int start = 0; start + 11 <= kSize; ++start) {
                bool match_a = true, match_b = true;
                for (int i = 0; i < 11; ++i) {
                    const bool v = axis == 0 ? m.get(a, start + i) : m.get(start + i, a);
                    if (v != (pat_a[i] != 0)) match_a = false;
                    if (v != (pat_b[i] != 0)) match_b = false;
                    if (!match_a && !match_b) break;
                }
                if (match_a) score += 40;
                if (match_b) score += 40;
            }
        }
    }
    // N4: dark-module proportion
    const int dark = m.popcount();
    const int total = kSize * kSize;
    const int deviation = std::abs(dark * 20 - total * 10) / total;  // |percent-50| / 5
    score += deviation * 10;
    return score;
}

std::vector<std::uint8_t> build_codewords(const std::vector<std::uint8_t>& payload, EcLevel level) {
    const int cap = qr_capacity_bytes(level);
    if (static_cast<int>(payload.size()) > cap)
        fail(errc::capacity_exceeded,
             "payload of " + std::to_string(payload.size()) + " bytes exceeds version-2 " +
                 ec_level_name(level) + " capacity of " + std::to_string(cap));

    const int n_data = kTotalCodewords - ec_codewords(level);
    std::vector<bool> bits;
    auto push_bits = [&bits](unsigned value, int n) {
        for (int i = n - 1; i >= 0; --i) bits.push_back(((value >> i) & 1) != 0);
    };
    push_bits(4, 4);  // byte mode
    push_bits(static_cast<unsigned>(payload.size()), 8);
    for (std::uint8_t b : payload) push_bits(b, 8);
    const int capacity_bits = n_data * 8;
    const int terminator = std::min<int>(4, capacity_bits - static_cast<int>(bits.size()));
    push_bits(0, terminator);
    while (bits.size() % 8 != 0) bits.push_back(false);

    std::vector<std::uint8_t> data;
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        std::uint8_t b = 0;
        for (int j = 0; j < 8; ++j) b = static_cast<std::uint8_t>(b << 1 | (bits[i + j] ? 1 : 0));
        data.push_back(b);
    }
    for (std::uint8_t pad = 0xec; static_cast<int>(data.size()) < n_data; pad ^= 0xfd)
        data.push_back(pad);

    return rs_encode(data, ec_codewords(level)).bytes();
}

ModuleMatrix assemble(const std::vector<std::uint8_t>& codewords, EcLevel level, int mask,
                      const FunctionMap& fm) {
    ModuleMatrix m;
    for (int r = 0; r < kSize; ++r)
        for (int c = 0; c < kSize; ++c)
            if (fm.function(r, c)) m.set(r, c, fm.value[r * kSize + c] != 0);

    const auto order = data_module_order(fm);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto [r, c] = order[i];
        bool bit = false;
        if (i / 8 < codewords.size()) bit = ((codewords[i / 8] >> (7 - i % 8)) & 1) != 0;
        m.set(r, c, bit != mask_bit(mask, r, c));
    }
    draw_format(m, level, mask);
    return m;
}

}  // namespace

const char* ec_level_name(EcLevel e) {
    switch (e) {
        case EcLevel::L: return "L";
        case EcLevel::M: return "M";
        case EcLevel::Q: return "Q";
        case EcLevel::H: return "H";
    }
    std::abort();
}

EcLevel ec_level_from_name(std::string_view name) {
    if (name == "L" || name == "l") return EcLevel::L;
    if (name == "M" || name == "m") return EcLevel::M;
    if (name == "Q" || name == "q") return EcLevel::Q;
    if (name == "H" || name == "h") return EcLevel::H;
    fail(errc::bad_config, "unknown error correction level '" + std::string(name) + "'");
}

int ModuleMatrix::popcount() const {
    int n = 0;
    for (std::uint8_t b : bits_) n += b;
    return n;
}

std::string to_grid(const ModuleMatrix& m) {
    std::string out;
    out.reserve(kSize * (kSize + 1));
    for (int r = 0; r < kSize; ++r) {
        for (int c = 0; c < kSize; ++c) out.push_back(m.get(r, c) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

ModuleMatrix module_matrix_from_grid(std::string_view text) {
    ModuleMatrix m;
    int r = 0, c = 0;
    for (char ch : text) {
        if (ch == '\n') {
            if (c != 0 && c != kSize) fail(errc::bad_config, "grid row is not 25 modules wide");
            if (c == kSize) ++r;
            c = 0;
            continue;
        }
        if (ch == '\r' || ch == ' ') continue;
        if (r >= kSize || c >= kSize) fail(errc::bad_config, "grid larger than 25x25");
        if (ch == '#') m.set(r, c, true);
        else if (ch == '.') m.set(r, c, false);
        else fail(errc::bad_config, std::string("bad grid character '") + ch + "'");
        ++c;
    }
    if (c == kSize) ++r;
    if (r != kSize) fail(errc::bad_config, "grid is not 25 rows tall");
    return m;
}

int qr_capacity_bytes(EcLevel level) {
    // mode nibble + 8-bit count leave this many whole bytes in version 2
    return kTotalCodewords - ec_codewords(level) - 2;
}

int qr_ec_codewords(EcLevel level) { return ec_codewords(level); }

ModuleMatrix qr_encode_with_mask(const std::vector<std::uint8_t>& payload, EcLevel level, int mask) {
    if (mask < 0 || mask > 7) fail(errc::bad_config, "mask index out of range");
    const auto codewords = build_codewords(payload, level);
    return assemble(codewords, level, mask, function_map());
}

ModuleMatrix qr_encode(const std::vector<std::uint8_t>& payload, EcLevel level) {
    const auto codewords = build_codewords(payload, level);
    const FunctionMap fm = function_map();
    int best_mask = 0;
    int best_score = 0;
    ModuleMatrix best;
    for (int mask = 0; mask < 8; ++mask) {
        ModuleMatrix m = assemble(codewords, level, mask, fm);
        const int score = penalty_score(m);
        if (mask == 0 || score < best_score) {
            best_score = score;
            best_mask = mask;
            best = m;
        }
    }
    (void)best_mask;
    return best;
}

ModuleMatrix qr_encode(std::string_view payload, EcLevel level) {
    return qr_encode(std::vector<std::uint8_t>(payload.begin(), payload.end()), level);
}

std::string payload_text(const QrDecodeResult& r) {
    return std::string(r.payload.begin(), r.payload.end());
}

double module_match_fraction(const ModuleMatrix& a, const ModuleMatrix& b) {
    int same = 0;
    for (int r = 0; r < kSize; ++r)
        for (int c = 0; c < kSize; ++c)
            if (a.get(r, c) == b.get(r, c)) ++same;
    return static_cast<double>(same) / (kSize * kSize);
}

namespace {

QrDecodeResult decode_impl(const ModuleMatrix& m, const ModuleMatrix* reference) {
    // locate the three finders (tolerating a noisy minority of modules)
    const FunctionMap fm = function_map();
    const std::array<std::pair<int, int>, 3> corners = {{{0, 0}, {0, kSize - 7}, {kSize - 7, 0}}};
    for (const auto& [r0, c0] : corners) {
        int mismatch = 0;
        for (int dr = 0; dr < 7; ++dr)
            for (int dc = 0; dc < 7; ++dc)
                if (m.get(r0 + dr, c0 + dc) != (fm.value[(r0 + dr) * kSize + c0 + dc] != 0)) ++mismatch;
        if (mismatch > 10)
            fail(errc::finder_not_found, "finder pattern at (" + std::to_string(r0) + "," +
                                             std::to_string(c0) + ") unrecognizable");
    }

    // format info: nearest valid word over both copies
    auto read_copy1 = [&m](int i) -> bool {
        if (i <= 5) return m.get(i, 8);
        if (i == 6) return m.get(7, 8);
        if (i == 7) return m.get(8, 8);
        if (i == 8) return m.get(8, 7);
        return m.get(8, 14 - i);
    };
    auto read_copy2 = [&m](int i) -> bool {
        if (i < 8) return m.get(8, kSize - 1 - i);
        return m.get(kSize - 15 + i, 8);
    };
    int best_dist = 16, best_ec = 0, best_mask = 0;
    for (int ec = 0; ec < 4; ++ec) {
        for (int mask = 0; mask < 8; ++mask) {
            const int want = format_bits(level_from_format_bits(ec), mask);
            int d1 = 0, d2 = 0;
            for (int i = 0; i < 15; ++i) {
                const bool w = ((want >> i) & 1) != 0;
                if (read_copy1(i) != w) ++d1;
                if (read_copy2(i) != w) ++d2;
            }
            const int d = std::min(d1, d2);
            if (d < best_dist) {
                best_dist = d;
                best_ec = ec;
                best_mask = mask;
            }
        }
    }
    if (best_dist > 3) fail(errc::format_unreadable, "no format word within distance 3");
    const EcLevel level = level_from_format_bits(best_ec);

    // unmask and collect codewords in placement order
    const auto order = data_module_order(fm);
    std::vector<std::uint8_t> codewords(kTotalCodewords, 0);
    for (std::size_t i = 0; i < order.size() && i / 8 < codewords.size(); ++i) {
        const auto [r, c] = order[i];
        const bool bit = m.get(r, c) != mask_bit(best_mask, r, c);
        if (bit) codewords[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    }

    const RsDecodeResult rs = rs_decode(codewords, ec_codewords(level));

    // byte-mode header
    if (rs.data.size() < 2 || (rs.data[0] >> 4) != 4)
        fail(errc::uncorrectable, "corrected stream is not byte mode");
    const int count = (rs.data[0] & 0x0f) << 4 | (rs.data[1] >> 4);
    if (count > qr_capacity_bytes(level))
        fail(errc::uncorrectable, "length field exceeds capacity");
    QrDecodeResult res;
    res.level = level;
    res.mask = best_mask;
    res.codewords_corrected = rs.errors_corrected;
    res.payload.reserve(count);
    for (int i = 0; i < count; ++i)
        res.payload.push_back(static_cast<std::uint8_t>((rs.data[1 + i] & 0x0f) << 4 | (rs.data[2 + i] >> 4)));

    const ModuleMatrix truth =
        reference ? *reference : qr_encode_with_mask(res.payload, level, best_mask);
    res.module_accuracy = module_match_fraction(m, truth);
    return res;
}

}  // namespace

std::vector<std::pair<int, int>> qr_data_module_positions() {
    auto order = data_module_order(function_map());
    order.resize(kTotalCodewords * 8);
    return order;
}

QrDecodeResult qr_decode(const ModuleMatrix& m) { return decode_impl(m, nullptr); }

QrDecodeResult qr_decode(const ModuleMatrix& m, const ModuleMatrix& reference) {
    return decode_impl(m, &reference);
}

}  // namespace magstego
