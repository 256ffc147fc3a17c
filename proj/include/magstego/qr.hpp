#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace magstego {

enum class EcLevel { L, M, Q, H };

const char* ec_level_name(EcLevel e);
EcLevel ec_level_from_name(std::string_view name);

// Version-2 QR matrix, 25x25 modules, true = dark = magnetic.
class ModuleMatrix {
public:
    static constexpr int kSize = 25;

    bool get(int row, int col) const { return bits_[row * kSize + col] != 0; }
    void set(int row, int col, bool v) { bits_[row * kSize + col] = v ? 1 : 0; }
    int popcount() const;

    bool operator==(const ModuleMatrix&) const = default;

private:
    std::vector<std::uint8_t> bits_ = std::vector<std::uint8_t>(kSize * kSize, 0);
};

// Plain-text grid form: one row per line, '#' = magnetic, '.' = not.
std::string to_grid(const ModuleMatrix& m);
ModuleMatrix module_matrix_from_grid(std::string_view text);

int qr_capacity_bytes(EcLevel level);
int qr_ec_codewords(EcLevel level);

ModuleMatrix qr_encode(const std::vector<std::uint8_t>& payload, EcLevel level);
ModuleMatrix qr_encode(std::string_view payload, EcLevel level);
// Fixed mask variant (mask in [0,7]); used to rebuild a reference matrix.
ModuleMatrix qr_encode_with_mask(const std::vector<std::uint8_t>& payload, EcLevel level, int mask);

struct QrDecodeResult {
    std::vector<std::uint8_t> payload;
    EcLevel level = EcLevel::L;
    int mask = 0;
    int codewords_corrected = 0;
    // fraction of the 625 modules matching the re-encoded ground truth
    double module_accuracy = 0.0;
};

std::string payload_text(const QrDecodeResult& r);

// Throws FinderNotFound / FormatUnreadable / Uncorrectable. When a reference
// matrix is supplied the accuracy is computed against it instead of the
// re-encoded result.
QrDecodeResult qr_decode(const ModuleMatrix& m);
QrDecodeResult qr_decode(const ModuleMatrix& m, const ModuleMatrix& reference);

double module_match_fraction(const ModuleMatrix& a, const ModuleMatrix& b);

// Zigzag placement order of the 352 codeword modules (8 per codeword,
// version-2 remainder bits excluded).
std::vector<std::pair<int, int>> qr_data_module_positions();

}  // namespace magstego
