#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "magstego/errors.hpp"
#include "magstego/qr.hpp"
#include "magstego/rng.hpp"

using namespace magstego;

namespace {

std::vector<std::uint8_t> random_payload(Rng& rng, int max_len) {
    const int n = 1 + static_cast<int>(rng.next_u64() % max_len);
    std::vector<std::uint8_t> p(n);
    for (auto& b : p) b = static_cast<std::uint8_t>(rng.next_u64());
    return p;
}

ModuleMatrix flip_modules(const ModuleMatrix& m, const std::set<int>& cells) {
    ModuleMatrix out = m;
    for (int cell : cells) {
        const int r = cell / 25, c = cell % 25;
        out.set(r, c, !out.get(r, c));
    }
    return out;
}

}  // namespace

TEST_CASE("paper payloads roundtrip at level L") {
    for (const std::string url : {"http://www.korea.ac.kr", "http://www.qdl.korea.ac.kr"}) {
        const ModuleMatrix m = qr_encode(url, EcLevel::L);
        const QrDecodeResult res = qr_decode(m);
        CHECK(payload_text(res) == url);
        CHECK(res.level == EcLevel::L);
        CHECK(res.codewords_corrected == 0);
        CHECK(res.module_accuracy == 1.0);
    }
}

TEST_CASE("matrix structure") {
    const ModuleMatrix m = qr_encode("http://www.korea.ac.kr", EcLevel::L);
    // finder cores
    for (auto [r0, c0] : {std::pair{0, 0}, std::pair{0, 18}, std::pair{18, 0}}) {
        CHECK(m.get(r0, c0));
        CHECK(m.get(r0 + 3, c0 + 3));
        CHECK_FALSE(m.get(r0 + 1, c0 + 1));
    }
    // alignment pattern center and ring
    CHECK(m.get(18, 18));
    CHECK_FALSE(m.get(17, 18));
    CHECK(m.get(16, 16));
    // dark module
    CHECK(m.get(17, 8));
}

TEST_CASE("capacity limits per level") {
    CHECK(qr_capacity_bytes(EcLevel::L) == 32);
    CHECK(qr_capacity_bytes(EcLevel::M) == 26);
    CHECK(qr_capacity_bytes(EcLevel::Q) == 20);
    CHECK(qr_capacity_bytes(EcLevel::H) == 14);
    const std::vector<std::uint8_t> big(40, 'x');
    CHECK_THROWS_AS(qr_encode(big, EcLevel::L), Error);
    try {
        qr_encode(big, EcLevel::L);
    } catch (const Error& e) {
        CHECK(e.code() == errc::capacity_exceeded);
    }
    CHECK_NOTHROW(qr_encode(std::vector<std::uint8_t>(32, 'x'), EcLevel::L));
}

TEST_CASE("seeded roundtrips across all levels") {
    Rng rng(0x9a11ce);
    for (int trial = 0; trial < 60; ++trial) {
        for (EcLevel level : {EcLevel::L, EcLevel::M, EcLevel::Q, EcLevel::H}) {
            const auto payload = random_payload(rng, qr_capacity_bytes(level));
            const ModuleMatrix m = qr_encode(payload, level);
            const QrDecodeResult res = qr_decode(m);
            CHECK(res.payload == payload);
            CHECK(res.level == level);
        }
    }
}

TEST_CASE("grid serialization roundtrip") {
    const ModuleMatrix m = qr_encode("http://www.qdl.korea.ac.kr", EcLevel::Q);
    const std::string text = to_grid(m);
    CHECK(module_matrix_from_grid(text) == m);
    CHECK_THROWS_AS(module_matrix_from_grid("#.#\n"), Error);
}

TEST_CASE("flips clustered in few codewords are corrected") {
    // level L corrects 5 of the 44 codewords; 5% of the modules flipped
    // inside 4 codewords' cells stays within that budget
    const std::string url = "http://www.korea.ac.kr";
    const ModuleMatrix m = qr_encode(url, EcLevel::L);
    Rng rng(0xf11b);
    int recovered = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        // pick 31 data-area cells (5% of 625) restricted to 4 byte groups
        std::set<int> cells;
        std::set<int> groups;
        while (groups.size() < 4) groups.insert(static_cast<int>(rng.next_u64() % 44));
        // collect the matrix cells of those codewords by re-walking placement:
        // simplest faithful proxy: flip whole 8-module byte slots via decode's
        // own accuracy bookkeeping is unavailable here, so flip cells by index
        // order within the data region of a fresh encode.
        ModuleMatrix noisy = m;
        int data_index = 0;
        for (int r = 0; r < 25 && cells.size() < 31; ++r) {
            for (int c = 0; c < 25 && cells.size() < 31; ++c) {
                // function-pattern area stays untouched; approximate the data
                // region as everything outside rows/cols 0-8 and 17-24 bands
                const bool in_finder_band =
                    (r <= 8 && c <= 8) || (r <= 8 && c >= 17) || (r >= 17 && c <= 8);
                if (in_finder_band || r == 6 || c == 6) continue;
                if (groups.count(data_index / 8) != 0) cells.insert(r * 25 + c);
                ++data_index;
            }
        }
        noisy = flip_modules(m, cells);
        try {
            const QrDecodeResult res = qr_decode(noisy);
            if (payload_text(res) == url) ++recovered;
        } catch (const Error&) {
        }
    }
    CHECK(recovered == trials);
}

TEST_CASE("uniform 20 percent flips are uncorrectable in the majority") {
    const std::string url = "http://www.korea.ac.kr";
    const ModuleMatrix m = qr_encode(url, EcLevel::L);
    Rng rng(0xf20b);
    int failed = 0;
    const int trials = 40;
    for (int t = 0; t < trials; ++t) {
        std::set<int> cells;
        while (cells.size() < 125) cells.insert(static_cast<int>(rng.next_u64() % 625));
        const ModuleMatrix noisy = flip_modules(m, cells);
        try {
            const QrDecodeResult res = qr_decode(noisy);
            if (payload_text(res) != url) ++failed;
        } catch (const Error&) {
            ++failed;
        }
    }
    CHECK(failed > trials / 2);
}

TEST_CASE("reference accuracy reporting") {
    const ModuleMatrix m = qr_encode("http://www.korea.ac.kr", EcLevel::L);
    std::set<int> cells;
    Rng rng(0xacc);
    while (cells.size() < 6) {
        const int cell = static_cast<int>(rng.next_u64() % 625);
        const int r = cell / 25, c = cell % 25;
        const bool in_finder_band = (r <= 8 && c <= 8) || (r <= 8 && c >= 17) || (r >= 17 && c <= 8);
        if (!in_finder_band) cells.insert(cell);
    }
    const ModuleMatrix noisy = flip_modules(m, cells);
    const QrDecodeResult res = qr_decode(noisy, m);
    CHECK(res.module_accuracy == doctest::Approx((625.0 - 6.0) / 625.0));
}

TEST_CASE("garbage matrices raise typed errors") {
    ModuleMatrix blank;
    CHECK_THROWS_AS(qr_decode(blank), Error);
    try {
        qr_decode(blank);
    } catch (const Error& e) {
        CHECK(e.code() == errc::finder_not_found);
    }

    // intact finders but scrambled format strip
    ModuleMatrix m = qr_encode("FORMAT", EcLevel::M);
    for (int i = 0; i < 9; ++i) {
        if (i == 6) continue;
        m.set(8, i, !m.get(8, i));
        m.set(i, 8, !m.get(i, 8));
        m.set(8, 24 - i, !m.get(8, 24 - i));
    }
    CHECK_THROWS_AS(qr_decode(m), Error);
}
