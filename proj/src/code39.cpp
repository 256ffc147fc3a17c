#include "magstego/code39.hpp"

#include <cctype>
#include <sstream>

#include "magstego/errors.hpp"

namespace magstego {

const std::vector<Code39Entry>& code39_table() {
    static const std::vector<Code39Entry> table = {
        {'0', "NNNWWNWNN"}, {'1', "WNNWNNNNW"}, {'2', "NNWWNNNNW"}, {'3', "WNWWNNNNN"},
        {'4', "NNNWWNNNW"}, {'5', "WNNWWNNNN"}, {'6', "NNWWWNNNN"}, {'7', "NNNWNNWNW"},
        {'8', "WNNWNNWNN"}, {'9', "NNWWNNWNN"}, {'A', "WNNNNWNNW"}, {'B', "NNWNNWNNW"},
        {'C', "WNWNNWNNN"}, {'D', "NNNNWWNNW"}, {'E', "WNNNWWNNN"}, {'F', "NNWNWWNNN"},
        {'G', "NNNNNWWNW"}, {'H', "WNNNNWWNN"}, {'I', "NNWNNWWNN"}, {'J', "NNNNWWWNN"},
        {'K', "WNNNNNNWW"}, {'L', "NNWNNNNWW"}, {'M', "WNWNNNNWN"}, {'N', "NNNNWNNWW"},
        {'O', "WNNNWNNWN"}, {'P', "NNWNWNNWN"}, {'Q', "NNNNNNWWW"}, {'R', "WNNNNNWWN"},
        {'S', "NNWNNNWWN"}, {'T', "NNNNWNWWN"}, {'U', "WWNNNNNNW"}, {'V', "NWWNNNNNW"},
        {'W', "WWWNNNNNN"}, {'X', "NWNNWNNNW"}, {'Y', "WWNNWNNNN"}, {'Z', "NWWNWNNNN"},
        {'-', "NWNNNNWNW"}, {'.', "WWNNNNWNN"}, {' ', "NWWNNNWNN"}, {'$', "NWNWNWNNN"},
        {'/', "NWNWNNNWN"}, {'+', "NWNNNWNWN"}, {'%', "NNNWNWNWN"}, {'*', "NWNNWNWNN"},
    };
    return table;
}

namespace {

const char* widths_for(char c) {
    for (const auto& e : code39_table())
        if (e.ch == c) return e.widths;
    return nullptr;
}

void append_block(ElementSequence& seq, const char* widths) {
    for (int i = 0; i < 9; ++i) {
        Element el;
        el.role = (i % 2 == 0) ? ElementRole::bar : ElementRole::space;
        el.width = (widths[i] == 'W') ? WidthClass::wide : WidthClass::narrow;
        el.magnetic = (el.role == ElementRole::bar);
        seq.elements.push_back(el);
    }
}

void append_gap(ElementSequence& seq) {
    seq.elements.push_back({ElementRole::space, WidthClass::narrow, false});
}

}  // namespace

ElementSequence code39_encode(std::string_view text) {
    for (char c : text) {
        if (c == kCode39Delimiter || widths_for(c) == nullptr)
            fail(errc::unsupported_character,
                 std::string("no symbology entry for '") + c + "'");
    }
    ElementSequence seq;
    append_block(seq, widths_for(kCode39Delimiter));
    for (char c : text) {
        append_gap(seq);
        append_block(seq, widths_for(c));
    }
    append_gap(seq);
    append_block(seq, widths_for(kCode39Delimiter));
    return seq;
}

std::string code39_decode(const ElementSequence& seq) {
    const auto& els = seq.elements;
    // blocks of 9 separated by single gap elements: 10k + 9 total
    if (els.size() < 19 || els.size() % 10 != 9)
        fail(errc::malformed_sequence, "element count does not form 9-element blocks");
    const std::size_t n_blocks = (els.size() + 1) / 10;

    std::string decoded;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        const std::size_t base = b * 10;
        if (b > 0) {
            const Element& gap = els[base - 1];
            if (gap.role != ElementRole::space)
                fail(errc::malformed_sequence, "inter-character gap is not a space");
        }
        char widths[10] = {};
        int wide = 0;
        for (int i = 0; i < 9; ++i) {
            const Element& el = els[base + i];
            const ElementRole expected = (i % 2 == 0) ? ElementRole::bar : ElementRole::space;
            if (el.role != expected)
                fail(errc::malformed_sequence, "bars and spaces do not alternate");
            widths[i] = (el.width == WidthClass::wide) ? 'W' : 'N';
            if (el.width == WidthClass::wide) ++wide;
        }
        if (wide != 3) fail(errc::malformed_sequence, "block wide-element count is not 3");

        char ch = 0;
        for (const auto& e : code39_table()) {
            if (std::string_view(e.widths) == std::string_view(widths, 9)) {
                ch = e.ch;
                break;
            }
        }
        if (ch == 0) fail(errc::unknown_block, "no symbology entry matches block");
        decoded.push_back(ch);
    }

    if (decoded.front() != kCode39Delimiter || decoded.back() != kCode39Delimiter)
        fail(errc::malformed_sequence, "missing start/stop delimiter");
    const std::string payload = decoded.substr(1, decoded.size() - 2);
    if (payload.find(kCode39Delimiter) != std::string::npos)
        fail(errc::malformed_sequence, "interior delimiter character");
    return payload;
}

std::string to_token_string(const ElementSequence& seq) {
    std::ostringstream out;
    bool first = true;
    for (const Element& el : seq.elements) {
        if (!first) out << ' ';
        first = false;
        char role = (el.role == ElementRole::bar) ? 'B' : 'S';
        if (el.role == ElementRole::bar && !el.magnetic) role = 'b';
        if (el.role == ElementRole::space && el.magnetic) role = 's';
        out << role << (el.width == WidthClass::wide ? '2' : '1');
    }
    return out.str();
}

ElementSequence element_sequence_from_tokens(std::string_view tokens) {
    ElementSequence seq;
    std::istringstream in{std::string(tokens)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() != 2) fail(errc::malformed_sequence, "bad token '" + tok + "'");
        Element el;
        switch (tok[0]) {
            case 'B': el.role = ElementRole::bar; el.magnetic = true; break;
            case 'b': el.role = ElementRole::bar; el.magnetic = false; break;
            case 'S': el.role = ElementRole::space; el.magnetic = false; break;
            case 's': el.role = ElementRole::space; el.magnetic = true; break;
            default: fail(errc::malformed_sequence, "bad token '" + tok + "'");
        }
        if (tok[1] == '1') el.width = WidthClass::narrow;
        else if (tok[1] == '2') el.width = WidthClass::wide;
        else fail(errc::malformed_sequence, "bad token '" + tok + "'");
        seq.elements.push_back(el);
    }
    return seq;
}

}  // namespace magstego
