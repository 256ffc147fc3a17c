#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace magstego {

enum class ElementRole { bar, space };
enum class WidthClass { narrow, wide };

struct Element {
    ElementRole role = ElementRole::bar;
    WidthClass width = WidthClass::narrow;
    bool magnetic = false;

    bool operator==(const Element&) const = default;
};

// Code 39 element run: per character 9 elements (5 bars, 4 spaces,
// exactly 3 wide), characters separated by a narrow space, the whole
// message wrapped in '*' delimiter blocks.
struct ElementSequence {
    std::vector<Element> elements;

    bool operator==(const ElementSequence&) const = default;
};

inline constexpr char kCode39Delimiter = '*';

struct Code39Entry {
    char ch;
    const char* widths;  // 9 chars of 'N'/'W', elements alternate bar/space starting with a bar
};

// Full standard symbology (0-9, A-Z, -, ., space, $, /, +, %, *).
const std::vector<Code39Entry>& code39_table();

// Bars carry magnetic=true, spaces magnetic=false: the magnetic image is
// the barcode while the optical footprint stays payload independent.
ElementSequence code39_encode(std::string_view text);

std::string code39_decode(const ElementSequence& seq);

// One-line token form, e.g. "B1 S2 B1 ..." (1 = narrow, 2 = wide units).
// Lowercase marks a non-magnetic bar, which never occurs in encoder output.
std::string to_token_string(const ElementSequence& seq);
ElementSequence element_sequence_from_tokens(std::string_view tokens);

}  // namespace magstego
