#pragma once

#include <stdexcept>
#include <string>

namespace magstego {

// Error codes shared across the library. The CLI maps categories to exit
// codes: usage/config -> 2, data/decode -> 3, numeric -> 4.
enum class errc {
    // codec
    unsupported_character,
    malformed_sequence,
    unknown_block,
    capacity_exceeded,
    uncorrectable,
    finder_not_found,
    format_unreadable,
    // layout
    hidden_not_subset,
    // magnetics
    point_inside_source,
    singular_system,
    // odmr
    grid_too_narrow,
    no_dip,
    edge_dip,
    division_domain,
    // imaging
    grid_mismatch,
    constant_image,
    alignment_failed,
    ambiguous_threshold,
    // plumbing
    io_error,
    bad_config,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::unsupported_character: return "UnsupportedCharacter";
        case errc::malformed_sequence: return "MalformedSequence";
        case errc::unknown_block: return "UnknownBlock";
        case errc::capacity_exceeded: return "CapacityExceeded";
        case errc::uncorrectable: return "Uncorrectable";
        case errc::finder_not_found: return "FinderNotFound";
        case errc::format_unreadable: return "FormatUnreadable";
        case errc::hidden_not_subset: return "HiddenNotSubset";
        case errc::point_inside_source: return "PointInsideSource";
        case errc::singular_system: return "SingularSystem";
        case errc::grid_too_narrow: return "GridTooNarrow";
        case errc::no_dip: return "NoDip";
        case errc::edge_dip: return "EdgeDip";
        case errc::division_domain: return "DivisionDomain";
        case errc::grid_mismatch: return "GridMismatch";
        case errc::constant_image: return "ConstantImage";
        case errc::alignment_failed: return "AlignmentFailed";
        case errc::ambiguous_threshold: return "AmbiguousThreshold";
        case errc::io_error: return "IoError";
        case errc::bad_config: return "BadConfig";
    }
    return "Error";
}

}  // namespace magstego
