#pragma once

#include <stdexcept>
#include <string>

namespace skmaass {

/// Required configuration input (Hecke eigenvalue, base coefficient) is missing.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A table lacks entries that a check needs; distinct from a failed check.
struct incomplete_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A serialized table or literal does not conform to the expected format.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace skmaass
