#pragma once

#include <stdexcept>
#include <string>

namespace hk {

enum class errc {
    invalid_argument = 1,  // malformed call parameters
    parse = 2,             // input document cannot be read
    reference = 3,         // unknown module / command name
    domain = 4,            // mathematical precondition not met
    internal = 5,          // invariant broken inside the engine
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
    if (!ok) fail(c, what);
}

/* Engine-side consistency checks; a failure here is always a bug, never bad input. */
inline void check_internal(bool ok, const std::string& what) {
    if (!ok) fail(errc::internal, "internal invariant violated: " + what);
}

}  // namespace hk
