#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hk {

/* One command against one input document.  The shared library entry points
 * and the command line tool are both thin shells over this call. */
struct SessionOptions {
    uint64_t seed = 0;
    int cap = 16;                 // resolution length bound for resolve/coresolve
    int trials = 0;               // oracle trial count; 0 keeps each oracle's default
    uint32_t field_override = 0;  // nonzero replaces the document's prime
    bool pretty = false;
    bool timing = false;          // timing is opt-in so identical runs stay byte-identical
};

/* args holds the command tokens, e.g. {"check", "tilting", "DA", "2"}.
 * Returns the report as a JSON string.  Malformed documents, unknown names,
 * and unmet mathematical preconditions raise hk::error with the matching
 * code; anything else that escapes is an internal bug. */
std::string run_command(const std::string& input_json, const std::vector<std::string>& args,
                        const SessionOptions& opt);

}  // namespace hk
