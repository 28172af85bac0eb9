#pragma once
#include <string>
#include <vector>

namespace greyrank {

// One fallback, rescale, or tie event that fired while running the
// pipeline. `code` is a stable machine-readable tag.
struct TraceEvent
{
    std::string code;
    std::string message;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

} // namespace greyrank
