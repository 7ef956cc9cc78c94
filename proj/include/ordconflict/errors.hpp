#pragma once

#include <stdexcept>
#include <string>

namespace ordconflict {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex/edge lists, out-of-range coordinates, bad matrices.
struct ValidationError : Error {
    using Error::Error;
};

/// A query that has no value, e.g. alpha/omega of the conflict graph of an
/// edgeless ordered graph.
struct UndefinedError : Error {
    using Error::Error;
};

/// An exact solver ran out of its node or time budget. Carries the best
/// bounds established before the abort.
struct BudgetExceeded : Error {
    BudgetExceeded(long long lo, long long hi)
        : Error("budget exceeded: value in [" + std::to_string(lo) + "," + std::to_string(hi) + "]"),
          lower(lo),
          upper(hi) {}
    long long lower;
    long long upper;
};

}  // namespace ordconflict
