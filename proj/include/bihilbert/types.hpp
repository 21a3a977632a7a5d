#ifndef BIHILBERT_TYPES_HPP
#define BIHILBERT_TYPES_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bihilbert {

// Index convention used everywhere: first index i = row, second index j =
// column, both 0-based.  All file formats use (row, col) order.
struct BiDegree {
    int i = 0;
    int j = 0;

    friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

// Componentwise partial order: (i1,j1) >= (i2,j2) iff i1>=i2 and j1>=j2.
inline bool dominates(const BiDegree& lhs, const BiDegree& rhs) {
    return lhs.i >= rhs.i && lhs.j >= rhs.j;
}

// A grid cell (row, col).
using Cell = std::pair<int, int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StabilizationMissing : Error {
    using Error::Error;
};
struct StabilizationFailure : Error {
    using Error::Error;
};
struct AccumulationNegative : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct EmptyScheme : Error {
    using Error::Error;
};
struct ParamMismatch : Error {
    using Error::Error;
};
struct PointNotInConfig : Error {
    using Error::Error;
};
struct ConditionsNotMet : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct HypothesesNotMet : Error {
    using Error::Error;
};
struct BadSkipList : Error {
    using Error::Error;
};
struct InternalInconsistency : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

inline std::string cell_str(const Cell& c) {
    return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

}  // namespace bihilbert

#endif
