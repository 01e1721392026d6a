#include "gammalab/common.hpp"

namespace gammalab {

std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        out.push_back(lowest_bit(m));
        m &= m - 1;
    }
    return out;
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::parse: return "parse";
        case ErrorKind::too_large: return "too_large";
        case ErrorKind::not_equidimensional: return "not_equidimensional";
        case ErrorKind::verification_failed: return "verification_failed";
        case ErrorKind::undecided: return "undecided";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::invariant_violation: return "invariant_violation";
    }
    return "unknown";
}

}  // namespace gammalab
