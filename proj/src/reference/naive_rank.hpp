#pragma once

#include "fatpoints/matrix.hpp"

namespace fatpoints::reference {

// Plain serial textbook Gaussian elimination over the rationals. This is the
// independent oracle the main kernels are tested against and the baseline of
// the rank benchmark. It deliberately shares no code with src/elimination.cpp.
std::size_t naive_rank(const RatMatrix& m);

}  // namespace fatpoints::reference
