#pragma once

#include <vector>

#include "rlrs/rational.hpp"

namespace rlrs {

using IntVec = std::vector<Integer>;
// Row-major list of rows.
using IntMatrix = std::vector<IntVec>;

// Row Hermite normal form of the lattice spanned by the rows: pivots strictly increasing,
// positive, entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hnf_rows(IntMatrix rows, size_t cols);

struct SmithForm {
    std::vector<Integer> diagonal;  // nonzero invariant factors d_1 | d_2 | ...
    IntMatrix U;                    // rows x rows, unimodular
    IntMatrix V;                    // cols x cols, unimodular; U * A * V = diag
};

SmithForm smith(const IntMatrix& a, size_t cols);

// Basis (as rows) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, size_t b_cols);

}  // namespace rlrs
