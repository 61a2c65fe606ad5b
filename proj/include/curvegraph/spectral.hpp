#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvegraph/twist.hpp"

namespace curvegraph {

struct SpectralResult {
    double dilatation = 0.0;
    // Sup-norm residual of the final iterate, measured on the matrix rescaled
    // by a power of two so its largest entry sits near 1.  The rescaling is
    // exact, so the eigenvalue is unaffected; without it the residual of a
    // huge-entry matrix could never reach a fixed tolerance in doubles.
    double residual = 0.0;
    long long iterations = 0;
    std::optional<int> primitivity_exponent;
    std::optional<int> diagonal_exponent;
};

// Exponent searches run over the Boolean semiring; default cap 4 * dim.
int default_exponent_cap(std::size_t dim);

// Least e <= cap with m^e entrywise positive, if any.
std::optional<int> primitivity_exponent(const TransitionMatrix& m, int cap);

// Least e <= cap such that m^e has some positive diagonal entry, if any.
std::optional<int> diagonal_positive_exponent(const TransitionMatrix& m, int cap);

// Zero pattern of m^e in the Boolean semiring; pattern[i][j] set iff nonzero.
std::vector<std::vector<bool>> boolean_power_pattern(const TransitionMatrix& m, int e);

// Power iteration from the all-ones vector with sup-norm renormalization.
// Requires a primitive matrix (checked up to the default cap); throws
// SpectralError on a non-primitive input or when max_iters passes without the
// residual reaching tol.
SpectralResult dilatation(const TransitionMatrix& m, double tol = 1e-12,
                          long long max_iters = 1000000);

} // namespace curvegraph
