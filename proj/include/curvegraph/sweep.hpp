#pragma once

#include <string>
#include <vector>

#include "curvegraph/bounds.hpp"
#include "curvegraph/rational.hpp"

namespace curvegraph {

struct SweepRow {
    long long parameter = 0;
    Rational lower_bound;
    Rational upper_bound;
    long long j = 0;
    double dilatation = 0.0;
    // parameter * bound, converted from the exact product; never rounded
    // independently of the rational columns.
    double normalized_upper = 0.0;
    double normalized_lower = 0.0;
};

struct SweepOptions {
    double tol = 1e-12;
    long long max_iters = 1000000;
    // Parameters above 200 keep matrix entries desk-scale; exceeding the cap
    // is an explicit opt-in.
    bool force = false;
    // 0 picks hardware concurrency.
    unsigned threads = 0;
};

// One row per parameter in [from, to]; from > to yields no rows.  Rows are
// computed concurrently and assembled in parameter order, so output is
// deterministic.  Only torelli and purebraid have generated families.
std::vector<SweepRow> run_sweep(GroupKind family, int from, int to,
                                const SweepOptions& opts = {});

// Comma separated, LF endings, header row, floats at 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

} // namespace curvegraph
