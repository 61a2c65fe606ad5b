#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curvegraph/configuration.hpp"

namespace curvegraph {

using BigInt = boost::multiprecision::cpp_int;

// Coordinates of a curve against every configuration curve and witness,
// stored in configuration order: curves first, then witnesses.  Entries are
// exact for Penner words and overestimates otherwise, so a zero is always a
// certified disjointness.
struct IntersectionVector {
    std::vector<std::string> names;
    std::vector<BigInt> values;

    std::size_t size() const { return values.size(); }
    const BigInt& value_of(std::string_view name) const;
};

IntersectionVector vector_of_curve(const MulticurveConfiguration& config, std::string_view name);
IntersectionVector zero_vector(const MulticurveConfiguration& config);

// out[e] = v[e] + i(curve, e) * v[curve] for e != curve; out[curve] = v[curve].
IntersectionVector apply_twist(const IntersectionVector& v, const MulticurveConfiguration& config,
                               std::string_view curve);

// Rightmost letter first.
IntersectionVector apply_word(const IntersectionVector& v, const MulticurveConfiguration& config,
                              const TwistWord& word);

// Names with strictly positive entry, in stored coordinate order.
std::vector<std::string> support(const IntersectionVector& v);

// Word action restricted to configuration coordinates.  Row updates keep the
// assembly at O(letters * degree * dim) instead of a dense product.
struct TransitionMatrix {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<BigInt> data;

    BigInt& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    static TransitionMatrix identity(std::vector<std::string> names);

    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.dim == b.dim && a.data == b.data;
    }
};

// Identity plus the column-c update: entry (e, c) is i(c, e).
TransitionMatrix twist_matrix(const MulticurveConfiguration& config, std::string_view curve);

TransitionMatrix word_matrix(const MulticurveConfiguration& config, const TwistWord& word);

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);

// Applies the matrix to the curve block of v; witnesses are not part of the
// matrix and keep their values only under apply_word.
std::vector<BigInt> apply_matrix(const TransitionMatrix& m, const std::vector<BigInt>& v);

// Support evolution over the Boolean semiring: element k of the result is the
// support after k word applications, so the list has iterations + 1 entries.
// Agrees with support(apply_word^k) because twist updates never cancel.
std::vector<std::vector<std::string>> boolean_propagate(
    const std::vector<std::string>& seed_support, const MulticurveConfiguration& config,
    const TwistWord& word, int iterations);

} // namespace curvegraph
