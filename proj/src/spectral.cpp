#include "curvegraph/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace curvegraph {

namespace {

// Rows packed 64 bits per word.
struct BoolMatrix {
    std::size_t dim = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows;

    std::uint64_t* row(std::size_t i) { return rows.data() + i * words; }
    const std::uint64_t* row(std::size_t i) const { return rows.data() + i * words; }

    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
};

BoolMatrix pattern_of(const TransitionMatrix& m) {
    BoolMatrix b;
    b.dim = m.dim;
    b.words = (m.dim + 63) / 64;
    b.rows.assign(b.dim * b.words, 0);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            if (m.at(i, j) != 0) b.row(i)[j >> 6] |= std::uint64_t(1) << (j & 63);
    return b;
}

BoolMatrix bool_multiply(const BoolMatrix& x, const BoolMatrix& y) {
    BoolMatrix out;
    out.dim = x.dim;
    out.words = x.words;
    out.rows.assign(out.dim * out.words, 0);
    for (std::size_t i = 0; i < x.dim; ++i) {
        std::uint64_t* dst = out.row(i);
        const std::uint64_t* src = x.row(i);
        for (std::size_t w = 0; w < x.words; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                const std::uint64_t* yk = y.row(k);
                for (std::size_t v = 0; v < x.words; ++v) dst[v] |= yk[v];
            }
        }
    }
    return out;
}

bool all_positive(const BoolMatrix& b) {
    if (b.dim == 0) return false;
    const std::size_t full = b.dim / 64;
    const std::size_t rest = b.dim & 63;
    const std::uint64_t tail = rest ? ((std::uint64_t(1) << rest) - 1) : 0;
    for (std::size_t i = 0; i < b.dim; ++i) {
        const std::uint64_t* r = b.row(i);
        for (std::size_t w = 0; w < full; ++w)
            if (r[w] != ~std::uint64_t(0)) return false;
        if (rest && (r[full] & tail) != tail) return false;
    }
    return true;
}

bool diagonal_positive(const BoolMatrix& b) {
    for (std::size_t i = 0; i < b.dim; ++i)
        if (b.get(i, i)) return true;
    return false;
}

template <typename Pred>
std::optional<int> exponent_search(const TransitionMatrix& m, int cap, Pred pred) {
    if (m.dim == 0) throw PreconditionError("empty matrix");
    if (cap < 1) throw PreconditionError("exponent cap must be >= 1");
    BoolMatrix base = pattern_of(m);
    BoolMatrix cur = base;
    for (int e = 1; e <= cap; ++e) {
        if (pred(cur)) return e;
        if (e == cap) break;
        BoolMatrix next = bool_multiply(cur, base);
        if (next.rows == cur.rows) break;  // pattern stabilized short of the target
        cur = std::move(next);
    }
    return std::nullopt;
}

} // namespace

int default_exponent_cap(std::size_t dim) {
    return static_cast<int>(4 * dim);
}

std::optional<int> primitivity_exponent(const TransitionMatrix& m, int cap) {
    return exponent_search(m, cap, all_positive);
}

std::optional<int> diagonal_positive_exponent(const TransitionMatrix& m, int cap) {
    return exponent_search(m, cap, diagonal_positive);
}

std::vector<std::vector<bool>> boolean_power_pattern(const TransitionMatrix& m, int e) {
    if (m.dim == 0) throw PreconditionError("empty matrix");
    if (e < 1) throw PreconditionError("exponent must be >= 1");
    BoolMatrix base = pattern_of(m);
    BoolMatrix cur = base;
    for (int k = 1; k < e; ++k) cur = bool_multiply(cur, base);
    std::vector<std::vector<bool>> out(m.dim, std::vector<bool>(m.dim, false));
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) out[i][j] = cur.get(i, j);
    return out;
}

SpectralResult dilatation(const TransitionMatrix& m, double tol, long long max_iters) {
    if (m.dim == 0) throw PreconditionError("empty matrix");
    if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
    if (max_iters < 1) throw PreconditionError("max_iters must be >= 1");

    const int cap = default_exponent_cap(m.dim);
    SpectralResult result;
    result.primitivity_exponent = primitivity_exponent(m, cap);
    result.diagonal_exponent = diagonal_positive_exponent(m, cap);
    if (!result.primitivity_exponent)
        throw SpectralError("matrix is not primitive: no entrywise-positive power up to exponent " +
                            std::to_string(cap));

    // Rescale by 2^-scale_bits so every entry is below 1.  Entries are first
    // shifted down to at most 500 bits so the double conversion cannot
    // overflow; the discarded low bits are 2^-450 relative noise.
    std::size_t max_bits = 1;
    for (const BigInt& e : m.data)
        if (e != 0) max_bits = std::max(max_bits, static_cast<std::size_t>(boost::multiprecision::msb(e)) + 1);
    const long long scale_bits = static_cast<long long>(max_bits);
    const long long pre_shift = scale_bits > 500 ? scale_bits - 500 : 0;
    std::vector<double> a(m.dim * m.dim, 0.0);
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        if (m.data[i] == 0) continue;
        double d = static_cast<double>(pre_shift ? BigInt(m.data[i] >> pre_shift) : m.data[i]);
        a[i] = std::ldexp(d, static_cast<int>(pre_shift - scale_bits));
    }

    std::vector<double> x(m.dim, 1.0), y(m.dim, 0.0);
    double lambda = 0.0, residual = 0.0;
    for (long long it = 1; it <= max_iters; ++it) {
        for (std::size_t i = 0; i < m.dim; ++i) {
            double acc = 0.0;
            const double* row = a.data() + i * m.dim;
            for (std::size_t j = 0; j < m.dim; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        lambda = 0.0;
        for (double v : y) lambda = std::max(lambda, v);
        if (lambda <= 0.0)
            throw SpectralError("power iteration collapsed to the zero vector");
        residual = 0.0;
        for (std::size_t i = 0; i < m.dim; ++i)
            residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
        for (std::size_t i = 0; i < m.dim; ++i) x[i] = y[i] / lambda;
        if (residual < tol) {
            result.dilatation = std::ldexp(lambda, static_cast<int>(scale_bits));
            result.residual = residual;
            result.iterations = it;
            return result;
        }
    }
    std::ostringstream msg;
    msg << "power iteration did not reach tolerance " << tol << " within " << max_iters
        << " iterations; last residual " << residual;
    throw SpectralError(msg.str());
}

} // namespace curvegraph
