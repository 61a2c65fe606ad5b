#include "curvegraph/twist.hpp"

#include <algorithm>

namespace curvegraph {

namespace {

std::vector<std::string> coordinate_names(const MulticurveConfiguration& config) {
    std::vector<std::string> names;
    names.reserve(config.curves.size() + config.witnesses.size());
    for (const Curve& c : config.curves) names.push_back(c.name);
    for (const Witness& w : config.witnesses) names.push_back(w.name);
    return names;
}

std::size_t curve_index_or_throw(const MulticurveConfiguration& config, std::string_view name) {
    if (auto idx = config.curve_index(name)) return *idx;
    throw StructuralError(std::string(name) + " is not a configuration curve");
}

std::vector<std::size_t> resolve_letters(const MulticurveConfiguration& config,
                                         const TwistWord& word) {
    std::vector<std::size_t> idx;
    idx.reserve(word.letters.size());
    for (const std::string& letter : word.letters)
        idx.push_back(curve_index_or_throw(config, letter));
    return idx;
}

// One twist applied in place; amount is read once, so updating other
// coordinates while iterating is safe.
void twist_in_place(std::vector<BigInt>& values, const MulticurveConfiguration& config,
                    std::size_t c) {
    const BigInt& amount = values[c];
    if (amount == 0) return;
    const std::size_t n = config.curves.size();
    for (std::size_t e = 0; e < n; ++e) {
        long long i = config.intersections[c][e];
        if (i > 0 && e != c) values[e] += i * amount;
    }
    for (std::size_t w = 0; w < config.witnesses.size(); ++w) {
        long long i = config.witnesses[w].row[c];
        if (i > 0) values[n + w] += i * amount;
    }
}

} // namespace

const BigInt& IntersectionVector::value_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return values[i];
    throw StructuralError(std::string(name) + " is not a coordinate of this vector");
}

IntersectionVector zero_vector(const MulticurveConfiguration& config) {
    config.check_structure();
    IntersectionVector v;
    v.names = coordinate_names(config);
    v.values.assign(v.names.size(), BigInt(0));
    return v;
}

IntersectionVector vector_of_curve(const MulticurveConfiguration& config, std::string_view name) {
    IntersectionVector v = zero_vector(config);
    std::size_t c = curve_index_or_throw(config, name);
    const std::size_t n = config.curves.size();
    for (std::size_t e = 0; e < n; ++e) v.values[e] = config.intersections[e][c];
    for (std::size_t w = 0; w < config.witnesses.size(); ++w)
        v.values[n + w] = config.witnesses[w].row[c];
    return v;
}

IntersectionVector apply_twist(const IntersectionVector& v, const MulticurveConfiguration& config,
                               std::string_view curve) {
    config.check_structure();
    std::size_t c = curve_index_or_throw(config, curve);
    if (v.values.size() != config.curves.size() + config.witnesses.size())
        throw StructuralError("vector has " + std::to_string(v.values.size()) +
                              " coordinates, configuration expects " +
                              std::to_string(config.curves.size() + config.witnesses.size()));
    IntersectionVector out = v;
    twist_in_place(out.values, config, c);
    return out;
}

IntersectionVector apply_word(const IntersectionVector& v, const MulticurveConfiguration& config,
                              const TwistWord& word) {
    config.check_structure();
    std::vector<std::size_t> letters = resolve_letters(config, word);
    if (v.values.size() != config.curves.size() + config.witnesses.size())
        throw StructuralError("vector has " + std::to_string(v.values.size()) +
                              " coordinates, configuration expects " +
                              std::to_string(config.curves.size() + config.witnesses.size()));
    IntersectionVector out = v;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        twist_in_place(out.values, config, *it);
    return out;
}

std::vector<std::string> support(const IntersectionVector& v) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.values.size(); ++i)
        if (v.values[i] > 0) out.push_back(v.names[i]);
    return out;
}

TransitionMatrix TransitionMatrix::identity(std::vector<std::string> names) {
    TransitionMatrix m;
    m.dim = names.size();
    m.names = std::move(names);
    m.data.assign(m.dim * m.dim, BigInt(0));
    for (std::size_t i = 0; i < m.dim; ++i) m.at(i, i) = 1;
    return m;
}

TransitionMatrix twist_matrix(const MulticurveConfiguration& config, std::string_view curve) {
    config.check_structure();
    std::size_t c = curve_index_or_throw(config, curve);
    std::vector<std::string> names;
    for (const Curve& cu : config.curves) names.push_back(cu.name);
    TransitionMatrix m = TransitionMatrix::identity(std::move(names));
    for (std::size_t e = 0; e < m.dim; ++e)
        if (e != c) m.at(e, c) = config.intersections[c][e];
    return m;
}

TransitionMatrix word_matrix(const MulticurveConfiguration& config, const TwistWord& word) {
    config.check_structure();
    std::vector<std::size_t> letters = resolve_letters(config, word);
    std::vector<std::string> names;
    for (const Curve& cu : config.curves) names.push_back(cu.name);
    TransitionMatrix m = TransitionMatrix::identity(std::move(names));
    // Left-multiplying by a twist matrix adds multiples of row c to the rows
    // of its neighbors; row c itself never changes.
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        std::size_t c = *it;
        for (std::size_t e = 0; e < m.dim; ++e) {
            long long i = config.intersections[c][e];
            if (i == 0 || e == c) continue;
            for (std::size_t k = 0; k < m.dim; ++k) {
                const BigInt& src = m.at(c, k);
                if (src != 0) m.at(e, k) += i * src;
            }
        }
    }
    return m;
}

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
    if (a.dim != b.dim) throw StructuralError("matrix dimension mismatch");
    TransitionMatrix out;
    out.dim = a.dim;
    out.names = a.names;
    out.data.assign(a.dim * a.dim, BigInt(0));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.dim; ++j) {
                const BigInt& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

std::vector<BigInt> apply_matrix(const TransitionMatrix& m, const std::vector<BigInt>& v) {
    if (v.size() != m.dim) throw StructuralError("vector length does not match matrix dimension");
    std::vector<BigInt> out(m.dim, BigInt(0));
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            const BigInt& e = m.at(i, j);
            if (e != 0) out[i] += e * v[j];
        }
    return out;
}

std::vector<std::vector<std::string>> boolean_propagate(
    const std::vector<std::string>& seed_support, const MulticurveConfiguration& config,
    const TwistWord& word, int iterations) {
    config.check_structure();
    if (iterations < 0) throw PreconditionError("iterations must be >= 0");
    std::vector<std::size_t> letters = resolve_letters(config, word);
    const std::size_t n = config.curves.size();
    const std::size_t total = n + config.witnesses.size();
    std::vector<std::string> names = coordinate_names(config);

    std::vector<char> on(total, 0);
    for (const std::string& s : seed_support) {
        bool found = false;
        for (std::size_t i = 0; i < total; ++i)
            if (names[i] == s) {
                on[i] = 1;
                found = true;
                break;
            }
        if (!found) throw StructuralError(s + " is not a coordinate name");
    }

    auto snapshot = [&] {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < total; ++i)
            if (on[i]) s.push_back(names[i]);
        return s;
    };

    std::vector<std::vector<std::string>> out;
    out.push_back(snapshot());
    for (int t = 0; t < iterations; ++t) {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            std::size_t c = *it;
            if (!on[c]) continue;
            for (std::size_t e = 0; e < n; ++e)
                if (config.intersections[c][e] > 0) on[e] = 1;
            for (std::size_t w = 0; w < config.witnesses.size(); ++w)
                if (config.witnesses[w].row[c] > 0) on[n + w] = 1;
        }
        out.push_back(snapshot());
    }
    return out;
}

} // namespace curvegraph
