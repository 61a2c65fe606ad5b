#include "curvegraph/bounds.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace curvegraph {

std::string_view group_kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::torelli: return "torelli";
        case GroupKind::purebraid: return "purebraid";
        case GroupKind::pmod: return "pmod";
    }
    throw std::logic_error("unreachable group kind");
}

GroupKind group_kind_from_name(std::string_view name) {
    if (name == "torelli") return GroupKind::torelli;
    if (name == "purebraid") return GroupKind::purebraid;
    if (name == "pmod") return GroupKind::pmod;
    throw PreconditionError("unknown group: " + std::string(name));
}

int lefschetz_torelli(int g) {
    if (g < 2)
        throw PreconditionError("lefschetz argument needs g >= 2, got " + std::to_string(g));
    return 2 - 2 * g;
}

bool euler_poincare_check(int closed_chi, const SingularityData& d) {
    long long sum = 0;
    for (int p : d.puncture_prongs) {
        if (p < 1) throw PreconditionError("puncture prong count must be >= 1");
        sum += 2 - p;
    }
    for (int p : d.interior_prongs) {
        if (p < 3) throw PreconditionError("interior singularity needs >= 3 prongs");
        sum += 2 - p;
    }
    return sum == 2LL * closed_chi;
}

std::vector<PigeonholeCase> pigeonhole_cases(GroupKind k) {
    switch (k) {
        case GroupKind::torelli:
            return {{"negative lefschetz number", 1,
                     "L = 2 - 2g < 0 forces a fixed rectangle, so the first power already has a "
                     "positive diagonal entry"}};
        case GroupKind::purebraid:
            return {{"monogon", 23,
                     "if every monogon puncture kept missing its rectangle for 23 steps, each "
                     "would need >= 24 attached real branches and 12*k1 >= 3n + 24 > 3n - 3 "
                     "would exceed the real-branch budget"},
                    {"bigon", 11,
                     "a bigon puncture recurs within 11 steps, else >= 12 attached real branches "
                     "per bigon overruns the budget the same way"}};
        case GroupKind::pmod:
            return {{"monogon", 31,
                     "monogon punctures recur within 31 steps once the real-branch budget "
                     "3|chi| caps how many branches each can hold"},
                    {"bigon", 15,
                     "bigon punctures recur within 15 steps under the same budget count"}};
    }
    throw std::logic_error("unreachable group kind");
}

long long derive_q(GroupKind k, const Surface& s) {
    switch (k) {
        case GroupKind::torelli:
            if (!is_closed(s))
                throw PreconditionError("torelli argument needs a closed surface: punctures = 0 "
                                        "and boundary = 0 violated");
            lefschetz_torelli(s.genus);  // enforces g >= 2
            break;
        case GroupKind::purebraid:
            if (s.genus != 0 || s.boundary != 1)
                throw PreconditionError("purebraid argument runs on the punctured disc "
                                        "(genus 0, one boundary)");
            if (s.punctures < 4)
                throw PreconditionError("purebraid argument needs n >= 4, got " +
                                        std::to_string(s.punctures));
            break;
        case GroupKind::pmod: {
            long long threshold = 38LL * s.genus - 38;
            if (s.punctures <= threshold)
                throw PreconditionError("pmod bound needs n > 38g - 38: n = " +
                                        std::to_string(s.punctures) + ", 38g - 38 = " +
                                        std::to_string(threshold));
            break;
        }
    }
    long long q = 0;
    for (const PigeonholeCase& c : pigeonhole_cases(k)) q = std::max(q, c.constant);
    return q;
}

LowerBoundRecord prop22_bound(const Surface& s, long long r, long long q) {
    if (complexity(s) < 2)
        throw PreconditionError("lower bound needs complexity >= 2, got " +
                                std::to_string(complexity(s)));
    if (r < 1) throw PreconditionError("real-branch count r must be >= 1");
    if (q < 1) throw PreconditionError("return-time constant q must be >= 1");
    const long long abs_chi = std::abs(euler_characteristic(s));
    const long long n = s.punctures;
    LowerBoundRecord rec;
    rec.surface = s;
    rec.q = q;
    rec.r = r;
    rec.k = 2 * q * r + 24 * abs_chi - 8 * n;
    rec.w = rec.k + 6 * abs_chi - 2 * n;
    assert(rec.w > 0);
    rec.bound = Rational(1, rec.w);
    return rec;
}

LowerBoundRecord lower_bound(GroupKind k, int g, int n) {
    Surface s;
    switch (k) {
        case GroupKind::torelli:
            if (n != 0)
                throw PreconditionError("torelli lower bound is for closed surfaces; punctures "
                                        "must be 0");
            s = Surface{g, 0, 0};
            break;
        case GroupKind::purebraid:
            if (g != 0)
                throw PreconditionError("purebraid lower bound is for the punctured disc; genus "
                                        "must be 0");
            s = Surface{0, n, 1};
            break;
        case GroupKind::pmod:
            s = Surface{g, n, 0};
            break;
    }
    const long long q = derive_q(k, s);
    const long long r = branch_budget(s).max_real;
    LowerBoundRecord rec = prop22_bound(s, r, q);
    rec.group = k;

    const long long abs_chi = std::abs(euler_characteristic(s));
    rec.derivation.push_back("r = " + std::to_string(r) + " (real-branch budget " +
                             (is_closed(s) ? "9|chi|" : "3|chi|") + ", |chi| = " +
                             std::to_string(abs_chi) + ")");
    for (const PigeonholeCase& c : pigeonhole_cases(k))
        rec.derivation.push_back("case " + c.name + ": q <= " + std::to_string(c.constant) +
                                 " (" + c.inequality + ")");
    rec.derivation.push_back("q = " + std::to_string(q));
    rec.derivation.push_back("k = 2qr + 24|chi| - 8n = " + std::to_string(rec.k));
    rec.derivation.push_back("w = k + 6|chi| - 2n = " + std::to_string(rec.w));

    if (k == GroupKind::pmod) {
        rec.published_w = 1296LL * g + 638LL * n - 1296;
        rec.published_bound = Rational(1, *rec.published_w);
        rec.derivation.push_back(
            "direct substitution gives w = 432g + 206n - 432 = " + std::to_string(rec.w) +
            ", while the published constant is 1296g + 638n - 1296 = " +
            std::to_string(*rec.published_w) + "; the two disagree and both are reported");
    }
    return rec;
}

std::string_view certify_mode_name(CertifyMode m) {
    return m == CertifyMode::Boolean ? "boolean" : "exact";
}

CertifyMode certify_mode_from_name(std::string_view name) {
    if (name == "boolean") return CertifyMode::Boolean;
    if (name == "exact") return CertifyMode::Exact;
    throw PreconditionError("unknown mode: " + std::string(name));
}

namespace {

// Shared certification loop: steps the support (or the exact vector) through
// word applications and stops at the first positive witness coordinate.
UpperBoundCertificate certify(const MulticurveConfiguration& config, const TwistWord& word,
                              std::string_view seed, std::string_view witness, long long max_j,
                              CertifyMode mode) {
    require_penner(config, word);
    auto seed_idx = config.curve_index(seed);
    if (!seed_idx) throw StructuralError("seed " + std::string(seed) + " is not a configuration curve");
    auto wit_idx = config.witness_index(witness);
    if (!wit_idx) throw StructuralError("witness " + std::string(witness) + " is not a witness");
    if (max_j < 1) throw PreconditionError("max_j must be >= 1");
    if (config.witnesses[*wit_idx].row[*seed_idx] != 0)
        throw PreconditionError("seed " + std::string(seed) + " meets witness " +
                                std::string(witness) + "; the distance-1 edge is missing");

    UpperBoundCertificate cert;
    cert.config = config;
    cert.word = word;
    cert.seed = seed;
    cert.witness = witness;
    cert.mode = mode;

    const std::size_t wit_coord = config.curves.size() + *wit_idx;
    IntersectionVector v = vector_of_curve(config, seed);
    assert(v.values[wit_coord] == 0);

    if (mode == CertifyMode::Exact) {
        cert.trace.push_back(support(v));
        for (long long t = 1; t <= max_j; ++t) {
            IntersectionVector next = apply_word(v, config, word);
            if (next.values[wit_coord] != 0) {
                cert.j = t - 1;
                break;
            }
            cert.trace.push_back(support(next));
            v = std::move(next);
            cert.j = t;
        }
    } else {
        std::vector<std::vector<std::string>> steps =
            boolean_propagate(support(v), config, word, 1);
        cert.trace.push_back(steps[0]);
        std::vector<std::string> current = steps[0];
        const std::string witness_name = config.witnesses[*wit_idx].name;
        auto hits_witness = [&](const std::vector<std::string>& s) {
            for (const std::string& name : s)
                if (name == witness_name) return true;
            return false;
        };
        for (long long t = 1; t <= max_j; ++t) {
            std::vector<std::vector<std::string>> step =
                boolean_propagate(current, config, word, 1);
            current = step[1];
#ifndef NDEBUG
            // Spot-check the saturating step against the exact engine.
            v = apply_word(v, config, word);
            std::vector<std::string> exact_support = support(v);
            if (!hits_witness(current)) assert(exact_support == current);
#endif
            if (hits_witness(current)) {
                cert.j = t - 1;
                break;
            }
            cert.trace.push_back(current);
            cert.j = t;
        }
    }

    if (cert.j == 0)
        throw EmptyCertificateError("witness " + std::string(witness) +
                                    " meets the first image of " + std::string(seed) +
                                    "; no certificate");
    cert.bound = Rational(2, cert.j);
    assert(static_cast<long long>(cert.trace.size()) == cert.j + 1);
    return cert;
}

} // namespace

UpperBoundCertificate certify_upper(const MulticurveConfiguration& config, const TwistWord& word,
                                    std::string_view seed, std::string_view witness,
                                    long long max_j, CertifyMode mode) {
    return certify(config, word, seed, witness, max_j, mode);
}

UpperBoundCertificate certify_upper(const FamilyInstance& inst, long long max_j,
                                    CertifyMode mode) {
    return certify(inst.config, inst.word, inst.seed, inst.witness, max_j, mode);
}

UpperBoundCertificate power_certificate(const UpperBoundCertificate& cert, int m) {
    if (m < 1) throw PreconditionError("power must be >= 1");
    const long long jp = cert.j / m;
    if (jp == 0)
        throw EmptyCertificateError("certificate with j = " + std::to_string(cert.j) +
                                    " does not survive taking the power " + std::to_string(m));
    TwistWord powered;
    powered.letters.reserve(cert.word.letters.size() * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        powered.letters.insert(powered.letters.end(), cert.word.letters.begin(),
                               cert.word.letters.end());
    UpperBoundCertificate out = certify(cert.config, powered, cert.seed, cert.witness, jp, cert.mode);
    if (out.j != jp)
        throw std::logic_error("power certificate re-verification disagrees with floor(j/m)");
    return out;
}

} // namespace curvegraph
