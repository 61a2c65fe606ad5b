#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvegraph/configuration.hpp"
#include "curvegraph/rational.hpp"
#include "curvegraph/surface.hpp"
#include "curvegraph/twist.hpp"

namespace curvegraph {

enum class GroupKind { torelli, purebraid, pmod };

std::string_view group_kind_name(GroupKind k);
GroupKind group_kind_from_name(std::string_view name);

// Lefschetz number of a torelli mapping class on a closed genus-g surface:
// trivial homology action gives 1 - 2g + 1.  Negative for g >= 2, which is
// what forces a recurrent rectangle and hence q = 1.
int lefschetz_torelli(int g);

// Prong data of an invariant foliation: punctures carry >= 1 prong
// (1 = monogon, 2 = regular/bigon), interior singularities >= 3.
struct SingularityData {
    std::vector<int> puncture_prongs;
    std::vector<int> interior_prongs;
};

// Sum of (2 - prongs) over all listed singularities against 2 * chi of the
// closed-up surface.
bool euler_poincare_check(int closed_chi, const SingularityData& d);

// One branch of the pigeonhole analysis behind a q constant.
struct PigeonholeCase {
    std::string name;
    long long constant = 0;
    std::string inequality;
};

std::vector<PigeonholeCase> pigeonhole_cases(GroupKind k);

// Group-specific return-time constant: the exponent at which some diagonal
// entry of the track matrix must turn positive.
long long derive_q(GroupKind k, const Surface& s);

struct LowerBoundRecord {
    GroupKind group = GroupKind::torelli;
    Surface surface;
    long long q = 0;
    long long r = 0;
    long long k = 0;
    long long w = 0;
    Rational bound;
    // Set when the literature states a different constant than the direct
    // substitution; both are reported, neither is silently preferred.
    std::optional<long long> published_w;
    std::optional<Rational> published_bound;
    std::vector<std::string> derivation;
};

// k = 2qr + 24|chi| - 8n, w = k + 6|chi| - 2n, bound 1/w; n counts punctures
// only, the boundary enters through chi alone.
LowerBoundRecord prop22_bound(const Surface& s, long long r, long long q);

// torelli: closed genus g, parameter n must be 0.  purebraid: disc with n
// punctures, parameter g must be 0.  pmod: genus g with n punctures, subject
// to n > 38g - 38.
LowerBoundRecord lower_bound(GroupKind k, int g, int n);

enum class CertifyMode { Boolean, Exact };

std::string_view certify_mode_name(CertifyMode m);
CertifyMode certify_mode_from_name(std::string_view name);

struct UpperBoundCertificate {
    MulticurveConfiguration config;
    TwistWord word;
    std::string seed;
    std::string witness;
    long long j = 0;
    Rational bound;
    // trace[t] is the support after t word applications, t = 0..j.
    std::vector<std::vector<std::string>> trace;
    CertifyMode mode = CertifyMode::Boolean;
};

// Iterates the word on the seed curve until the witness coordinate turns
// positive; j is the last iteration where it was still zero (capped at
// max_j), giving d(seed, word^j(seed)) <= 2 and the bound 2/j.
UpperBoundCertificate certify_upper(const MulticurveConfiguration& config, const TwistWord& word,
                                    std::string_view seed, std::string_view witness,
                                    long long max_j = 256, CertifyMode mode = CertifyMode::Boolean);

UpperBoundCertificate certify_upper(const FamilyInstance& inst, long long max_j = 256,
                                    CertifyMode mode = CertifyMode::Boolean);

// Certificate for the m-fold concatenation: j' = floor(j / m), re-verified by
// running the propagation on the concatenated word rather than assumed.
UpperBoundCertificate power_certificate(const UpperBoundCertificate& cert, int m);

} // namespace curvegraph
