#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvegraph/rational.hpp"
#include "curvegraph/surface.hpp"

namespace curvegraph {

// Twist sign is carried by the class: A twists positively, B negatively.
enum class CurveClass { A, B };

std::string_view curve_class_name(CurveClass c);

struct Curve {
    std::string name;
    CurveClass cls = CurveClass::A;
    bool separating = false;
};

// A test curve: never twisted, tracked only through its intersection row.
struct Witness {
    std::string name;
    std::vector<long long> row;
};

struct MulticurveConfiguration {
    Surface surface;
    std::vector<Curve> curves;
    std::vector<std::vector<long long>> intersections;
    std::vector<Witness> witnesses;

    std::size_t curve_count() const { return curves.size(); }
    std::optional<std::size_t> curve_index(std::string_view name) const;
    std::optional<std::size_t> witness_index(std::string_view name) const;
    long long intersection(std::size_t i, std::size_t j) const;

    // Shape and naming sanity: square symmetric-sized matrix, witness rows of
    // matching length, unique names, nonnegative entries.  Throws
    // StructuralError; content-level checks live in validate_penner.
    void check_structure() const;
};

// Leftmost letter acts last: the word [x, y] is the map T_x after T_y.
struct TwistWord {
    std::vector<std::string> letters;
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    // Conditions the data model cannot decide (filling); declared, not checked.
    std::vector<std::string> assumptions;

    bool passed() const;
    // Penner's theorem: a passing configuration/word pair is pseudo-Anosov.
    // Recorded as a consequence of the checks, not re-proved.
    bool pseudo_anosov() const { return passed(); }
    const ValidationCheck* find(std::string_view name) const;
    std::vector<std::string> failed_names() const;
};

// Checks, in order: class-disjointness, zero-diagonal, symmetry,
// connectivity, penner-completeness.
ValidationReport validate_penner(const MulticurveConfiguration& config, const TwistWord& word);

// Throws ValidationError unless validate_penner passes.
void require_penner(const MulticurveConfiguration& config, const TwistWord& word);

struct FamilyInstance {
    MulticurveConfiguration config;
    TwistWord word;
    std::string seed;
    std::string witness;
    long long claimed_j = 0;
    Rational claimed_bound;
};

// Multitwist on the n-punctured disc: a_i encloses punctures i and i+1,
// classes alternate starting with A, consecutive curves meet twice, the
// witness meets only a_{n-1}.  Stored letters a_1 .. a_{n-1}, so indices
// descend in application order.
FamilyInstance purebraid_family(int n);

// Genus-g chain family, n' = floor(g/2): separating curves a_0..a_n' (class A)
// and b_0..b_n' (class B) with b_{k-1}, b_k the neighbors of a_k, witness
// meeting the index-0 and index >= n'-1 curves.  Stored letters are the B
// block then the A block, so the A multitwist acts first.
FamilyInstance torelli_family(int g);

struct GroupMembership {
    bool value = false;
    std::string reason;

    explicit operator bool() const { return value; }
};

// True when every twisted curve is separating (acts trivially on homology),
// or on a punctured disc, where multitwists fix the punctures pointwise.
GroupMembership is_torelli(const FamilyInstance& inst);

} // namespace curvegraph
