#include "curvegraph/configuration.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <vector>

namespace curvegraph {

std::string_view curve_class_name(CurveClass c) {
    return c == CurveClass::A ? "A" : "B";
}

std::optional<std::size_t> MulticurveConfiguration::curve_index(std::string_view name) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> MulticurveConfiguration::witness_index(std::string_view name) const {
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        if (witnesses[i].name == name) return i;
    return std::nullopt;
}

long long MulticurveConfiguration::intersection(std::size_t i, std::size_t j) const {
    return intersections.at(i).at(j);
}

void MulticurveConfiguration::check_structure() const {
    const std::size_t n = curves.size();
    if (intersections.size() != n)
        throw StructuralError("intersection matrix has " + std::to_string(intersections.size()) +
                              " rows for " + std::to_string(n) + " curves");
    for (std::size_t i = 0; i < n; ++i) {
        if (intersections[i].size() != n)
            throw StructuralError("intersection row " + std::to_string(i) + " has " +
                                  std::to_string(intersections[i].size()) + " entries, expected " +
                                  std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            if (intersections[i][j] < 0)
                throw StructuralError("intersections[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "] is negative");
    }
    std::set<std::string> names;
    for (const Curve& c : curves) {
        if (c.name.empty()) throw StructuralError("curve with empty name");
        if (!names.insert(c.name).second)
            throw StructuralError("duplicate name: " + c.name);
    }
    for (const Witness& w : witnesses) {
        if (w.name.empty()) throw StructuralError("witness with empty name");
        if (!names.insert(w.name).second)
            throw StructuralError("duplicate name: " + w.name);
        if (w.row.size() != n)
            throw StructuralError("witness " + w.name + " has row of length " +
                                  std::to_string(w.row.size()) + ", expected " + std::to_string(n));
        for (long long e : w.row)
            if (e < 0) throw StructuralError("witness " + w.name + " has a negative entry");
    }
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
    for (const ValidationCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> ValidationReport::failed_names() const {
    std::vector<std::string> out;
    for (const ValidationCheck& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

ValidationReport validate_penner(const MulticurveConfiguration& config, const TwistWord& word) {
    config.check_structure();
    const std::size_t n = config.curves.size();

    // Letters referring to unknown or witness coordinates are malformed input,
    // not a failed check.
    for (const std::string& letter : word.letters) {
        if (config.curve_index(letter)) continue;
        if (config.witness_index(letter))
            throw StructuralError("word letter " + letter + " names a witness");
        throw StructuralError("word letter " + letter + " is not a configuration curve");
    }

    ValidationReport report;

    ValidationCheck disjoint{"class-disjointness", true, ""};
    for (std::size_t i = 0; i < n && disjoint.passed; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (config.curves[i].cls == config.curves[j].cls && config.intersections[i][j] != 0) {
                disjoint.passed = false;
                disjoint.detail = config.curves[i].name + " and " + config.curves[j].name +
                                  " share class " +
                                  std::string(curve_class_name(config.curves[i].cls)) +
                                  " but intersect";
                break;
            }
    report.checks.push_back(std::move(disjoint));

    ValidationCheck diag{"zero-diagonal", true, ""};
    for (std::size_t i = 0; i < n; ++i)
        if (config.intersections[i][i] != 0) {
            diag.passed = false;
            diag.detail = config.curves[i].name + " has nonzero self-intersection";
            break;
        }
    report.checks.push_back(std::move(diag));

    ValidationCheck sym{"symmetry", true, ""};
    for (std::size_t i = 0; i < n && sym.passed; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (config.intersections[i][j] != config.intersections[j][i]) {
                sym.passed = false;
                sym.detail = "intersections[" + std::to_string(i) + "][" + std::to_string(j) +
                             "] != intersections[" + std::to_string(j) + "][" + std::to_string(i) +
                             "]";
                break;
            }
    report.checks.push_back(std::move(sym));

    ValidationCheck conn{"connectivity", true, ""};
    if (n == 0) {
        conn.passed = false;
        conn.detail = "no curves";
    } else {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < n; ++e)
                if (!seen[e] && config.intersections[c][e] > 0) {
                    seen[e] = 1;
                    stack.push_back(e);
                }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i]) {
                conn.passed = false;
                conn.detail = config.curves[i].name + " is not connected to " +
                              config.curves[0].name + " in the intersection graph";
                break;
            }
    }
    report.checks.push_back(std::move(conn));

    ValidationCheck complete{"penner-completeness", true, ""};
    {
        std::vector<char> used(n, 0);
        for (const std::string& letter : word.letters)
            used[*config.curve_index(letter)] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i]) {
                complete.passed = false;
                complete.detail = config.curves[i].name + " is never twisted";
                break;
            }
        bool has_a = false, has_b = false;
        for (const Curve& c : config.curves)
            (c.cls == CurveClass::A ? has_a : has_b) = true;
        if (complete.passed && (!has_a || !has_b)) {
            complete.passed = false;
            complete.detail = std::string("class ") + (has_a ? "B" : "A") + " is empty";
        }
    }
    report.checks.push_back(std::move(complete));

    report.assumptions.push_back(
        "the union of the two multicurves fills the surface: declared, not checked "
        "(connectivity of the intersection graph is necessary but not sufficient)");
    return report;
}

void require_penner(const MulticurveConfiguration& config, const TwistWord& word) {
    ValidationReport report = validate_penner(config, word);
    if (report.passed()) return;
    std::vector<std::string> failed = report.failed_names();
    std::string msg = "twist system validation failed:";
    for (const std::string& f : failed) {
        msg += " " + f;
        if (const ValidationCheck* c = report.find(f); c && !c->detail.empty())
            msg += " (" + c->detail + ")";
    }
    throw ValidationError(msg, std::move(failed));
}

FamilyInstance purebraid_family(int n) {
    if (n < 4)
        throw PreconditionError("punctured-disc family needs n >= 4 (complexity n - 2 >= 2), got " +
                                std::to_string(n));
    FamilyInstance inst;
    inst.config.surface = Surface{0, n, 1};
    const int m = n - 1;
    inst.config.intersections.assign(m, std::vector<long long>(m, 0));
    for (int i = 1; i <= m; ++i) {
        Curve c;
        c.name = "a" + std::to_string(i);
        c.cls = (i % 2 == 1) ? CurveClass::A : CurveClass::B;
        c.separating = true;
        inst.config.curves.push_back(std::move(c));
        if (i < m) {
            inst.config.intersections[i - 1][i] = 2;
            inst.config.intersections[i][i - 1] = 2;
        }
    }
    Witness gamma;
    gamma.name = "gamma";
    gamma.row.assign(m, 0);
    gamma.row[m - 1] = 2;
    inst.config.witnesses.push_back(std::move(gamma));
    for (int i = 1; i <= m; ++i)
        inst.word.letters.push_back("a" + std::to_string(i));
    inst.seed = "a1";
    inst.witness = "gamma";
    inst.claimed_j = n - 3;
    inst.claimed_bound = Rational(2, n - 3);
    assert(inst.config.witnesses[0].row[0] == 0);
    return inst;
}

FamilyInstance torelli_family(int g) {
    if (g < 13)
        throw PreconditionError("separating-chain family needs g >= 13, got " + std::to_string(g));
    FamilyInstance inst;
    inst.config.surface = Surface{g, 0, 0};
    const int np = g / 2;
    const int half = np + 1;
    const int total = 2 * half;
    inst.config.intersections.assign(total, std::vector<long long>(total, 0));
    // Curves a_0..a_np then b_0..b_np; b_{k-1} and b_k flank a_k.
    for (int k = 0; k <= np; ++k)
        inst.config.curves.push_back(Curve{"a" + std::to_string(k), CurveClass::A, true});
    for (int k = 0; k <= np; ++k)
        inst.config.curves.push_back(Curve{"b" + std::to_string(k), CurveClass::B, true});
    auto link = [&](int i, int j) {
        inst.config.intersections[i][j] = 2;
        inst.config.intersections[j][i] = 2;
    };
    for (int k = 0; k <= np; ++k) {
        link(k, half + k);
        if (k > 0) link(k, half + k - 1);
    }
    Witness gamma;
    gamma.name = "gamma";
    gamma.row.assign(total, 0);
    for (int idx : {0, np - 1, np}) {
        gamma.row[idx] = 2;
        gamma.row[half + idx] = 2;
    }
    inst.config.witnesses.push_back(std::move(gamma));
    // B block stored first so the A multitwist acts first.
    for (int k = 0; k <= np; ++k)
        inst.word.letters.push_back("b" + std::to_string(k));
    for (int k = 0; k <= np; ++k)
        inst.word.letters.push_back("a" + std::to_string(k));
    const int i = (g + 3) / 4;
    assert(i >= 1 && i <= np - 2);
    inst.seed = "a" + std::to_string(i);
    inst.witness = "gamma";
    inst.claimed_j = i - 3;
    inst.claimed_bound = Rational(8, g - 12);
    assert(inst.config.witnesses[0].row[i] == 0);
    return inst;
}

GroupMembership is_torelli(const FamilyInstance& inst) {
    require_penner(inst.config, inst.word);
    if (inst.config.surface.boundary > 0)
        return {true, "twists fix punctures pointwise"};
    for (const std::string& letter : inst.word.letters) {
        const Curve& c = inst.config.curves[*inst.config.curve_index(letter)];
        if (!c.separating)
            return {false, c.name + " is not separating, so its twist acts on homology"};
    }
    return {true, "every twisted curve is separating, so the word acts trivially on homology"};
}

} // namespace curvegraph
