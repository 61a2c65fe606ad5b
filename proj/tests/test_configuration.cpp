#include <doctest.h>

#include <algorithm>

#include "curvegraph/configuration.hpp"

using namespace curvegraph;

namespace {

MulticurveConfiguration two_curve_config(long long i_ab = 2) {
    MulticurveConfiguration c;
    c.surface = Surface{2, 0, 0};
    c.curves = {Curve{"a", CurveClass::A, false}, Curve{"b", CurveClass::B, false}};
    c.intersections = {{0, i_ab}, {i_ab, 0}};
    return c;
}

// Degrees in the intersection graph, counting positive entries.
std::vector<int> degrees(const MulticurveConfiguration& c) {
    std::vector<int> d(c.curves.size(), 0);
    for (std::size_t i = 0; i < c.curves.size(); ++i)
        for (std::size_t k = 0; k < c.curves.size(); ++k)
            if (c.intersections[i][k] > 0) ++d[i];
    return d;
}

bool is_path_graph(const MulticurveConfiguration& c) {
    std::vector<int> d = degrees(c);
    if (c.curves.size() == 1) return d[0] == 0;
    int ones = 0;
    for (int x : d) {
        if (x == 1)
            ++ones;
        else if (x != 2)
            return false;
    }
    if (ones != 2) return false;
    // Walk from one endpoint; a path visits every node exactly once.
    std::size_t start = 0;
    while (d[start] != 1) ++start;
    std::vector<char> seen(c.curves.size(), 0);
    std::size_t cur = start, visited = 1;
    seen[cur] = 1;
    for (;;) {
        std::size_t next = c.curves.size();
        for (std::size_t k = 0; k < c.curves.size(); ++k)
            if (!seen[k] && c.intersections[cur][k] > 0) next = k;
        if (next == c.curves.size()) break;
        seen[next] = 1;
        cur = next;
        ++visited;
    }
    return visited == c.curves.size();
}

} // namespace

TEST_CASE("purebraid family shape at n = 5") {
    FamilyInstance inst = purebraid_family(5);
    REQUIRE(inst.config.curves.size() == 4);
    CHECK(inst.config.curves[0].name == "a1");
    CHECK(inst.config.curves[0].cls == CurveClass::A);
    CHECK(inst.config.curves[1].cls == CurveClass::B);
    CHECK(inst.config.curves[2].cls == CurveClass::A);
    CHECK(inst.config.curves[3].cls == CurveClass::B);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            long long expected = (i + 1 == k || k + 1 == i) ? 2 : 0;
            CHECK(inst.config.intersections[i][k] == expected);
        }
    REQUIRE(inst.config.witnesses.size() == 1);
    CHECK(inst.config.witnesses[0].row == std::vector<long long>{0, 0, 0, 2});
    CHECK(inst.word.letters == std::vector<std::string>{"a1", "a2", "a3", "a4"});
    CHECK(inst.seed == "a1");
    CHECK(inst.witness == "gamma");
    CHECK(inst.claimed_j == 2);
    CHECK(inst.claimed_bound == Rational(1));
    CHECK(validate_penner(inst.config, inst.word).passed());
}

TEST_CASE("purebraid family bounds and preconditions") {
    CHECK(purebraid_family(4).claimed_bound == Rational(2));
    CHECK(purebraid_family(4).claimed_j == 1);
    CHECK(purebraid_family(10).claimed_bound == Rational(2, 7));
    CHECK_THROWS_AS(purebraid_family(3), PreconditionError);
}

TEST_CASE("torelli family shape at g = 13") {
    FamilyInstance inst = torelli_family(13);
    // n' = 6: a_0..a_6 and b_0..b_6.
    REQUIRE(inst.config.curves.size() == 14);
    CHECK(inst.config.curves[0].name == "a0");
    CHECK(inst.config.curves[7].name == "b0");
    for (const Curve& c : inst.config.curves) CHECK(c.separating);
    CHECK(inst.seed == "a4");
    CHECK(inst.claimed_j == 1);
    CHECK(inst.claimed_bound == Rational(8));
    // a_k meets exactly b_{k-1} and b_k, twice each.
    CHECK(inst.config.intersections[4][7 + 4] == 2);
    CHECK(inst.config.intersections[4][7 + 3] == 2);
    CHECK(inst.config.intersections[4][7 + 5] == 0);
    CHECK(inst.config.intersections[0][7 + 0] == 2);
    // Witness touches the index-0 and index >= n'-1 curves only.
    const std::vector<long long>& row = inst.config.witnesses[0].row;
    for (int k = 0; k <= 6; ++k) {
        long long expected = (k == 0 || k >= 5) ? 2 : 0;
        CHECK(row[k] == expected);
        CHECK(row[7 + k] == expected);
    }
    // B block first, so the A multitwist acts first (rightmost).
    REQUIRE(inst.word.letters.size() == 14);
    CHECK(inst.word.letters.front() == "b0");
    CHECK(inst.word.letters.back() == "a6");
    CHECK(validate_penner(inst.config, inst.word).passed());
}

TEST_CASE("torelli family parameters") {
    FamilyInstance inst = torelli_family(20);
    CHECK(inst.config.curves.size() == 22);
    CHECK(inst.claimed_j == 2);
    CHECK(inst.seed == "a5");
    CHECK(inst.claimed_bound == Rational(1));  // 8/(20-12)
    CHECK_THROWS_AS(torelli_family(12), PreconditionError);
}

TEST_CASE("validator passes generated families") {
    for (int n : {4, 5, 9, 16}) {
        FamilyInstance inst = purebraid_family(n);
        ValidationReport rep = validate_penner(inst.config, inst.word);
        CHECK(rep.passed());
        CHECK(rep.pseudo_anosov());
        CHECK(!rep.assumptions.empty());
    }
    for (int g : {13, 14, 21}) {
        FamilyInstance inst = torelli_family(g);
        CHECK(validate_penner(inst.config, inst.word).passed());
    }
}

TEST_CASE("validator flags same-class intersections") {
    MulticurveConfiguration c = two_curve_config();
    c.curves[1].cls = CurveClass::A;
    ValidationReport rep = validate_penner(c, TwistWord{{"a", "b"}});
    CHECK(!rep.passed());
    CHECK(!rep.pseudo_anosov());
    REQUIRE(rep.find("class-disjointness") != nullptr);
    CHECK(!rep.find("class-disjointness")->passed);
    CHECK(rep.find("zero-diagonal")->passed);
    CHECK(rep.find("symmetry")->passed);
}

TEST_CASE("validator flags incomplete words") {
    MulticurveConfiguration c = two_curve_config();
    ValidationReport rep = validate_penner(c, TwistWord{{"a"}});
    CHECK(!rep.passed());
    CHECK(!rep.find("penner-completeness")->passed);
    CHECK(rep.find("penner-completeness")->detail.find("b") != std::string::npos);
}

TEST_CASE("validator flags one-sided class assignments") {
    MulticurveConfiguration c = two_curve_config(0);
    c.curves[1].cls = CurveClass::A;
    c.intersections = {{0, 0}, {0, 0}};
    ValidationReport rep = validate_penner(c, TwistWord{{"a", "b"}});
    CHECK(!rep.find("penner-completeness")->passed);
    CHECK(!rep.find("connectivity")->passed);
}

TEST_CASE("validator flags asymmetry and nonzero diagonal") {
    MulticurveConfiguration c = two_curve_config();
    c.intersections[0][1] = 3;  // leaves [1][0] = 2
    ValidationReport rep = validate_penner(c, TwistWord{{"a", "b"}});
    CHECK(!rep.find("symmetry")->passed);

    MulticurveConfiguration d = two_curve_config();
    d.intersections[0][0] = 1;
    rep = validate_penner(d, TwistWord{{"a", "b"}});
    CHECK(!rep.find("zero-diagonal")->passed);
}

TEST_CASE("validator flags disconnected systems") {
    MulticurveConfiguration c;
    c.curves = {Curve{"a", CurveClass::A, false}, Curve{"b", CurveClass::B, false},
                Curve{"c", CurveClass::A, false}, Curve{"d", CurveClass::B, false}};
    c.intersections = {{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}};
    ValidationReport rep = validate_penner(c, TwistWord{{"a", "b", "c", "d"}});
    CHECK(!rep.find("connectivity")->passed);
    CHECK(rep.find("class-disjointness")->passed);
}

TEST_CASE("malformed structure is an error, not a failed check") {
    MulticurveConfiguration c = two_curve_config();
    c.intersections.pop_back();
    CHECK_THROWS_AS(validate_penner(c, TwistWord{{"a", "b"}}), StructuralError);

    MulticurveConfiguration d = two_curve_config();
    CHECK_THROWS_AS(validate_penner(d, TwistWord{{"a", "zz"}}), StructuralError);

    MulticurveConfiguration e = two_curve_config();
    e.witnesses.push_back(Witness{"w", {0, 0}});
    CHECK_THROWS_AS(validate_penner(e, TwistWord{{"a", "b", "w"}}), StructuralError);
}

TEST_CASE("generated intersection matrices are symmetric, hollow, even") {
    for (int n = 4; n <= 60; ++n) {
        MulticurveConfiguration c = purebraid_family(n).config;
        for (std::size_t i = 0; i < c.curves.size(); ++i) {
            CHECK(c.intersections[i][i] == 0);
            for (std::size_t k = 0; k < c.curves.size(); ++k) {
                CHECK(c.intersections[i][k] == c.intersections[k][i]);
                CHECK(c.intersections[i][k] % 2 == 0);
            }
        }
    }
    for (int g = 13; g <= 60; ++g) {
        MulticurveConfiguration c = torelli_family(g).config;
        for (std::size_t i = 0; i < c.curves.size(); ++i) {
            CHECK(c.intersections[i][i] == 0);
            for (std::size_t k = 0; k < c.curves.size(); ++k) {
                CHECK(c.intersections[i][k] == c.intersections[k][i]);
                CHECK(c.intersections[i][k] % 2 == 0);
            }
        }
    }
}

TEST_CASE("generated intersection graphs are paths") {
    for (int n : {4, 5, 12, 31}) {
        MulticurveConfiguration c = purebraid_family(n).config;
        CHECK(c.curves.size() == static_cast<std::size_t>(n - 1));
        CHECK(is_path_graph(c));
    }
    for (int g : {13, 14, 20, 33}) {
        MulticurveConfiguration c = torelli_family(g).config;
        CHECK(c.curves.size() == static_cast<std::size_t>(2 * (g / 2) + 2));
        CHECK(is_path_graph(c));
        // Classes alternate along the path: neighbors never share a class.
        for (std::size_t i = 0; i < c.curves.size(); ++i)
            for (std::size_t k = 0; k < c.curves.size(); ++k)
                if (c.intersections[i][k] > 0) CHECK(c.curves[i].cls != c.curves[k].cls);
    }
}

TEST_CASE("witness names never appear among word letters") {
    for (int n : {4, 9}) {
        FamilyInstance inst = purebraid_family(n);
        for (const std::string& letter : inst.word.letters)
            for (const Witness& w : inst.config.witnesses) CHECK(letter != w.name);
    }
    FamilyInstance inst = torelli_family(17);
    for (const std::string& letter : inst.word.letters)
        for (const Witness& w : inst.config.witnesses) CHECK(letter != w.name);
}

TEST_CASE("seed is disjoint from witness in every generated instance") {
    for (int n = 4; n <= 60; ++n) {
        FamilyInstance inst = purebraid_family(n);
        std::size_t seed = *inst.config.curve_index(inst.seed);
        CHECK(inst.config.witnesses[0].row[seed] == 0);
    }
    for (int g = 13; g <= 60; ++g) {
        FamilyInstance inst = torelli_family(g);
        std::size_t seed = *inst.config.curve_index(inst.seed);
        CHECK(inst.config.witnesses[0].row[seed] == 0);
    }
}

TEST_CASE("torelli membership") {
    GroupMembership m = is_torelli(torelli_family(13));
    CHECK(m.value);
    CHECK(m.reason.find("separating") != std::string::npos);

    m = is_torelli(purebraid_family(6));
    CHECK(m.value);
    CHECK(m.reason.find("punctures") != std::string::npos);

    FamilyInstance inst = torelli_family(13);
    inst.config.curves[3].separating = false;
    m = is_torelli(inst);
    CHECK(!m.value);
    CHECK(m.reason.find(inst.config.curves[3].name) != std::string::npos);
}
