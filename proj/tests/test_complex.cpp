#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quadres/complex.hpp"

using namespace quadres;

namespace {

FreeComplex hand_complex(const RingSpec& spec, std::vector<int> ranks,
                         std::vector<std::vector<MatrixEntry>> diffs) {
    FreeComplex c;
    c.spec = spec;
    c.ranks = std::move(ranks);
    c.differentials = std::move(diffs);
    return c;
}

}  // namespace

TEST_CASE("from_diagram lays out the known differentials") {
    const FreeComplex c = from_diagram(build_diagram(helpers::fib_ring(), 1, 4));
    CHECK(c.ranks == std::vector<int>{1, 1, 2, 3, 5});
    CHECK(c.initial_label == 1);

    CHECK(c.differentials[1] == std::vector<MatrixEntry>{{0, 0, +1, 1}});
    // d3 = [[x1, x3, 0], [0, -x2, x1]]
    CHECK(c.differentials[3] ==
          std::vector<MatrixEntry>{{0, 0, +1, 1}, {0, 1, +1, 3}, {1, 1, -1, 2}, {1, 2, +1, 1}});

    const FreeComplex v = from_diagram(build_diagram(helpers::bin_ring(), 1, 2));
    CHECK(v.differentials[2] == std::vector<MatrixEntry>{{0, 0, +1, 1}, {0, 1, +1, 2}});
}

TEST_CASE("verify_dd_zero on builds and hand-made complexes") {
    const FreeComplex c = from_diagram(build_diagram(helpers::fib_ring(), 1, 10));
    for (int n = 2; n <= 10; ++n) CHECK(verify_dd_zero(c, n).zero);

    const RingSpec spec = helpers::fib_ring();
    const FreeComplex good = hand_complex(
        spec, {1, 1, 1}, {{}, {{0, 0, +1, 1}}, {{0, 0, +1, 2}}});
    CHECK(verify_dd_zero(good, 2).zero);

    const FreeComplex bad = hand_complex(
        spec, {1, 1, 1}, {{}, {{0, 0, +1, 1}}, {{0, 0, +1, 1}}});
    const DDWitness w = verify_dd_zero(bad, 2);
    CHECK_FALSE(w.zero);
    CHECK(w.row == 0);
    CHECK(w.col == 0);
    CHECK(w.element == "1*x1*x1");

    CHECK_THROWS_AS(verify_dd_zero(good, 1), InvalidInputError);
    CHECK_THROWS_AS(verify_dd_zero(good, 3), InvalidInputError);
}

TEST_CASE("every built complex is a chain complex (fixtures and randomized rings)") {
    for (const RingSpec& spec : helpers::fixture_rings())
        for (int initial : helpers::valid_initials(spec))
            CHECK(verify_dd_zero_all(from_diagram(build_diagram(spec, initial, 7))).zero);

    std::mt19937 rng(47);
    for (int k = 0; k < 30; ++k) {
        const RingSpec spec = helpers::random_spec(rng, 4);
        for (int initial : helpers::valid_initials(spec)) {
            const FreeComplex c = from_diagram(build_diagram(spec, initial, 6));
            CHECK(verify_dd_zero_all(c).zero);
        }
    }
}

TEST_CASE("dualize transposes, preserves ranks and is an involution") {
    const FreeComplex c = from_diagram(build_diagram(helpers::fib_ring(), 1, 4));
    const FreeComplex d = dualize(c);
    CHECK(d.orientation == Orientation::Dual);
    CHECK(d.ranks == c.ranks);
    CHECK(d.gen_degree(3) == -3);
    // transpose of d3
    CHECK(d.differentials[3] ==
          std::vector<MatrixEntry>{{0, 0, +1, 1}, {1, 0, +1, 3}, {1, 1, -1, 2}, {2, 1, +1, 1}});
    // the dual is still a complex, and dualizing back recovers the original
    CHECK(verify_dd_zero_all(d).zero);
    const FreeComplex dd = dualize(d);
    CHECK(dd.orientation == Orientation::Primal);
    CHECK(dd.differentials == c.differentials);
}

TEST_CASE("complex json round-trips byte for byte") {
    const FreeComplex c = from_diagram(build_diagram(helpers::bin_ring(), 1, 4));
    const std::string once = complex_to_json(c);
    const FreeComplex back = complex_from_json(once, c.spec);
    CHECK(complex_to_json(back) == once);
    CHECK(back.ranks == c.ranks);
    CHECK(back.differentials == c.differentials);

    const std::string dual_text = complex_to_json(dualize(c));
    CHECK(complex_to_json(complex_from_json(dual_text, c.spec)) == dual_text);

    CHECK_THROWS_AS(complex_from_json("{}", c.spec), InvalidInputError);
    CHECK_THROWS_AS(
        complex_from_json(R"({"orientation":"primal","ranks":[1,1],"differentials":[[{"row":5,"col":0,"sign":1,"label":1}]]})",
                          c.spec),
        InvalidInputError);
}
