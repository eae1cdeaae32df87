#include <doctest.h>

#include "helpers.hpp"
#include "quadres/homology.hpp"
#include "quadres/oracles.hpp"

using namespace quadres;

namespace {
const FieldChoice kFp = FieldChoice::prime(32003);
}

TEST_CASE("oracle rank sequences") {
    CHECK(oracle_complex(OracleKind::fibonacci(), 7).ranks ==
          std::vector<int>{1, 1, 2, 3, 5, 8, 13, 21});
    CHECK(oracle_complex(OracleKind::binary(), 5).ranks == std::vector<int>{1, 1, 2, 4, 8, 16});
    CHECK(oracle_complex(OracleKind::o_family(3), 3).ranks == std::vector<int>{1, 1, 3, 7});
    CHECK(oracle_complex(OracleKind::fibonacci(), 1).ranks == std::vector<int>{1, 1});
    CHECK_THROWS_AS(OracleKind::o_family(1), InvalidInputError);

    const auto fib = oracle_complex(OracleKind::fibonacci(), 10).ranks;
    for (std::size_t n = 2; n < fib.size(); ++n) CHECK(fib[n] == fib[n - 1] + fib[n - 2]);
    const auto bin = oracle_complex(OracleKind::binary(), 10).ranks;
    for (std::size_t n = 2; n < bin.size(); ++n) CHECK(bin[n] == 2 * bin[n - 1]);
}

TEST_CASE("fibonacci base differentials") {
    // ker [x1] is generated by x2 and x3, so the second differential must be
    // [x2 x3]; the third is the displayed 2x3 block
    const FreeComplex c = oracle_complex(OracleKind::fibonacci(), 3);
    CHECK(c.differentials[1] == std::vector<MatrixEntry>{{0, 0, +1, 1}});
    CHECK(c.differentials[2] == std::vector<MatrixEntry>{{0, 0, +1, 2}, {0, 1, +1, 3}});
    CHECK(c.differentials[3] ==
          std::vector<MatrixEntry>{{0, 0, +1, 1}, {0, 1, +1, 3}, {1, 1, -1, 2}, {1, 2, +1, 1}});
    // and it is what the level-by-level construction produces
    const FreeComplex built = from_diagram(build_diagram(oracle_ring(OracleKind::fibonacci()), 1, 3));
    CHECK(built.differentials == c.differentials);
}

TEST_CASE("oracle complexes are chain complexes and exact below the top") {
    for (const OracleKind& kind : {OracleKind::fibonacci(), OracleKind::binary(),
                                   OracleKind::o_family(2), OracleKind::o_family(3)}) {
        const FreeComplex c = oracle_complex(kind, 7);
        CHECK(verify_dd_zero_all(c).zero);
        CHECK(exactness_report(c, 9, kFp).consistent);
        CHECK(h0_check(c, 9, kFp));
    }
}

TEST_CASE("builds agree with their oracles, different oracles disagree") {
    for (const OracleKind& kind : {OracleKind::fibonacci(), OracleKind::binary(),
                                   OracleKind::o_family(3), OracleKind::o_family(4)}) {
        const int L = kind.tag == OracleKind::Tag::OFamily ? 6 : 8;
        const FreeComplex built = from_diagram(build_diagram(oracle_ring(kind), 1, L));
        const CompareVerdict v = compare_complexes(built, oracle_complex(kind, L), L + 4, kFp);
        CHECK(v.equal);
        CHECK(v.detail.empty());
    }

    const CompareVerdict cross = compare_complexes(oracle_complex(OracleKind::fibonacci(), 5),
                                                   oracle_complex(OracleKind::binary(), 5), 6, kFp);
    CHECK_FALSE(cross.equal);
    CHECK(cross.detail == "different rings");

    // same ring, damaged ranks: caught by the rank comparison at level 3
    FreeComplex damaged = oracle_complex(OracleKind::fibonacci(), 5);
    FreeComplex reference = oracle_complex(OracleKind::fibonacci(), 5);
    damaged.ranks[3] += 1;
    const CompareVerdict mism = compare_complexes(damaged, reference, 6, kFp);
    CHECK_FALSE(mism.equal);
    CHECK(mism.detail.find("level 3") != std::string::npos);
}

TEST_CASE("detect_oracle recognizes exactly the closed-form rings") {
    CHECK(detect_oracle(helpers::fib_ring())->tag == OracleKind::Tag::Fibonacci);
    CHECK(detect_oracle(helpers::bin_ring())->tag == OracleKind::Tag::Binary);
    CHECK(detect_oracle(helpers::o_ring(4))->n == 4);
    CHECK_FALSE(detect_oracle(normalize_spec({{1, 2}}, 2)).has_value());
    // O(2)'s ring differs from the binary ring by x2^2
    CHECK(detect_oracle(helpers::o_ring(2))->tag == OracleKind::Tag::OFamily);
}
