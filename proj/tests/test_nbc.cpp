#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "nbc.hpp"
#include "test_util.hpp"

using namespace arrdeform;
using arrdeform::testing::rep;
using arrdeform::testing::sv;

namespace {

const Field Q = Field::rationals();

Representation demo() {
    return rep(Q, {{1, 0}, {0, 1}, {1, 1}}, 2);
}

TotalOrder random_order(std::mt19937& rng, std::size_t m) {
    TotalOrder order = TotalOrder::natural(m);
    std::shuffle(order.elements.begin(), order.elements.end(), rng);
    return order;
}

}  // namespace

TEST_CASE("total order validation") {
    CHECK_THROWS_AS((TotalOrder{{0, 0, 1}}.validate(3)), InputError);
    CHECK_THROWS_AS((TotalOrder{{0, 1}}.validate(3)), InputError);
    CHECK_THROWS_AS((TotalOrder{{0, 1, 3}}.validate(3)), InputError);
    TotalOrder::natural(4).validate(4);
}

TEST_CASE("affine circuit examples") {
    const Representation r = demo();
    CHECK(affine_circuits(arrangement_from(r, sv(Q, {0, 0, 1}))).empty());

    const auto concurrent = affine_circuits(arrangement_from(r, sv(Q, {0, 0, 0})));
    REQUIRE(concurrent.size() == 1);
    CHECK(concurrent[0] == std::vector<std::size_t>{0, 1, 2});

    const Representation parallel = rep(Q, {{1}, {1}}, 1);
    const auto coincident = affine_circuits(arrangement_from(parallel, sv(Q, {0, 0})));
    REQUIRE(coincident.size() == 1);
    CHECK(coincident[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("affine NBC counts") {
    CHECK(affine_nbc_counts(Arrangement{Q, 2}, TotalOrder::natural(0)) ==
          std::vector<std::uint64_t>{1});
    const Representation r = demo();
    CHECK(affine_nbc_counts(arrangement_from(r, sv(Q, {0, 0, 0})), TotalOrder::natural(3)) ==
          std::vector<std::uint64_t>{1, 3, 2});
    CHECK(affine_nbc_counts(arrangement_from(r, sv(Q, {0, 0, 1})), TotalOrder::natural(3)) ==
          std::vector<std::uint64_t>{1, 3, 3});
}

TEST_CASE("NBC route examples") {
    const Representation r = demo();
    CHECK(char_poly_nbc(arrangement_from(r, sv(Q, {0, 0, 0})), TotalOrder::natural(3)) ==
          IntPoly::parse("t^2 - 3t + 2"));
    CHECK(char_poly_nbc(arrangement_from(r, sv(Q, {0, 0, 1})), TotalOrder::natural(3)) ==
          IntPoly::parse("t^2 - 3t + 3"));

    Arrangement single{Q, 3};
    single.add(Hyperplane::make(sv(Q, {1, 0, 0}), Q.zero()));
    CHECK(char_poly_nbc(single, TotalOrder::natural(1)) == IntPoly::parse("t^3 - t^2"));
}

TEST_CASE("NBC counts are order-invariant") {
    std::mt19937 rng(1234);
    const std::vector<Representation> reps{
        demo(), rep(Q, {{1}, {1}, {1}}, 1), rep(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, 2)};
    for (const Representation& r : reps) {
        for (const auto& g : {ScalarVec(r.m(), Q.zero()), sv(Q, std::vector<long long>(r.m(), 1))}) {
            const Arrangement arr = arrangement_from(r, g);
            const auto reference = affine_nbc_counts(arr, TotalOrder::natural(r.m()));
            for (int trial = 0; trial < 20; ++trial)
                CHECK(affine_nbc_counts(arr, random_order(rng, r.m())) == reference);
        }
    }
}

TEST_CASE("affine circuits of A_g equal the consistency signature") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::vector<Representation> reps{
        demo(), rep(Q, {{1}, {1}}, 1), rep(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, 2)};
    for (const Representation& r : reps) {
        for (int trial = 0; trial < 12; ++trial) {
            ScalarVec g;
            for (std::size_t i = 0; i < r.m(); ++i) g.push_back(Q.from_int(entry(rng)));
            std::vector<std::vector<std::size_t>> from_signature;
            for (const Circuit& c : consistency_signature(r, g).circuits_in)
                from_signature.push_back(c.indices);
            CHECK(affine_circuits(arrangement_from(r, g)) == from_signature);
        }
    }
}

TEST_CASE("affine independence matches matroid independence") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> entry(-2, 2);
    const Representation r = rep(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, 2);
    for (int trial = 0; trial < 10; ++trial) {
        ScalarVec g;
        for (std::size_t i = 0; i < r.m(); ++i) g.push_back(Q.from_int(entry(rng)));
        const Arrangement arr = arrangement_from(r, g);
        for (std::uint64_t mask = 1; mask < (1u << r.m()); ++mask) {
            const auto indices = mask_to_indices(mask);
            const Matrix system = arr.subsystem(indices);
            const Matrix red = rref(system);
            bool consistent = true;
            std::size_t coeff_rank = 0;
            for (std::size_t col : pivot_columns(red)) {
                if (col == arr.dim())
                    consistent = false;
                else
                    ++coeff_rank;
            }
            if (!consistent) continue;  // irrelevant to affine (in)dependence
            const bool affine_independent = coeff_rank == indices.size();
            CHECK(affine_independent == (r.subset_rank(indices) == indices.size()));
        }
    }
}

TEST_CASE("coefficient comparison on the demo") {
    const ComparisonReport report = verify_comparison(demo());
    CHECK(report.pass);
    CHECK(report.a_matroid == std::vector<mpz_class>{1, 3, 2});
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].a_smaller == std::vector<mpz_class>{1, 3, 2});
    CHECK(report.pairs[0].a_larger == std::vector<mpz_class>{1, 3, 3});
}

TEST_CASE("coefficient comparison is vacuous without circuits") {
    const ComparisonReport report = verify_comparison(rep(Q, {{1, 0}, {0, 1}}, 2));
    CHECK(report.pass);
    CHECK(report.pairs.empty());
    CHECK(report.vs_matroid.size() == 1);
}

TEST_CASE("coefficient comparison on the parallel pair") {
    const ComparisonReport report = verify_comparison(rep(Q, {{1}, {1}}, 1));
    CHECK(report.pass);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].a_smaller == std::vector<mpz_class>{1, 1});  // t - 1
    CHECK(report.pairs[0].a_larger == std::vector<mpz_class>{1, 2});   // t - 2
}
