#include <doctest.h>

#include "errors.hpp"
#include "field.hpp"

using namespace arrdeform;

TEST_CASE("prime field construction rejects non-primes") {
    CHECK_THROWS_AS(Field::gf(1), InputError);
    CHECK_THROWS_AS(Field::gf(4), InputError);
    CHECK_THROWS_AS(Field::gf(91), InputError);  // 7 * 13
    CHECK(Field::gf(2).prime() == 2);
    CHECK(Field::gf(13).prime() == 13);
}

TEST_CASE("rational scalars stay in lowest terms") {
    const Field q = Field::rationals();
    CHECK(q.parse("2/4").str() == "1/2");
    CHECK(q.parse("-6/4").str() == "-3/2");
    CHECK(q.parse("3/-6").str() == "-1/2");  // denominator made positive
    CHECK(q.parse("0/7").str() == "0");
    CHECK((q.parse("1/3") + q.parse("1/6")).str() == "1/2");
}

TEST_CASE("scalar parsing rejects junk") {
    const Field q = Field::rationals();
    CHECK_THROWS_AS(q.parse("1/0"), InputError);
    CHECK_THROWS_AS(q.parse("a"), InputError);
    CHECK_THROWS_AS(q.parse("1.5"), InputError);
    CHECK_THROWS_AS(q.parse(""), InputError);
    CHECK_THROWS_AS(Field::gf(5).parse("1/2"), InputError);  // fractions are Q-only
}

TEST_CASE("field axioms hold exactly") {
    for (const Field f : {Field::rationals(), Field::gf(7)}) {
        for (long long v : {-5, -1, 0, 1, 2, 9}) {
            const Scalar a = f.from_int(v);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("GF(p) inverses, exhaustively for p <= 13") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        const Field f = Field::gf(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            const Scalar s = f.from_int(static_cast<long long>(a));
            CHECK((s * s.inverse()).is_one());
            CHECK(s.residue() < p);
        }
    }
}

TEST_CASE("GF(p) arithmetic reduces into [0, p)") {
    const Field f = Field::gf(5);
    CHECK(f.from_int(-1).residue() == 4);
    CHECK(f.from_int(7).residue() == 2);
    CHECK((f.from_int(3) + f.from_int(4)).residue() == 2);
    CHECK((f.from_int(3) * f.from_int(4)).residue() == 2);
    CHECK((-f.from_int(0)).residue() == 0);
    CHECK(f.parse("-7").residue() == 3);
}

TEST_CASE("mixed-field arithmetic is a contract error") {
    CHECK_THROWS_AS(Field::rationals().one() + Field::gf(3).one(), ContractError);
    CHECK_THROWS_AS(Field::gf(3).one() * Field::gf(5).one(), ContractError);
}

TEST_CASE("inverse of zero is a contract error") {
    CHECK_THROWS_AS(Field::rationals().zero().inverse(), ContractError);
    CHECK_THROWS_AS(Field::gf(3).zero().inverse(), ContractError);
}
