#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hyperchroma/galois.hpp"

using hyperchroma::GaloisField;

namespace {

const int kFieldOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

int pow_mul(const GaloisField& f, int a, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r = f.mul(r, a);
    return r;
}

} // namespace

TEST_CASE("prime field arithmetic", "[galois]") {
    GaloisField f5(5);
    CHECK(f5.order() == 5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.degree() == 1);
    CHECK(f5.modulus().empty());
    CHECK(f5.add(2, 4) == 1);
    CHECK(f5.mul(2, 4) == 3);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.neg(2) == 3);
    CHECK(f5.sub(1, 3) == 3);

    GaloisField f7(7);
    CHECK(f7.add(3, 5) == 1);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);

    GaloisField f2(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
}

TEST_CASE("GF(4) tables", "[galois]") {
    GaloisField f(4);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 2);
    // Reduction polynomial x^2 + x + 1, constant term first.
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.add(2, 3) == 1);
    CHECK(f.add(2, 2) == 0);
    // Squares: 2^2 = 3, 3^2 = 2.
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("reduction polynomial choice", "[galois]") {
    // Smallest monic irreducible, coefficients compared high-degree-first.
    CHECK(GaloisField(8).modulus() == std::vector<int>{1, 1, 0, 1});   // x^3+x+1
    CHECK(GaloisField(9).modulus() == std::vector<int>{1, 0, 1});      // x^2+1
    CHECK(GaloisField(16).modulus() == std::vector<int>{1, 1, 0, 0, 1}); // x^4+x+1
    CHECK(GaloisField(27).modulus() == std::vector<int>{1, 2, 0, 1});  // x^3+2x+1
    CHECK(GaloisField(25).modulus() == std::vector<int>{2, 0, 1});     // x^2+2
}

TEST_CASE("field axioms hold exhaustively", "[galois]") {
    for (int q : kFieldOrders) {
        CAPTURE(q);
        GaloisField f(q);
        REQUIRE(f.order() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.inv(f.inv(a)) == a);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("no zero divisors and cyclic unit group", "[galois]") {
    for (int q : kFieldOrders) {
        CAPTURE(q);
        GaloisField f(q);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                REQUIRE(f.mul(a, b) != 0);
        // Some element generates all q-1 units.
        bool found = false;
        for (int g = 1; g < q && !found; ++g) {
            std::vector<bool> seen(q, false);
            int x = 1;
            int distinct = 0;
            for (int i = 0; i < q - 1; ++i) {
                x = f.mul(x, g);
                if (!seen[x]) {
                    seen[x] = true;
                    ++distinct;
                }
            }
            found = distinct == q - 1;
        }
        CHECK(found);
    }
}

TEST_CASE("Frobenius map is additive", "[galois]") {
    for (int q : kFieldOrders) {
        CAPTURE(q);
        GaloisField f(q);
        int p = f.characteristic();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                REQUIRE(pow_mul(f, f.add(a, b), p) ==
                        f.add(pow_mul(f, a, p), pow_mul(f, b, p)));
        // x -> x^p fixes exactly the prime subfield when q = p.
        if (f.degree() == 1)
            for (int a = 0; a < q; ++a) REQUIRE(pow_mul(f, a, p) == a);
    }
}

TEST_CASE("invalid orders are rejected", "[galois]") {
    CHECK_THROWS_AS(GaloisField(0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(-4), std::invalid_argument);
    CHECK_THROWS_WITH(GaloisField(6), "not a prime power: 6 = 2^1 * 3");
    CHECK_THROWS_WITH(GaloisField(12), "not a prime power: 12 = 2^2 * 3");
    CHECK_THROWS_WITH(GaloisField(2048), "field order above 1024 not supported");
    CHECK_THROWS_AS(GaloisField(100), std::invalid_argument);
}

TEST_CASE("element range checks", "[galois]") {
    GaloisField f(4);
    CHECK_THROWS_AS(f.add(4, 0), std::out_of_range);
    CHECK_THROWS_AS(f.mul(0, -1), std::out_of_range);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("largest supported order", "[galois]") {
    GaloisField f(1024);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 10);
    CHECK(f.mul(2, f.inv(2)) == 1);
    CHECK(f.mul(513, f.inv(513)) == 1);
    CHECK(f.add(1023, 1023) == 0);
}
