#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetaq/cyclotomic.hpp"

using namespace thetaq;

namespace {

CycNum random_cyc(std::mt19937& rng, long long order) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<long long> expo(0, order - 1);
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    CycNum a;
    int n = nterms(rng);
    for (int j = 0; j < n; ++j)
        a = a + CycNum(Rational(num(rng), den(rng))) * root_of_unity(order, expo(rng));
    return a;
}

} // namespace

TEST_CASE("roots of unity: basic values") {
    CHECK(root_of_unity(1, 0) == CycNum(1));
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CycNum(-1));
    CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycNum(-1));
    CHECK(root_of_unity(6, 3) == CycNum(-1));
    CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
    CHECK_THROWS_AS(root_of_unity(0, 1), DomainError);
}

TEST_CASE("arithmetic: surds and quotients of roots of unity") {
    CycNum s2 = root_of_unity(8, 1) + root_of_unity(8, 7);
    CHECK(s2 == CycNum::sqrt2());
    CHECK(std::abs(cyc_to_complex(s2).real() - 1.4142135623730951) < 1e-12);
    CHECK(std::abs(cyc_to_complex(s2).imag()) < 1e-14);

    CycNum is3 = root_of_unity(3, 1) - root_of_unity(3, 2); // i*sqrt(3)
    CHECK(std::abs(cyc_to_complex(is3).imag() - 1.7320508075688772) < 1e-12);
    CHECK(std::abs(cyc_to_complex(is3).real()) < 1e-14);
    CHECK(is3 == CycNum::i() * CycNum::sqrt3());

    // (1+i)/(1-i) = i, checked by multiplying out
    CycNum i = CycNum::i();
    CycNum q = (CycNum(1) + i) / (CycNum(1) - i);
    CHECK(q == i);
    CHECK((CycNum(1) - i) * i == CycNum(1) + i);
}

TEST_CASE("conjugation") {
    CHECK(cyc_conj(CycNum::i()) == -CycNum::i());
    CHECK(cyc_conj(CycNum::sqrt2()) == CycNum::sqrt2());
    CHECK(cyc_conj(root_of_unity(3, 1)) == root_of_unity(3, 2));
    std::mt19937 rng(7);
    for (int j = 0; j < 100; ++j) {
        CycNum a = random_cyc(rng, 12);
        CHECK(cyc_conj(cyc_conj(a)) == a);
    }
}

TEST_CASE("embedding into larger orders") {
    CHECK(cyc_embed(root_of_unity(2, 1), 8) == root_of_unity(8, 4));
    CHECK(cyc_embed(CycNum::i(), 8) == root_of_unity(8, 2));
    CHECK(cyc_embed(root_of_unity(3, 1), 36) == root_of_unity(36, 12));
    CHECK_THROWS_AS(cyc_embed(root_of_unity(4, 1), 6), DomainError);
    // embedding then comparing back is the identity
    CycNum a = root_of_unity(12, 5) + CycNum(Rational(2, 3));
    CHECK(cyc_embed(a, 36) == a);
}

TEST_CASE("numeric embedding values") {
    auto z6 = cyc_to_complex(root_of_unity(6, 1));
    CHECK(std::abs(z6.real() - 0.5) < 1e-12);
    CHECK(std::abs(z6.imag() - 0.8660254037844386) < 1e-12);
    auto m2z3 = cyc_to_complex(CycNum(-2) * root_of_unity(3, 1));
    CHECK(std::abs(m2z3.real() - 1.0) < 1e-12);
    CHECK(std::abs(m2z3.imag() + 1.7320508075688772) < 1e-12);
    CHECK_THROWS_AS(cyc_to_complex(CycNum(1), 0), DomainError);
    CHECK_THROWS_AS(cyc_to_complex(CycNum(1), 30), DomainError);
}

TEST_CASE("field axioms on random triples in Q(zeta_24)") {
    std::mt19937 rng(20240607);
    const CycNum one(1);
    for (int j = 0; j < 10000; ++j) {
        CycNum a = random_cyc(rng, 24), b = random_cyc(rng, 24), c = random_cyc(rng, 24);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
}

TEST_CASE("cyclotomic relations: zeta_n^n = 1 and prime sums vanish") {
    for (long long n : {2, 3, 4, 6, 8, 12, 24, 36}) {
        CycNum z = root_of_unity(n, 1);
        CycNum p(1);
        for (long long j = 0; j < n; ++j) p = p * z;
        CHECK(p == CycNum(1));
    }
    for (long long p : {2, 3, 5, 7, 11}) {
        CycNum s;
        for (long long j = 0; j < p; ++j) s = s + root_of_unity(p, j);
        CHECK(s.is_zero());
    }
}

TEST_CASE("numeric embedding is a ring homomorphism up to 1e-10") {
    std::mt19937 rng(99);
    for (int j = 0; j < 300; ++j) {
        CycNum a = random_cyc(rng, 24), b = random_cyc(rng, 24);
        auto fa = cyc_to_complex(a), fb = cyc_to_complex(b);
        CHECK(std::abs(cyc_to_complex(a + b) - (fa + fb)) < 1e-10);
        CHECK(std::abs(cyc_to_complex(a * b) - fa * fb) < 1e-10);
    }
}

TEST_CASE("canonicality: a - a reduces to the empty map") {
    std::mt19937 rng(4242);
    for (int j = 0; j < 10000; ++j) {
        CycNum a = random_cyc(rng, 24);
        CycNum d = a - a;
        CHECK(d.is_zero());
        CHECK(d.coeffs().empty());
    }
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(CycNum(1) / CycNum(), DivisionByZero);
    CHECK_THROWS_AS(CycNum().inverse(), DivisionByZero);
}

TEST_CASE("mixed-order arithmetic lands in the lcm order") {
    CycNum x = root_of_unity(8, 1) * root_of_unity(12, 1);
    CHECK(x == root_of_unity(24, 5));
    CHECK(CycNum::sqrt2() * CycNum::sqrt3() * (CycNum::sqrt2() * CycNum::sqrt3()) == CycNum(6));
}
