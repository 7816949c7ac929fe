#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "ssl/bigint.hpp"

using ssl::BigInt;

namespace {

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (m != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    return neg ? "-" + s : s;
}

long long rand_ll(std::mt19937_64& gen) {
    // full-range signed 64-bit, biased toward small magnitudes half the time
    uint64_t r = gen();
    if (gen() & 1) r %= 1000000;
    return static_cast<long long>(r) * ((gen() & 2) ? 1 : -1);
}

}  // namespace

TEST_CASE("construction and to_string") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(1).to_string() == "1");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1000000000).to_string() == "1000000000");
    CHECK(BigInt(-9223372036854775807LL).to_string() == "-9223372036854775807");
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(5).signum() == 1);
    CHECK(BigInt(-5).signum() == -1);
}

TEST_CASE("known large values") {
    // 2^128 by repeated squaring
    BigInt two(2), p = two;
    for (int i = 0; i < 7; ++i) p = p * p;
    CHECK(p.to_string() == "340282366920938463463374607431768211456");
    // 20! = 2432902008176640000 fits 64-bit; 25! does not
    BigInt fact(1);
    for (int k = 2; k <= 25; ++k) fact = fact * BigInt(k);
    CHECK(fact.to_string() == "15511210043330985984000000");
}

TEST_CASE("arithmetic agrees with __int128 on random inputs") {
    std::mt19937_64 gen(12345);
    for (int it = 0; it < 2000; ++it) {
        long long a = rand_ll(gen), b = rand_ll(gen);
        __int128 ia = a, ib = b;
        CHECK((BigInt(a) + BigInt(b)).to_string() == i128_to_string(ia + ib));
        CHECK((BigInt(a) - BigInt(b)).to_string() == i128_to_string(ia - ib));
        CHECK((BigInt(a) * BigInt(b)).to_string() == i128_to_string(ia * ib));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("divmod identity on large random operands") {
    std::mt19937_64 gen(999);
    for (int it = 0; it < 500; ++it) {
        BigInt a = BigInt(rand_ll(gen)) * BigInt(rand_ll(gen)) * BigInt(rand_ll(gen));
        BigInt b = BigInt(rand_ll(gen)) * BigInt(rand_ll(gen));
        if (b.is_zero()) continue;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        // |r| < |b|, sign of r matches dividend
        BigInt abs_r = r.signum() < 0 ? -r : r;
        BigInt abs_b = b.signum() < 0 ? -b : b;
        CHECK(abs_r < abs_b);
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("exact division round trips") {
    std::mt19937_64 gen(4242);
    for (int it = 0; it < 500; ++it) {
        BigInt a = BigInt(rand_ll(gen)) * BigInt(rand_ll(gen));
        BigInt b = BigInt(rand_ll(gen));
        if (b.is_zero()) continue;
        CHECK(BigInt::exact_div(a * b, b) == a);
    }
    CHECK_THROWS(BigInt::exact_div(BigInt(7), BigInt(2)));
    CHECK_THROWS(BigInt::divmod(BigInt(7), BigInt(0)));
}

TEST_CASE("normalized division stress near limb boundaries") {
    // operands chosen to exercise the qhat correction paths
    std::mt19937_64 gen(777);
    for (int it = 0; it < 400; ++it) {
        BigInt big(1);
        int limbs = 2 + static_cast<int>(gen() % 4);
        for (int i = 0; i < limbs; ++i)
            big = big * BigInt(static_cast<long long>(0xffffffffULL - gen() % 3));
        BigInt div = BigInt(static_cast<long long>(0xffffffffULL - gen() % 3)) *
                     BigInt(static_cast<long long>(0x80000000ULL + gen() % 5));
        auto [q, r] = BigInt::divmod(big, div);
        CHECK(q * div + r == big);
        BigInt abs_r = r.signum() < 0 ? -r : r;
        BigInt abs_d = div.signum() < 0 ? -div : div;
        CHECK(abs_r < abs_d);
    }
}
