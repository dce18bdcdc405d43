#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <vector>

#include "tspga/prng.hpp"

using namespace tspga;

TEST_CASE("splitmix64 reference value") {
    // Independent Python replay (tests/oracle/oracle.py).
    CHECK(splitmix64(1) == 0x910a2dec89025cc1ULL);
    static_assert(splitmix64(1) == 0x910a2dec89025cc1ULL);
}

TEST_CASE("first draws from seed 0") {
    CounterRng f(0);
    CHECK(f.next_float() == 0.5665615751722809);
    CounterRng i(0);
    CHECK(i.next_int(10) == 5);
    CHECK(i.seed() == 1);
}

TEST_CASE("equal seeds replay the same stream") {
    CounterRng a(42), b(42);
    for (int k = 0; k < 1000; ++k) {
        if (k % 3 == 0) CHECK(a.next_float() == b.next_float());
        else CHECK(a.next_int(2 + static_cast<std::uint64_t>(k % 11)) == b.next_int(2 + static_cast<std::uint64_t>(k % 11)));
    }
    CHECK(a.seed() == b.seed());
}

TEST_CASE("counter discipline") {
    CounterRng r(5);
    CHECK(r.seed() == 5);
    CHECK(r.calls() == 0);
    CounterRng z(0);
    z.next_float();
    z.next_int(2);
    z.next_int(7);
    CHECK(z.seed() == 3);
    CHECK(z.calls() == 3);
}

TEST_CASE("ranges") {
    CounterRng r(11);
    for (int k = 0; k < 5000; ++k) {
        const double f = r.next_float();
        CHECK(f >= 0.0);
        CHECK(f < 1.0);
        CHECK(r.next_int(2) < 2);
    }
}

TEST_CASE("next_int rejects max below 2") {
    CounterRng r(0);
    CHECK_THROWS_AS(r.next_int(1), ContractError);
    CHECK_THROWS_AS(r.next_int(0), ContractError);
    CHECK(r.seed() == 0);
}

TEST_CASE("counter overflow is an error") {
    CounterRng r(UINT64_MAX - 1);
    r.next_float();
    CHECK_THROWS_AS(r.next_float(), ContractError);
}

TEST_CASE("shuffle") {
    SUBCASE("singleton consumes no draws") {
        CounterRng r(0);
        std::array<char, 1> one{'A'};
        shuffle(std::span<char>(one), r);
        CHECK(one[0] == 'A');
        CHECK(r.seed() == 0);
    }
    SUBCASE("eight elements from seed 0") {
        CounterRng r(0);
        std::vector<int> v(8);
        std::iota(v.begin(), v.end(), 0);
        shuffle(std::span<int>(v), r);
        CHECK(v == std::vector<int>{0, 7, 6, 2, 5, 3, 4, 1});
        CHECK(r.calls() == 7);
    }
}

TEST_CASE("uniformity smoke test") {
    std::array<int, 10> buckets{};
    CounterRng r(0);
    for (int k = 0; k < 10000; ++k) ++buckets[r.next_int(10)];
    for (int count : buckets) {
        CHECK(count >= 800);
        CHECK(count <= 1200);
    }
}
