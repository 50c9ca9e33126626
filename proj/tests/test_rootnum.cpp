#include "taurank/rootnum.hpp"

#include <doctest.h>

#include <random>

using namespace taurank;

namespace {

bool is_power_of(Integer n, const Integer& p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

TEST_CASE("tower context") {
    const auto ctx = make_tower_context(7);
    CHECK(ctx.phi_p == 6);
    CHECK_THROWS_AS(make_tower_context(3), DomainError);
    CHECK_THROWS_AS(make_tower_context(9), DomainError);
}

TEST_CASE("local root numbers") {
    LocalData ld;
    CHECK(local_root_number(ld, true).value == -1);
    ld.q = 5;
    CHECK(local_root_number(ld, false).value == 1);
    ld.reduction = ReductionType::SplitMultiplicative;
    CHECK(local_root_number(ld, false).value == -1);
    ld.reduction = ReductionType::NonsplitMultiplicative;
    CHECK(local_root_number(ld, false).value == 1);
}

TEST_CASE("global root number over K") {
    CHECK(global_root_number_over_K(6, 2).value == -1);
    CHECK(global_root_number_over_K(4, 0).value == 1);
    CHECK(global_root_number_over_K(6, 3).value == 1);
    CHECK_THROWS_AS(global_root_number_over_K(5, 1), DomainError);
}

TEST_CASE("root number is the product of local signs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> half(1, 40), s(0, 20);
    for (int i = 0; i < 500; ++i) {
        const Integer deg = 2 * half(rng);
        const int splits = s(rng);
        // deg/2 complex places, each contributing -1, and `splits` split places
        int prod = 1;
        for (Integer k = 0; k < deg / 2; ++k) prod = -prod;
        for (int k = 0; k < splits; ++k) prod = -prod;
        REQUIRE(global_root_number_over_K(deg, splits).value == prod);
    }
}

TEST_CASE("primes above q in the cyclotomic tower") {
    const auto a = primes_above_in_cyclotomic(2, 7);
    CHECK(a.count_in_Qmu_p == 2);
    const auto b = primes_above_in_cyclotomic(11, 5);
    CHECK(b.count_in_Qmu_p == 4);
    CHECK(b.stable_count_in_cyc == 4);
    const auto c = primes_above_in_cyclotomic(29, 7);
    CHECK(c.count_in_Qmu_p == 6);
    CHECK_THROWS_AS(primes_above_in_cyclotomic(7, 7), DomainError);
    // 2 has order 3 mod 7 and 21 mod 49
    CHECK(primes_above_in_cyclotomic(2, 7).stable_count_in_cyc == 2);
}

TEST_CASE("stable count over count in Q(mu_p) is a power of p") {
    for (Integer p : {5, 7, 11, 13}) {
        for (Integer q = 2; q < 300; q = next_prime(q)) {
            if (q == p) continue;
            const auto sc = primes_above_in_cyclotomic(q, p);
            REQUIRE(sc.stable_count_in_cyc % sc.count_in_Qmu_p == 0);
            REQUIRE(is_power_of(sc.stable_count_in_cyc / sc.count_in_Qmu_p, p));
            REQUIRE((p - 1) % sc.count_in_Qmu_p == 0);
        }
    }
}

TEST_CASE("s over Q(mu_p)") {
    // 11a3: split multiplicative only at 11
    const auto E11 = make_curve(0, -1, 1, 0, 0);
    CHECK(s_over_Qmu_p(E11, 7) == primes_above_in_cyclotomic(11, 7).count_in_Qmu_p);
    // 26b1: multiplicative at 2 and 13
    const auto E26 = make_curve(1, -1, 1, -3, 3);
    std::vector<SContribution> terms;
    const Integer s = s_over_Qmu_p(local_profile(E26), 7, &terms);
    CHECK(s == 2 + 6 / multiplicative_order(13, 7));
    CHECK(terms.size() == 2);
    // integral j, no multiplicative primes
    CHECK(s_over_Qmu_p(make_curve(1, -1, 0, 3166, -59359), 7) == 0);
}

TEST_CASE("parity transport") {
    CHECK(s_parity_transport(2) == Parity::Even);
    CHECK(s_parity_transport(3) == Parity::Odd);
    CHECK(s_parity_transport(4) == Parity::Even);
    CHECK(primes_above_in_cyclotomic(11, 5).stable_count_in_cyc == 4);
}
