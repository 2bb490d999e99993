#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "pp8/hermite.hpp"
#include "pp8/pptest.hpp"
#include "test_util.hpp"

using namespace pp8;

namespace {

// exact multinomial coefficient; k <= 20 keeps this inside uint64
uint64_t multinomial_exact(long long k, const std::vector<long long>& js) {
    long long sum = 0;
    for (auto j : js) sum += j;
    if (sum != k) return 0;
    auto fact = [](long long n) {
        uint64_t f = 1;
        for (long long i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
        return f;
    };
    uint64_t denom = 1;
    for (auto j : js) denom *= fact(j);
    return fact(k) / denom;
}

void for_each_composition(long long k, int parts, std::vector<long long>& cur,
                          const std::function<void(const std::vector<long long>&)>& fn) {
    if (parts == 1) {
        cur.push_back(k);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (long long j = 0; j <= k; ++j) {
        cur.push_back(j);
        for_each_composition(k - j, parts - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

TEST_SUITE_BEGIN("hermite");

TEST_CASE("beta") {
    CHECK(beta(1).positions == std::vector<int>{0});
    CHECK(beta(27).positions == std::vector<int>{0, 1, 3, 4});
    for (int s = 0; s < 10; ++s) CHECK(beta(1ll << s).positions == std::vector<int>{s});
    CHECK_THROWS_AS(beta(0), std::out_of_range);
    CHECK_THROWS_AS(beta(-3), std::out_of_range);
}

TEST_CASE("multinomial parity examples") {
    auto par = [](long long k, std::vector<long long> js) {
        return multinomial_parity(k, std::span<const long long>(js));
    };
    CHECK(par(3, {1, 2}) == 1);
    CHECK(par(2, {1, 1}) == 0);
    CHECK(par(5, {4, 1}) == 1);
    CHECK(par(4, {1, 2}) == 0);  // parts do not sum to k
    CHECK(par(0, {}) == 1);
}

TEST_CASE("multinomial parity against exact arithmetic, k <= 12, 8 parts") {
    for (long long k = 0; k <= 12; ++k) {
        std::vector<long long> cur;
        for_each_composition(k, 8, cur, [&](const std::vector<long long>& js) {
            int expected = static_cast<int>(multinomial_exact(k, js) & 1);
            CHECK(multinomial_parity(k, std::span<const long long>(js)) == expected);
        });
    }
}

TEST_CASE("digit decomposition") {
    auto j0 = digit_decomposition(27, 0);
    CHECK(j0[0] == 27);
    for (int i = 1; i < 8; ++i) CHECK(j0[i] == 0);

    for (uint64_t i = 1; i <= 7; ++i) {
        auto j = digit_decomposition(16, i);  // single bit: digit picks the bucket
        CHECK(j[i] == 16);
    }

    // buckets always sum to k; every u yields a distinct decomposition
    for (long long k : {27, 63, 41}) {
        int n = static_cast<int>(beta(k).positions.size());
        std::map<std::array<uint64_t, 8>, int> seen;
        for (uint64_t u = 0; u < (1ull << (3 * n)); ++u) {
            auto j = digit_decomposition(k, u);
            uint64_t sum = 0;
            for (auto v : j) sum += v;
            CHECK(sum == static_cast<uint64_t>(k));
            seen[j]++;
        }
        CHECK(seen.size() == (1ull << (3 * n)));
    }
    CHECK_THROWS_AS(digit_decomposition(3, 64), std::out_of_range);
}

TEST_CASE("hc on the pure monomial: hc(4,15,(0,...,0)) = 1") {
    FieldCtx F = make_ctx(4);
    FieldElement z = F.zero();
    CHECK(hc(F, 15, {z, z, z, z, z, z, z}) == F.one());
}

TEST_CASE("symbolic hc matches the published polynomials") {
    Sym7Domain S;
    SparsePoly7 zero = SparsePoly7::zero(), one = SparsePoly7::one();
    SparsePoly7 a1 = SparsePoly7::var(1), a2 = SparsePoly7::var(2), a3 = SparsePoly7::var(3),
                a4 = SparsePoly7::var(4), a5 = SparsePoly7::var(5), a6 = SparsePoly7::var(6),
                a7 = SparsePoly7::var(7);

    CHECK(hc(S, 4, 3, {a7, a6, a5, a4, a3, a2, a1}) ==
          pow(a5, 3) + a3 * pow(a6, 2) + pow(a4, 2) * a7 + a1 * pow(a7, 2));
    CHECK(hc(S, 4, 5, {a7, a6, a5, a4, a3, a2, a1}) ==
          pow(a3, 5) + pow(a6, 5) + pow(a2, 4) * a7 + a2 * pow(a7, 4));
    CHECK(hc(S, 6, 9, {a7, a6, a5, a4, a3, a2, a1}) == pow(a7, 9));
    CHECK(hc(S, 5, 7, {zero, zero, one, zero, a3, a2, a1}) == pow(a3, 5) + pow(a3, 2) + a1);
}

TEST_CASE("power-coefficient oracle basics") {
    FieldCtx F = make_ctx(4);
    std::mt19937 rng(31);
    Octic f = testutil::random_normalized(F, rng);
    CHECK(coeff_of_power_oracle(f, 1, 8) == F.one());
    CHECK(coeff_of_power_oracle(f, 2, 16) == F.one());
    CHECK(coeff_of_power_oracle(f, 1, 3) == f.a[3]);
    CHECK(coeff_of_power_oracle(f, 1, 40) == F.zero());
}

TEST_CASE("hc equals the summed power coefficients at multiples of q-1") {
    FieldCtx F = make_ctx(4);
    std::mt19937 rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        Octic f = testutil::random_normalized(F, rng);
        for (long long k = 1; k <= 10; ++k) {
            FieldElement want = F.zero();
            for (long long m = F.q() - 1; m <= 8 * k; m += F.q() - 1)
                want = F.add(want, coeff_of_power_oracle(f, k, m));
            CHECK(hc(F, k, hc_coeffs(f)) == want);
        }
    }
}

TEST_CASE("symbolic hc specializes to concrete hc") {
    FieldCtx F = make_ctx(4);
    FieldDomain D(F);
    Sym7Domain S;
    std::array<SparsePoly7, 7> vars;
    for (int i = 0; i < 7; ++i) vars[i] = SparsePoly7::var(i + 1);
    std::mt19937 rng(33);
    for (long long k : {3, 5, 7, 9, 15}) {
        SparsePoly7 sym = hc(S, 4, k, {vars[6], vars[5], vars[4], vars[3], vars[2], vars[1], vars[0]});
        for (int trial = 0; trial < 10; ++trial) {
            std::array<FieldElement, 7> assign{};
            for (auto& a : assign) a = testutil::random_elem(F, rng);
            HcCoeffs<FieldElement> c{assign[6], assign[5], assign[4], assign[3],
                                     assign[2], assign[1], assign[0]};
            CHECK(sp_eval(sym, D, assign) == hc(F, k, c));
        }
    }
}

TEST_CASE("full Hermite criterion") {
    FieldCtx F = make_ctx(4);
    FieldElement z = F.zero();
    CHECK(hermite_full_check(Octic::normalized(F, z, z, z, z, z, z, z)));
    CHECK_FALSE(hermite_full_check(Octic::normalized(F, z, F.one(), z, z, z, z, z)));

    std::mt19937 rng(34);
    for (int trial = 0; trial < 120; ++trial) {
        Octic f = testutil::random_normalized(F, rng);
        bool brute = is_pp_brute(f);
        CHECK(hermite_full_check(f) == brute);
        CHECK(hermite_full_check(f, HermiteMode::OddK) == brute);
    }
}

TEST_CASE("hc argument guards") {
    FieldCtx F = make_ctx(4);
    FieldElement z = F.zero();
    CHECK_THROWS_AS(hc(F, 0, {z, z, z, z, z, z, z}), std::out_of_range);
}

TEST_SUITE_END();
