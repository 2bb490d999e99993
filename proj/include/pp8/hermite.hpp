#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pp8/octic.hpp"
#include "pp8/symring.hpp"

namespace pp8 {

/// Bit positions of a positive integer, ascending: {s : floor(n/2^s) odd}.
struct BetaSet {
    std::vector<int> positions;

    friend bool operator==(const BetaSet& a, const BetaSet& b) { return a.positions == b.positions; }
};

BetaSet beta(long long n);

/// Parity of the multinomial coefficient (k; j1,...,jt). 1 iff the parts
/// sum to k and their bit sets partition the bit set of k.
int multinomial_parity(long long k, std::span<const long long> js);

/// For |beta(k)| = n and 0 <= u < 8^n, split the bits of k among eight
/// buckets: base-8 digit v of u routes bit s_v to bucket u_v. Bucket 0
/// belongs to the x^8 term, buckets 1..7 to a1..a7. The buckets always
/// sum to k, and u -> (j0..j7) enumerates every bit partition exactly once.
std::array<uint64_t, 8> digit_decomposition(long long k, uint64_t u);

/// Coefficients in the order HC takes them.
template <typename V>
struct HcCoeffs {
    V a7, a6, a5, a4, a3, a2, a1;
};

/// The Hermite sum for x^8 + a7 x^7 + ... + a1 x over GF(2^r):
///
///   HC(r, k, a7..a1) = sum over t >= 1 of [x^(t(q-1)) : f^k]
///
/// computed over any coefficient domain: the field itself, F_2[a1..a7],
/// or univariate polynomials over the field. Digits whose coefficient is
/// the domain zero are skipped; partial products are maintained
/// odometer-style so each step costs O(1) ring multiplications.
template <CoeffDomain D>
typename D::Value hc(const D& dom, int r, long long k, const HcCoeffs<typename D::Value>& coeffs) {
    using V = typename D::Value;
    if (k < 1) throw std::out_of_range("hc: k must be >= 1");
    if (r < 2 || r > 30) throw std::out_of_range("hc: r must be in 2..30");
    const uint64_t qm1 = (1ull << r) - 1;

    const std::array<const V*, 8> a = {nullptr,     &coeffs.a1, &coeffs.a2, &coeffs.a3,
                                       &coeffs.a4,  &coeffs.a5, &coeffs.a6, &coeffs.a7};
    std::vector<int> digits = {0};  // bucket 0 contributes the monic x^8 factor
    for (int d = 1; d <= 7; ++d)
        if (!dom.is_zero(*a[d])) digits.push_back(d);

    const auto bits = beta(k).positions;
    const int n = static_cast<int>(bits.size());
    const int nd = static_cast<int>(digits.size());

    // factor[v][i] = a_d^(2^s_v) for digit d = digits[i]; weight[v][i] is
    // the contribution of that digit to m = sum i*j_i + 8*j_0.
    std::vector<std::vector<V>> factor(n);
    std::vector<std::vector<uint64_t>> weight(n);
    for (int v = 0; v < n; ++v) {
        factor[v].reserve(nd);
        weight[v].reserve(nd);
        for (int d : digits) {
            factor[v].push_back(d == 0 ? dom.one() : dom.frob_pow(*a[d], bits[v]));
            weight[v].push_back(static_cast<uint64_t>(d == 0 ? 8 : d) << bits[v]);
        }
    }

    std::vector<int> idx(n, 0);
    std::vector<V> suffix(n + 1, dom.one());   // suffix[v] = prod of factors v..n-1
    std::vector<uint64_t> msum(n + 1, 0);      // matching partial m sums
    for (int v = n - 1; v >= 0; --v) {
        suffix[v] = dom.mul(factor[v][0], suffix[v + 1]);
        msum[v] = weight[v][0] + msum[v + 1];
    }

    V acc = dom.zero();
    for (;;) {
        if (msum[0] % qm1 == 0) acc = dom.add(acc, suffix[0]);
        int v = 0;
        while (v < n && idx[v] == nd - 1) idx[v++] = 0;
        if (v == n) break;
        ++idx[v];
        for (int w = v; w >= 0; --w) {
            suffix[w] = dom.mul(factor[w][idx[w]], suffix[w + 1]);
            msum[w] = weight[w][idx[w]] + msum[w + 1];
        }
    }
    return acc;
}

inline FieldElement hc(const FieldCtx& ctx, long long k, const HcCoeffs<FieldElement>& coeffs) {
    return hc(FieldDomain(ctx), ctx.r(), k, coeffs);
}

inline HcCoeffs<FieldElement> hc_coeffs(const Octic& f) {
    return {f.a[7], f.a[6], f.a[5], f.a[4], f.a[3], f.a[2], f.a[1]};
}

/// [x^m : f^k] computed by straight polynomial multiplication; the
/// independent cross-check for the Hermite sum.
FieldElement coeff_of_power_oracle(const Octic& f, long long k, long long m);

enum class HermiteMode {
    AllK,   // test every k in 1..q-2
    OddK,   // odd k only; equivalent in characteristic 2 since hc(2k) = hc(k)^2
};

/// Full Hermite criterion: f is a PP over F_q iff hc(r,k) = 0 for all
/// 1 <= k <= q-2 and hc(r,q-1) != 0. f must be normalized.
bool hermite_full_check(const Octic& f, HermiteMode mode = HermiteMode::AllK);

}  // namespace pp8
