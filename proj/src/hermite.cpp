#include "pp8/hermite.hpp"

namespace pp8 {

BetaSet beta(long long n) {
    if (n <= 0) throw std::out_of_range("beta: n must be positive");
    BetaSet b;
    for (int s = 0; (n >> s) != 0; ++s)
        if ((n >> s) & 1) b.positions.push_back(s);
    return b;
}

int multinomial_parity(long long k, std::span<const long long> js) {
    if (k < 0) throw std::out_of_range("multinomial_parity: k must be >= 0");
    uint64_t acc = 0;
    for (long long j : js) {
        if (j < 0) throw std::out_of_range("multinomial_parity: parts must be >= 0");
        if (acc & static_cast<uint64_t>(j)) return 0;  // a carry makes it even
        acc |= static_cast<uint64_t>(j);
    }
    return acc == static_cast<uint64_t>(k) ? 1 : 0;
}

std::array<uint64_t, 8> digit_decomposition(long long k, uint64_t u) {
    const auto bits = beta(k).positions;
    const int n = static_cast<int>(bits.size());
    if (n > 20 || u >= (1ull << (3 * n)))
        throw std::out_of_range("digit_decomposition: u out of range");
    std::array<uint64_t, 8> j{};
    for (int v = 0; v < n; ++v) {
        unsigned digit = (u >> (3 * v)) & 7u;
        j[digit] += 1ull << bits[v];
    }
    return j;
}

FieldElement coeff_of_power_oracle(const Octic& f, long long k, long long m) {
    const FieldCtx& F = *f.ctx;
    if (k < 1) throw std::out_of_range("coeff_of_power_oracle: k must be >= 1");
    std::vector<FieldElement> acc = {F.one()};
    for (long long step = 0; step < k; ++step) {
        std::vector<FieldElement> nxt(acc.size() + 8, F.zero());
        for (size_t i = 0; i < acc.size(); ++i) {
            if (!acc[i].bits) continue;
            for (int d = 0; d <= 8; ++d) {
                if (!f.a[d].bits) continue;
                nxt[i + d] = F.add(nxt[i + d], F.mul(acc[i], f.a[d]));
            }
        }
        acc = std::move(nxt);
    }
    if (m < 0 || static_cast<size_t>(m) >= acc.size()) return F.zero();
    return acc[m];
}

bool hermite_full_check(const Octic& f, HermiteMode mode) {
    const FieldCtx& F = *f.ctx;
    if (!f.is_normalized()) throw std::domain_error("hermite_full_check: f must be normalized");
    const long long q = F.q();
    const auto coeffs = hc_coeffs(f);
    const long long step = mode == HermiteMode::OddK ? 2 : 1;
    for (long long k = 1; k <= q - 2; k += step) {
        if (8 * k < q - 1) continue;  // empty sum
        if (hc(F, k, coeffs).bits) return false;
    }
    return hc(F, q - 1, coeffs).bits != 0;
}

}  // namespace pp8
