#include "pp8/pptest.hpp"

#include <stdexcept>
#include <vector>

namespace pp8 {

bool is_pp_wan(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    const uint64_t q = F.q();
    if (f.a[8] == F.zero()) throw std::domain_error("is_pp_wan: degree must be 8");
    // floor(q - (q-1)/8) + 1 probes; they must be distinct inputs, i.e.
    // at most q-1 of them, which holds exactly when q >= 16.
    const uint64_t last = q - 1 - (q - 1) / 8;   // == floor(q - (q-1)/8) for q = 2^r >= 16
    if (last + 1 > q - 1) throw std::domain_error("is_pp_wan: field too small (need q >= 16)");

    std::vector<uint8_t> seen(q, 0);
    for (uint64_t j = 0; j <= last; ++j) {
        FieldElement v = eval(f, F.from_exp(static_cast<long long>(j)));
        if (seen[v.bits]) return false;
        seen[v.bits] = 1;
    }
    return true;
}

bool is_pp_brute(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    std::vector<uint8_t> seen(F.q(), 0);
    for (uint32_t b = 0; b < F.q(); ++b) {
        FieldElement v = eval(f, {static_cast<uint16_t>(b)});
        if (seen[v.bits]) return false;
        seen[v.bits] = 1;
    }
    return true;
}

}  // namespace pp8
