#include "pp8/octic.hpp"

#include <stdexcept>

namespace pp8 {

LinearWitness compose(const FieldCtx& ctx, const LinearWitness& after, const LinearWitness& before) {
    // g1 = s1 f(t1 x + u1) + v1, g2 = s2 g1(t2 x + u2) + v2
    //    = s1 s2 f(t1 t2 x + (t1 u2 + u1)) + (s2 v1 + v2)
    LinearWitness w;
    w.s = ctx.mul(before.s, after.s);
    w.t = ctx.mul(before.t, after.t);
    w.u = ctx.add(ctx.mul(before.t, after.u), before.u);
    w.v = ctx.add(ctx.mul(after.s, before.v), after.v);
    return w;
}

Octic Octic::normalized(const FieldCtx& ctx,
                        FieldElement a7, FieldElement a6, FieldElement a5, FieldElement a4,
                        FieldElement a3, FieldElement a2, FieldElement a1) {
    Octic f;
    f.ctx = &ctx;
    f.a = {ctx.zero(), a1, a2, a3, a4, a5, a6, a7, ctx.one()};
    return f;
}

Octic Octic::general(const FieldCtx& ctx, const std::array<FieldElement, 9>& coeffs) {
    if (coeffs[8] == ctx.zero()) throw std::domain_error("Octic: a8 must be nonzero");
    Octic f;
    f.ctx = &ctx;
    f.a = coeffs;
    return f;
}

FieldElement eval(const Octic& f, FieldElement x) {
    const FieldCtx& F = *f.ctx;
    FieldElement acc = f.a[8];
    for (int i = 7; i >= 0; --i) acc = F.add(F.mul(acc, x), f.a[i]);
    return acc;
}

Octic linear_sub(const Octic& f, const LinearWitness& w) {
    const FieldCtx& F = *f.ctx;
    if (w.s == F.zero() || w.t == F.zero())
        throw std::domain_error("linear_sub: witness needs s, t != 0");

    // Accumulate s * sum a_i (tx+u)^i + v by iterating powers of tx+u.
    std::array<FieldElement, 9> pw{};  // current (tx+u)^i
    pw[0] = F.one();
    std::array<FieldElement, 9> out{};
    out[0] = F.add(F.mul(f.a[0], w.s), w.v);
    for (int i = 1; i <= 8; ++i) {
        std::array<FieldElement, 9> nxt{};
        for (int d = 0; d < i; ++d) {
            FieldElement c = pw[d];
            if (c == F.zero()) continue;
            nxt[d + 1] = F.add(nxt[d + 1], F.mul(c, w.t));
            nxt[d] = F.add(nxt[d], F.mul(c, w.u));
        }
        pw = nxt;
        FieldElement sa = F.mul(f.a[i], w.s);
        if (sa == F.zero()) continue;
        for (int d = 0; d <= i; ++d) out[d] = F.add(out[d], F.mul(sa, pw[d]));
    }
    return Octic::general(F, out);
}

Octic frob_lift(const Octic& f, long long j) {
    const FieldCtx& F = *f.ctx;
    Octic g = f;
    for (auto& c : g.a) c = F.frob(c, j);
    return g;
}

std::vector<uint32_t> value_multiset(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    std::vector<uint32_t> counts(F.q(), 0);
    for (uint32_t b = 0; b < F.q(); ++b)
        counts[eval(f, {static_cast<uint16_t>(b)}).bits]++;
    return counts;
}

std::array<uint32_t, 7> tuple_logs(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    std::array<uint32_t, 7> out{};
    for (int i = 0; i < 7; ++i) out[i] = F.to_log(f.a[7 - i]).code;
    return out;
}

std::string to_string(const Octic& f) {
    auto logs = tuple_logs(f);
    std::string s = "(";
    for (int i = 0; i < 7; ++i) {
        if (i) s += ", ";
        s += std::to_string(logs[i]);
    }
    return s + ")";
}

}  // namespace pp8
