#pragma once

#include <array>
#include <string>
#include <vector>

#include "pp8/field.hpp"

namespace pp8 {

/// Witness of a linear relation g(x) = s*f(tx+u) + v with s, t != 0.
struct LinearWitness {
    FieldElement s{1}, t{1}, u{}, v{};

    static LinearWitness identity() { return {}; }

    friend bool operator==(const LinearWitness& a, const LinearWitness& b) {
        return a.s == b.s && a.t == b.t && a.u == b.u && a.v == b.v;
    }
};

/// Applying `after` to the result of `before` equals applying the
/// returned witness directly.
LinearWitness compose(const FieldCtx& ctx, const LinearWitness& after, const LinearWitness& before);

/// A degree-8 polynomial sum a_i x^i over GF(2^r); a8 != 0. "Normalized"
/// means a8 = 1 and a0 = 0.
struct Octic {
    const FieldCtx* ctx = nullptr;
    std::array<FieldElement, 9> a{};  // a[i] = coefficient of x^i

    static Octic normalized(const FieldCtx& ctx,
                            FieldElement a7, FieldElement a6, FieldElement a5, FieldElement a4,
                            FieldElement a3, FieldElement a2, FieldElement a1);
    static Octic general(const FieldCtx& ctx, const std::array<FieldElement, 9>& coeffs);

    bool is_normalized() const { return a[8] == ctx->one() && a[0] == ctx->zero(); }

    friend bool operator==(const Octic& f, const Octic& g) {
        return f.ctx->same_field(*g.ctx) && f.a == g.a;
    }
};

FieldElement eval(const Octic& f, FieldElement x);

/// g(x) = s*f(tx+u) + v, expanded. Degree stays 8.
Octic linear_sub(const Octic& f, const LinearWitness& w);

/// Coefficient-wise a -> a^(2^j). Preserves PP-ness.
Octic frob_lift(const Octic& f, long long j);

/// counts[b] = #{x : f(x) has bit pattern b}. f is a PP iff all counts are 1.
std::vector<uint32_t> value_multiset(const Octic& f);

/// Display logs (a7,...,a1), code 0 = zero element.
std::array<uint32_t, 7> tuple_logs(const Octic& f);

/// "(a7, a6, a5, a4, a3, a2, a1)" in log codes.
std::string to_string(const Octic& f);

}  // namespace pp8
