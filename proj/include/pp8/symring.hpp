#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "pp8/field.hpp"

namespace pp8 {

/// Exponents of a1..a7; index i holds the exponent of a_{i+1}.
using Monomial7 = std::array<uint16_t, 7>;

/// Canonical term order: higher total degree first, ties broken by the
/// exponent sequence (j7,...,j1) read lexicographically ascending.
bool monomial_before(const Monomial7& a, const Monomial7& b);

/// A polynomial over F_2 in a1..a7, stored as the set of monomials with
/// coefficient 1. Addition is symmetric difference; the term vector is
/// kept sorted in canonical order with no duplicates.
struct SparsePoly7 {
    std::vector<Monomial7> terms;

    static SparsePoly7 zero() { return {}; }
    static SparsePoly7 one() { return monomial(Monomial7{}); }
    static SparsePoly7 var(int i);
    static SparsePoly7 monomial(const Monomial7& m) { return {{m}}; }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const SparsePoly7& p, const SparsePoly7& q) { return p.terms == q.terms; }
};

SparsePoly7 sp_add(const SparsePoly7& p, const SparsePoly7& q);
SparsePoly7 sp_mul(const SparsePoly7& p, const SparsePoly7& q);
SparsePoly7 sp_pow(const SparsePoly7& p, unsigned long long n);

/// p -> p^(2^s): every exponent scales by 2^s (char-2 Frobenius).
SparsePoly7 sp_frob_pow(const SparsePoly7& p, int s);

/// Replace every exponent j >= q by ((j-1) mod (q-1)) + 1 and cancel the
/// resulting duplicate monomials in pairs. The reduced polynomial induces
/// the same function on F_q points.
SparsePoly7 sp_reduce_exponents(const SparsePoly7& p, uint32_t q);

inline SparsePoly7 operator+(const SparsePoly7& p, const SparsePoly7& q) { return sp_add(p, q); }
inline SparsePoly7 operator*(const SparsePoly7& p, const SparsePoly7& q) { return sp_mul(p, q); }
inline SparsePoly7 pow(const SparsePoly7& p, unsigned long long n) { return sp_pow(p, n); }

/// e.g. "a5^3 + a3*a6^2 + a4^2*a7 + a1*a7^2"; "0" for the zero polynomial.
std::string to_string(const SparsePoly7& p);

/// Ring contract the Hermite-sum engine works over: a commutative ring
/// of characteristic 2 with an explicit Frobenius power.
template <typename D>
concept CoeffDomain = requires(const D& d, const typename D::Value& a, const typename D::Value& b) {
    typename D::Value;
    { d.zero() } -> std::same_as<typename D::Value>;
    { d.one() } -> std::same_as<typename D::Value>;
    { d.add(a, b) } -> std::same_as<typename D::Value>;
    { d.mul(a, b) } -> std::same_as<typename D::Value>;
    { d.pow(a, 1ULL) } -> std::same_as<typename D::Value>;
    { d.frob_pow(a, 1) } -> std::same_as<typename D::Value>;
    { d.is_zero(a) } -> std::convertible_to<bool>;
    { d.eq(a, b) } -> std::convertible_to<bool>;
};

/// GF(2^r) itself as a coefficient domain.
struct FieldDomain {
    using Value = FieldElement;
    const FieldCtx* ctx;

    explicit FieldDomain(const FieldCtx& c) : ctx(&c) {}

    Value zero() const { return ctx->zero(); }
    Value one() const { return ctx->one(); }
    Value add(Value a, Value b) const { return ctx->add(a, b); }
    Value mul(Value a, Value b) const { return ctx->mul(a, b); }
    Value pow(Value a, unsigned long long n) const { return ctx->pow(a, static_cast<long long>(n)); }
    Value frob_pow(Value a, int s) const { return ctx->frob(a, s); }
    bool is_zero(Value a) const { return a.bits == 0; }
    bool eq(Value a, Value b) const { return a == b; }
};

/// F_2[a1..a7] as a coefficient domain.
struct Sym7Domain {
    using Value = SparsePoly7;

    Value zero() const { return SparsePoly7::zero(); }
    Value one() const { return SparsePoly7::one(); }
    Value add(const Value& a, const Value& b) const { return sp_add(a, b); }
    Value mul(const Value& a, const Value& b) const { return sp_mul(a, b); }
    Value pow(const Value& a, unsigned long long n) const { return sp_pow(a, n); }
    Value frob_pow(const Value& a, int s) const { return sp_frob_pow(a, s); }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool eq(const Value& a, const Value& b) const { return a == b; }
};

/// Dense univariate polynomial over GF(2^r); c[i] is the coefficient of y^i.
struct FieldPoly {
    std::vector<FieldElement> c;

    bool is_zero() const {
        for (auto v : c)
            if (v.bits) return false;
        return true;
    }
    /// Degree, or -1 for the zero polynomial.
    int degree() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[i].bits) return i;
        return -1;
    }
    void trim() {
        while (!c.empty() && c.back().bits == 0) c.pop_back();
    }
};

/// GF(2^r)[y], optionally working modulo y^q - y (exponents folded into
/// [0, q-1] after every operation, so values stay functions on F_q).
struct FieldPolyDomain {
    using Value = FieldPoly;
    const FieldCtx* ctx;
    bool fold_mod_q;

    explicit FieldPolyDomain(const FieldCtx& c, bool fold = false) : ctx(&c), fold_mod_q(fold) {}

    Value zero() const { return {}; }
    Value one() const { return constant(ctx->one()); }
    Value constant(FieldElement a) const;
    Value variable() const;  // y

    Value add(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value pow(const Value& a, unsigned long long n) const;
    Value frob_pow(const Value& a, int s) const;
    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool eq(const Value& a, const Value& b) const;

    size_t fold_exp(size_t j) const {
        if (!fold_mod_q || j < ctx->q()) return j;
        return (j - 1) % (ctx->q() - 1) + 1;
    }
};

/// Fold exponents of an arbitrary poly into [0, q-1] via y^q = y.
FieldPoly poly_reduce_exponents(const FieldCtx& ctx, const FieldPoly& p, uint32_t q);

FieldElement poly_eval(const FieldCtx& ctx, const FieldPoly& p, FieldElement x);

std::string to_string(const FieldCtx& ctx, const FieldPoly& p, const std::string& var);

/// Substitute assign[i-1] for a_i; a ring homomorphism into any domain.
template <CoeffDomain D>
typename D::Value sp_eval(const SparsePoly7& p, const D& dom,
                          const std::array<typename D::Value, 7>& assign) {
    auto acc = dom.zero();
    for (const auto& m : p.terms) {
        auto term = dom.one();
        for (int i = 0; i < 7; ++i)
            if (m[i]) term = dom.mul(term, dom.pow(assign[i], m[i]));
        acc = dom.add(acc, term);
    }
    return acc;
}

}  // namespace pp8
