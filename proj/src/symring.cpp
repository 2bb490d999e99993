#include "pp8/symring.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp8 {

namespace {

uint32_t total_degree(const Monomial7& m) {
    uint32_t d = 0;
    for (int i = 0; i < 7; ++i) d += m[i];
    return d;
}

uint16_t checked_exp(uint32_t e) {
    if (e > 0xFFFF) throw std::overflow_error("SparsePoly7: exponent exceeds 16 bits");
    return static_cast<uint16_t>(e);
}

// Sort and cancel duplicate monomials in pairs (characteristic 2).
void normalize(std::vector<Monomial7>& terms) {
    std::sort(terms.begin(), terms.end(), monomial_before);
    std::vector<Monomial7> out;
    out.reserve(terms.size());
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

}  // namespace

bool monomial_before(const Monomial7& a, const Monomial7& b) {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = 6; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

SparsePoly7 SparsePoly7::var(int i) {
    if (i < 1 || i > 7) throw std::out_of_range("SparsePoly7::var: index must be in 1..7");
    Monomial7 m{};
    m[i - 1] = 1;
    return monomial(m);
}

SparsePoly7 sp_add(const SparsePoly7& p, const SparsePoly7& q) {
    // Merge of two sorted term lists; equal monomials cancel.
    SparsePoly7 out;
    out.terms.reserve(p.terms.size() + q.terms.size());
    size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        if (p.terms[i] == q.terms[j]) {
            ++i, ++j;
        } else if (monomial_before(p.terms[i], q.terms[j])) {
            out.terms.push_back(p.terms[i++]);
        } else {
            out.terms.push_back(q.terms[j++]);
        }
    }
    out.terms.insert(out.terms.end(), p.terms.begin() + i, p.terms.end());
    out.terms.insert(out.terms.end(), q.terms.begin() + j, q.terms.end());
    return out;
}

SparsePoly7 sp_mul(const SparsePoly7& p, const SparsePoly7& q) {
    std::vector<Monomial7> prod;
    prod.reserve(p.terms.size() * q.terms.size());
    for (const auto& a : p.terms)
        for (const auto& b : q.terms) {
            Monomial7 m;
            for (int i = 0; i < 7; ++i) m[i] = checked_exp(static_cast<uint32_t>(a[i]) + b[i]);
            prod.push_back(m);
        }
    normalize(prod);
    return {std::move(prod)};
}

SparsePoly7 sp_frob_pow(const SparsePoly7& p, int s) {
    if (s < 0) throw std::out_of_range("sp_frob_pow: s must be nonnegative");
    SparsePoly7 out = p;
    for (auto& m : out.terms)
        for (int i = 0; i < 7; ++i) m[i] = checked_exp(static_cast<uint32_t>(m[i]) << s);
    // scaling every exponent preserves the canonical order
    return out;
}

SparsePoly7 sp_pow(const SparsePoly7& p, unsigned long long n) {
    if (n == 0) return SparsePoly7::one();
    SparsePoly7 result = SparsePoly7::one();
    int s = 0;
    while (n) {
        if (n & 1) result = sp_mul(result, sp_frob_pow(p, s));
        n >>= 1;
        ++s;
    }
    return result;
}

SparsePoly7 sp_reduce_exponents(const SparsePoly7& p, uint32_t q) {
    if (q < 2) throw std::out_of_range("sp_reduce_exponents: q must be >= 2");
    std::vector<Monomial7> terms = p.terms;
    for (auto& m : terms)
        for (int i = 0; i < 7; ++i)
            if (m[i] >= q) m[i] = static_cast<uint16_t>((m[i] - 1) % (q - 1) + 1);
    normalize(terms);
    return {std::move(terms)};
}

std::string to_string(const SparsePoly7& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t t = 0; t < p.terms.size(); ++t) {
        if (t) out += " + ";
        const auto& m = p.terms[t];
        bool empty = true;
        for (int i = 0; i < 7; ++i) {
            if (!m[i]) continue;
            if (!empty) out += "*";
            out += "a" + std::to_string(i + 1);
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
            empty = false;
        }
        if (empty) out += "1";
    }
    return out;
}

FieldPoly FieldPolyDomain::constant(FieldElement a) const {
    FieldPoly p;
    if (a.bits) p.c = {a};
    return p;
}

FieldPoly FieldPolyDomain::variable() const {
    FieldPoly p;
    p.c = {ctx->zero(), ctx->one()};
    return p;
}

FieldPoly FieldPolyDomain::add(const Value& a, const Value& b) const {
    FieldPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = ctx->add(out.c[i], b.c[i]);
    out.trim();
    return out;
}

FieldPoly FieldPolyDomain::mul(const Value& a, const Value& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    size_t max_exp = fold_mod_q ? ctx->q() : a.c.size() + b.c.size() - 1;
    FieldPoly out;
    out.c.assign(max_exp, ctx->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i].bits) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (!b.c[j].bits) continue;
            size_t e = fold_exp(i + j);
            out.c[e] = ctx->add(out.c[e], ctx->mul(a.c[i], b.c[j]));
        }
    }
    out.trim();
    return out;
}

FieldPoly FieldPolyDomain::frob_pow(const Value& a, int s) const {
    // squaring s times; in characteristic 2 a square has no cross terms
    FieldPoly cur = a;
    for (int step = 0; step < s; ++step) {
        FieldPoly nxt;
        size_t max_exp = fold_mod_q ? ctx->q() : (cur.c.empty() ? 1 : 2 * cur.c.size() - 1);
        nxt.c.assign(max_exp, ctx->zero());
        for (size_t i = 0; i < cur.c.size(); ++i) {
            if (!cur.c[i].bits) continue;
            size_t e = fold_exp(2 * i);
            nxt.c[e] = ctx->add(nxt.c[e], ctx->mul(cur.c[i], cur.c[i]));
        }
        nxt.trim();
        cur = std::move(nxt);
    }
    return cur;
}

FieldPoly FieldPolyDomain::pow(const Value& a, unsigned long long n) const {
    if (n == 0) return one();
    FieldPoly result = one();
    int s = 0;
    while (n) {
        if (n & 1) result = mul(result, frob_pow(a, s));
        n >>= 1;
        ++s;
    }
    return result;
}

bool FieldPolyDomain::eq(const Value& a, const Value& b) const {
    FieldPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
}

FieldPoly poly_reduce_exponents(const FieldCtx& ctx, const FieldPoly& p, uint32_t q) {
    FieldPoly out;
    out.c.assign(std::min<size_t>(p.c.size(), q), ctx.zero());
    for (size_t j = 0; j < p.c.size(); ++j) {
        if (!p.c[j].bits) continue;
        size_t e = j < q ? j : (j - 1) % (q - 1) + 1;
        if (e >= out.c.size()) out.c.resize(e + 1, ctx.zero());
        out.c[e] = ctx.add(out.c[e], p.c[j]);
    }
    out.trim();
    return out;
}

FieldElement poly_eval(const FieldCtx& ctx, const FieldPoly& p, FieldElement x) {
    FieldElement acc = ctx.zero();
    for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i)
        acc = ctx.add(ctx.mul(acc, x), p.c[i]);
    return acc;
}

std::string to_string(const FieldCtx& ctx, const FieldPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i) {
        if (!p.c[i].bits) continue;
        if (!out.empty()) out += " + ";
        bool unit = p.c[i] == ctx.one();
        if (!unit || i == 0) out += to_string(ctx, p.c[i]);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace pp8
