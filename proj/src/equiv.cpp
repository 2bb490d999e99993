#include "pp8/equiv.hpp"

#include <numeric>
#include <stdexcept>

namespace pp8 {

namespace {

// det of an r x r matrix over GF(2^r), Gaussian elimination with
// first-nonzero pivoting; exact arithmetic.
FieldElement determinant(const FieldCtx& F, std::vector<std::vector<FieldElement>> m) {
    const size_t n = m.size();
    FieldElement det = F.one();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == F.zero()) ++pivot;
        if (pivot == n) return F.zero();
        if (pivot != col) std::swap(m[pivot], m[col]);  // swap negates; -1 = 1 here
        det = F.mul(det, m[col][col]);
        FieldElement inv_p = F.inv(m[col][col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == F.zero()) continue;
            FieldElement factor = F.mul(m[row][col], inv_p);
            for (size_t cc = col; cc < n; ++cc)
                m[row][cc] = F.add(m[row][cc], F.mul(factor, m[col][cc]));
        }
    }
    return det;
}

// image of u -> u^2 + a*u as a bitset over element bit patterns
std::vector<uint8_t> artin_schreier_image(const FieldCtx& F, FieldElement a) {
    std::vector<uint8_t> img(F.q(), 0);
    for (uint32_t b = 0; b < F.q(); ++b) {
        FieldElement u{static_cast<uint16_t>(b)};
        img[F.add(F.mul(u, u), F.mul(a, u)).bits] = 1;
    }
    return img;
}

LinearWitness shift_witness(const Octic& f, FieldElement u) {
    return {f.ctx->one(), f.ctx->one(), u, eval(f, u)};
}

}  // namespace

FieldElement omega(const FieldCtx& ctx, FieldElement a) {
    if (a == ctx.zero()) throw std::domain_error("omega: a must be nonzero (u -> u^2 is onto)");
    auto img = artin_schreier_image(ctx, a);
    for (uint32_t code = 1; code <= ctx.q() - 1; ++code) {
        FieldElement w = ctx.from_log({code});
        if (!img[w.bits]) return w;
    }
    throw std::logic_error("omega: image covers the whole field");
}

bool is_exceptional_deg8(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    const int r = F.r();
    if (r <= 3) throw std::domain_error("is_exceptional_deg8: requires r > 3");
    if (f.a[7] != F.zero() || f.a[6] != F.zero() || f.a[5] != F.zero() || f.a[3] != F.zero())
        return false;

    std::vector<FieldElement> c(r, F.zero());
    c[0] = f.a[1];
    c[1] = f.a[2];
    c[2] = f.a[4];
    c[3] = f.a[8];
    std::vector<std::vector<FieldElement>> m(r, std::vector<FieldElement>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[i][j] = F.frob(c[((i - j) % r + r) % r], j);
    return determinant(F, std::move(m)) != F.zero();
}

bool satisfies_r1_r2_r3(const Octic& f) {
    const FieldCtx& F = *f.ctx;
    if (!f.is_normalized()) return false;
    FieldElement a7 = f.a[7], a6 = f.a[6], a5 = f.a[5], a4 = f.a[4];
    bool shape10 = a7 == F.one() && a6 == F.zero();
    bool shape01 = a7 == F.zero() && a6 == F.one();
    bool shape00 = a7 == F.zero() && a6 == F.zero();
    if (!shape10 && !shape01 && !shape00) return false;
    if (shape01) {
        if (a5 == F.zero()) return a4 == F.zero();
        return a4 == F.zero() || a4 == omega(F, a5);
    }
    if (shape00 && a5 != F.zero()) {
        if (a4 != F.zero()) return false;
        uint32_t lam = std::gcd(3u, F.q() - 1);
        for (uint32_t i = 0; i < lam; ++i)
            if (a5 == F.from_exp(i)) return true;
        return false;
    }
    return true;
}

NormalForm normalize(const Octic& h) {
    const FieldCtx& F = *h.ctx;
    if (h.a[8] == F.zero()) throw std::domain_error("normalize: degree must be 8");

    Octic f = h;
    LinearWitness total = LinearWitness::identity();
    auto apply = [&](const LinearWitness& w) {
        f = linear_sub(f, w);
        total = compose(F, w, total);
    };

    // monic with zero constant term
    if (f.a[8] != F.one() || f.a[0] != F.zero()) {
        FieldElement s = F.inv(f.a[8]);
        apply({s, F.one(), F.zero(), F.mul(s, f.a[0])});
    }

    // (R1)
    if (f.a[7] != F.zero()) {
        FieldElement c7 = f.a[7];
        FieldElement t = c7;
        FieldElement u = F.mul(F.inv(c7), f.a[6]);
        FieldElement s = F.pow(c7, -8);
        apply({s, t, u, F.mul(s, eval(f, u))});
    } else if (f.a[6] != F.zero()) {
        FieldElement c6 = f.a[6];
        apply({F.pow(c6, -4), F.sqrt(c6), F.zero(), F.zero()});
    }

    if (f.a[7] == F.zero() && f.a[6] == F.one()) {
        // (R2)
        FieldElement a5 = f.a[5], a4 = f.a[4];
        if (a5 == F.zero()) {
            if (a4 != F.zero()) apply(shift_witness(f, F.sqrt(a4)));
        } else {
            auto img = artin_schreier_image(F, a5);
            FieldElement target = img[a4.bits] ? a4 : F.add(a4, omega(F, a5));
            for (uint32_t b = 0; b < F.q(); ++b) {
                FieldElement u{static_cast<uint16_t>(b)};
                if (F.add(F.mul(u, u), F.mul(a5, u)) == target) {
                    if (u != F.zero()) apply(shift_witness(f, u));
                    break;
                }
            }
        }
    } else if (f.a[7] == F.zero() && f.a[6] == F.zero() && f.a[5] != F.zero()) {
        // (R3)
        if (f.a[4] != F.zero()) apply(shift_witness(f, F.mul(F.inv(f.a[5]), f.a[4])));
        uint32_t l = F.raw_log(f.a[5]);
        uint32_t qm1 = F.q() - 1;
        FieldElement t;
        if (qm1 % 3 == 0) {
            t = F.from_exp((l - l % 3) / 3);
        } else {
            // cubing is a bijection; t = a5^(1/3)
            uint64_t inv3 = 1;
            while ((3 * inv3) % qm1 != 1) ++inv3;
            t = F.from_exp(static_cast<long long>(l) * static_cast<long long>(inv3));
        }
        if (t != F.one()) apply({F.pow(t, -8), t, F.zero(), F.zero()});
    }

    return {f, total};
}

Octic shift_partner(const Octic& f) {
    return linear_sub(f, shift_witness(f, f.a[5]));
}

std::optional<LinearWitness> linearly_related(const NormalForm& nf, const NormalForm& ng) {
    const FieldCtx& F = *nf.octic.ctx;
    const Octic& f = nf.octic;
    const Octic& g = ng.octic;
    if (!F.same_field(*g.ctx)) throw std::invalid_argument("linearly_related: different fields");
    if (!satisfies_r1_r2_r3(f) || !satisfies_r1_r2_r3(g))
        throw std::domain_error("linearly_related: inputs must satisfy (R1)-(R3)");
    for (const Octic* p : {&f, &g})
        if (p->a[7] == F.zero() && p->a[6] == F.zero() && p->a[5] == F.zero())
            throw std::domain_error("linearly_related: (a7,a6,a5) = (0,0,0) not covered");

    if (f == g) return LinearWitness::identity();

    // (ii)
    if (f.a[7] == F.zero() && f.a[6] == F.one()) {
        FieldElement a5 = f.a[5];
        FieldElement gap = F.add(f.a[3], F.pow(a5, 3));
        if (a5 != F.zero() && gap != F.zero()) {
            LinearWitness w = shift_witness(f, a5);
            if (linear_sub(f, w) == g) return w;
        }
    }

    // (iii)
    if (F.r() % 2 == 0 && f.a[7] == F.zero() && f.a[6] == F.zero() &&
        f.a[4] == F.zero() && f.a[5] != F.zero()) {
        uint32_t third = (F.q() - 1) / 3;
        for (uint32_t mult : {third, 2 * third}) {
            FieldElement t = F.from_exp(mult);
            LinearWitness w{F.pow(t, -8), t, F.zero(), F.zero()};
            if (linear_sub(f, w) == g) return w;
        }
    }

    return std::nullopt;
}

std::optional<LinearWitness> related_witness_brute(const Octic& f, const Octic& g) {
    const FieldCtx& F = *f.ctx;
    if (!F.same_field(*g.ctx)) throw std::invalid_argument("related_witness_brute: different fields");
    for (uint32_t lt = 0; lt < F.q() - 1; ++lt) {
        FieldElement t = F.from_exp(lt);
        // s is forced by matching the x^8 coefficients, v by matching g(0)
        FieldElement s = F.mul(g.a[8], F.inv(F.mul(F.pow(t, 8), f.a[8])));
        for (uint32_t bu = 0; bu < F.q(); ++bu) {
            FieldElement u{static_cast<uint16_t>(bu)};
            LinearWitness w{s, t, u, F.zero()};
            w.v = F.add(g.a[0], F.mul(s, eval(f, u)));
            if (linear_sub(f, w) == g) return w;
        }
    }
    return std::nullopt;
}

std::vector<FieldElement> gamma(const FieldCtx& ctx) {
    const uint32_t qm1 = ctx.q() - 1;
    std::vector<uint8_t> seen(qm1, 0);
    std::vector<FieldElement> reps;
    for (uint32_t code = 1; code <= qm1; ++code) {
        uint32_t l = code % qm1;
        if (seen[l]) continue;
        reps.push_back(ctx.from_exp(l));
        for (uint32_t cur = l; !seen[cur]; cur = (2 * cur) % qm1) seen[cur] = 1;
    }
    return reps;
}

FrobeniusReduction frobenius_reduce(const NormalForm& nf) {
    const FieldCtx& F = *nf.octic.ctx;
    const Octic& f = nf.octic;
    if (f.a[7] != F.zero() || f.a[6] != F.one() || f.a[5] == F.zero())
        throw std::domain_error("frobenius_reduce: needs shape (0,1) with a5 != 0");

    const uint32_t qm1 = F.q() - 1;
    const uint32_t l = F.raw_log(f.a[5]);
    // candidate rep for twist j is a5^(2^(r-j)); pick the smallest log code
    uint32_t best_code = 0;
    int best_j = 0;
    for (int j = 0; j < F.r(); ++j) {
        uint32_t lj = l;
        for (int step = 0; step < F.r() - j; ++step) lj = (2 * lj) % qm1;
        uint32_t code = (lj == 0) ? qm1 : lj;
        if (j == 0 || code < best_code) {
            best_code = code;
            best_j = j;
        }
    }
    Octic lifted = frob_lift(f, F.r() - best_j);
    NormalForm renorm = normalize(lifted);
    return {renorm, best_j};
}

}  // namespace pp8
