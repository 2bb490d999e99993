#include "pp8/search.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pp8/hermite.hpp"
#include "pp8/pptest.hpp"

namespace pp8 {

namespace {

using P = SparsePoly7;

P v1() { return P::var(1); }
P v2() { return P::var(2); }
P v3() { return P::var(3); }
P v4() { return P::var(4); }
P v5() { return P::var(5); }
P v6() { return P::var(6); }
P v7() { return P::var(7); }

// Symbolic re-derivation of a pruning constraint; a transcription error
// fails loudly instead of shrinking the search space.
void require_identity(const std::string& what, const P& got, const P& want) {
    if (got == want) return;
    throw std::logic_error("constraint check failed: " + what + "\n  computed: " + to_string(got) +
                           "\n  expected: " + to_string(want));
}

P hc_sym(int r, long long k, const HcCoeffs<P>& coeffs) {
    return hc(Sym7Domain{}, r, k, coeffs);
}

template <typename Fn>
std::vector<Octic> parallel_collect(int n, int threads, Fn fn) {
    int t = std::max(1, std::min(threads, n));
    if (t == 1) {
        std::vector<Octic> all;
        for (int i = 0; i < n; ++i) fn(i, all);
        return all;
    }
    std::vector<std::future<std::vector<Octic>>> futs;
    for (int w = 0; w < t; ++w) {
        futs.push_back(std::async(std::launch::async, [=]() {
            std::vector<Octic> local;
            for (int i = w; i < n; i += t) fn(i, local);
            return local;
        }));
    }
    std::vector<Octic> all;
    for (auto& f : futs) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::vector<ClassRecord> finalize_records(const FieldCtx& F, std::vector<Octic> found) {
    std::sort(found.begin(), found.end(),
              [](const Octic& a, const Octic& b) { return tuple_logs(a) < tuple_logs(b); });

    std::set<uint32_t> gamma_codes;
    for (FieldElement g : gamma(F)) gamma_codes.insert(F.to_log(g).code);

    std::vector<ClassRecord> records;
    records.reserve(found.size());
    for (const auto& f : found)
        records.push_back({f, gamma_codes.count(F.to_log(f.a[5]).code) > 0, std::nullopt});

    // case-(ii) partners: g(x) = f(x+a5) - f(a5) when (a7,a6) = (0,1)
    // and a5(a3+a5^3) != 0; the output list must be closed under the map
    for (size_t i = 0; i < records.size(); ++i) {
        const Octic& f = records[i].octic;
        if (f.a[7] != F.zero() || f.a[6] != F.one()) continue;
        if (f.a[5] == F.zero() || F.add(f.a[3], F.pow(f.a[5], 3)) == F.zero()) continue;
        Octic partner = shift_partner(f);
        auto key = tuple_logs(partner);
        auto it = std::lower_bound(records.begin(), records.end(), key,
                                   [](const ClassRecord& r, const std::array<uint32_t, 7>& k) {
                                       return tuple_logs(r.octic) < k;
                                   });
        if (it == records.end() || !(it->octic == partner))
            throw std::logic_error("search output not closed under the case-(ii) involution");
        records[i].pair_link = static_cast<size_t>(it - records.begin());
    }
    return records;
}

}  // namespace

std::vector<ClassRecord> classify_r4(const FieldCtx& F, const SearchOptions& opt) {
    if (F.r() != 4) throw std::invalid_argument("classify_r4: context must have r = 4");
    const P zero = P::zero(), one = P::one();
    require_identity("hc(4,3) in case (1,0) forces a1 = a5^3 + a4^2",
                     hc_sym(4, 3, {one, zero, v5(), v4(), v3(), v2(), v1()}),
                     pow(v5(), 3) + pow(v4(), 2) + v1());
    require_identity("hc(4,5) in case (1,0) forces a3^5 = a2^4 + a2",
                     hc_sym(4, 5, {one, zero, v5(), v4(), v3(), v2(), v1()}),
                     pow(v3(), 5) + pow(v2(), 4) + v2());
    require_identity("hc(4,3) in case (0,1) forces a3 = a5^3",
                     hc_sym(4, 3, {zero, one, v5(), v4(), v3(), v2(), v1()}),
                     pow(v5(), 3) + v3());
    require_identity("hc(4,5) in case (0,1) forces a3^5 = 1 (so a5 != 0)",
                     hc_sym(4, 5, {zero, one, v5(), v4(), v3(), v2(), v1()}),
                     pow(v3(), 5) + one);
    require_identity("hc(4,3) in case (0,0) forces a5 = 0",
                     hc_sym(4, 3, {zero, zero, v5(), v4(), v3(), v2(), v1()}), pow(v5(), 3));
    require_identity("hc(4,5) in case (0,0) forces a3 = 0",
                     hc_sym(4, 5, {zero, zero, v5(), v4(), v3(), v2(), v1()}), pow(v3(), 5));
    // so non-exceptional PPs need (a7,a6) != (0,0)

    const auto elems = F.elements();
    const uint32_t q = F.q();

    // case (1,0): provably empty, kept as a cross-check of the constraints
    auto case10 = parallel_collect(static_cast<int>(q), opt.threads, [&](int i5, std::vector<Octic>& out) {
        FieldElement a5 = elems[i5];
        for (FieldElement a4 : elems)
            for (FieldElement a3 : elems)
                for (FieldElement a2 : elems) {
                    if (F.pow(a3, 5) != F.add(F.pow(a2, 4), a2)) continue;
                    FieldElement a1 = F.add(F.pow(a5, 3), F.mul(a4, a4));
                    Octic f = Octic::normalized(F, F.one(), F.zero(), a5, a4, a3, a2, a1);
                    if (is_pp_wan(f)) out.push_back(f);
                }
    });

    auto case01 = parallel_collect(static_cast<int>(q - 1), opt.threads, [&](int i, std::vector<Octic>& out) {
        FieldElement a5 = F.from_exp(i + 1);  // nonzero
        FieldElement a3 = F.pow(a5, 3);
        for (FieldElement a4 : {F.zero(), omega(F, a5)})
            for (FieldElement a2 : elems)
                for (FieldElement a1 : elems) {
                    Octic f = Octic::normalized(F, F.zero(), F.one(), a5, a4, a3, a2, a1);
                    if (is_pp_wan(f)) out.push_back(f);
                }
    });

    case10.insert(case10.end(), case01.begin(), case01.end());
    return finalize_records(F, std::move(case10));
}

std::vector<ClassRecord> classify_r5(const FieldCtx& F, const SearchOptions& opt) {
    if (F.r() != 5) throw std::invalid_argument("classify_r5: context must have r = 5");
    const P zero = P::zero(), one = P::one();
    require_identity("hc(5,7) in case (0,0,0) forces a3 = 0",
                     hc_sym(5, 7, {zero, zero, zero, v4(), v3(), v2(), v1()}), pow(v3(), 5));
    require_identity("hc(5,7) with a5 = 1, a4 = 0 forces a1 = a3^5 + a3^2",
                     hc_sym(5, 7, {zero, zero, one, zero, v3(), v2(), v1()}),
                     pow(v3(), 5) + pow(v3(), 2) + v1());
    require_identity("hc(5,5) in case (1,0) forces a3 = 0",
                     hc_sym(5, 5, {one, zero, v5(), v4(), v3(), v2(), v1()}), v3());

    const auto elems = F.elements();
    const uint32_t q = F.q();
    std::vector<Octic> found;

    // a7 = a6 = a4 = 0, a5 = 1 (R3, r odd)
    for (FieldElement a3 : elems) {
        FieldElement a1 = F.add(F.pow(a3, 5), F.mul(a3, a3));
        for (FieldElement a2 : elems) {
            Octic f = Octic::normalized(F, F.zero(), F.zero(), F.one(), F.zero(), a3, a2, a1);
            if (is_pp_wan(f)) found.push_back(f);
        }
    }

    // (a7,a6) = (1,0), a3 = 0
    auto case10 = parallel_collect(static_cast<int>(q), opt.threads, [&](int i5, std::vector<Octic>& out) {
        FieldElement a5 = elems[i5];
        for (FieldElement a4 : elems)
            for (FieldElement a2 : elems)
                for (FieldElement a1 : elems) {
                    Octic f = Octic::normalized(F, F.one(), F.zero(), a5, a4, F.zero(), a2, a1);
                    if (is_pp_wan(f)) out.push_back(f);
                }
    });

    // (a7,a6) = (0,1)
    auto case01 = parallel_collect(static_cast<int>(q), opt.threads, [&](int i5, std::vector<Octic>& out) {
        FieldElement a5 = elems[i5];
        std::vector<FieldElement> a4s = {F.zero()};
        if (a5 != F.zero()) a4s.push_back(omega(F, a5));
        for (FieldElement a4 : a4s)
            for (FieldElement a3 : elems)
                for (FieldElement a2 : elems)
                    for (FieldElement a1 : elems) {
                        Octic f = Octic::normalized(F, F.zero(), F.one(), a5, a4, a3, a2, a1);
                        if (is_pp_wan(f)) out.push_back(f);
                    }
    });

    found.insert(found.end(), case10.begin(), case10.end());
    found.insert(found.end(), case01.begin(), case01.end());
    return finalize_records(F, std::move(found));
}

std::vector<ClassRecord> classify_r6(const FieldCtx& F, const SearchOptions& opt) {
    if (F.r() != 6) throw std::invalid_argument("classify_r6: context must have r = 6");
    const P zero = P::zero(), one = P::one();
    require_identity("hc(6,9) forces a7 = 0",
                     hc_sym(6, 9, {v7(), v6(), v5(), v4(), v3(), v2(), v1()}), pow(v7(), 9));
    require_identity("hc(6,11) with a7 = 0 gives a6^8 (a5^3 + a3 a6^2)",
                     hc_sym(6, 11, {zero, v6(), v5(), v4(), v3(), v2(), v1()}),
                     pow(v5(), 3) * pow(v6(), 8) + v3() * pow(v6(), 10));
    require_identity("hc(6,21) with a7 = 0 gives a3^21 + a6^21",
                     hc_sym(6, 21, {zero, v6(), v5(), v4(), v3(), v2(), v1()}),
                     pow(v3(), 21) + pow(v6(), 21));

    const auto elems = F.elements();
    const uint32_t q = F.q();

    // a7 = a6 = a3 = a4 = 0, a5 in {1, e, e^2} (R3, r even)
    std::vector<Octic> found;
    for (FieldElement a5 : {F.one(), F.generator(), F.from_exp(2)})
        for (FieldElement a2 : elems)
            for (FieldElement a1 : elems) {
                Octic f = Octic::normalized(F, F.zero(), F.zero(), a5, F.zero(), F.zero(), a2, a1);
                if (is_pp_wan(f)) found.push_back(f);
            }

    // (a7,a6) = (0,1): a3 = a5^3 != 0
    auto case01 = parallel_collect(static_cast<int>(q - 1), opt.threads, [&](int i, std::vector<Octic>& out) {
        FieldElement a5 = F.from_exp(i + 1);
        FieldElement a3 = F.pow(a5, 3);
        for (FieldElement a4 : {F.zero(), omega(F, a5)})
            for (FieldElement a2 : elems)
                for (FieldElement a1 : elems) {
                    Octic f = Octic::normalized(F, F.zero(), F.one(), a5, a4, a3, a2, a1);
                    if (is_pp_wan(f)) out.push_back(f);
                }
    });

    found.insert(found.end(), case01.begin(), case01.end());
    return finalize_records(F, std::move(found));
}

namespace {

// Runs proof steps in order; the first failure is recorded and every
// later step is skipped, leaving the failing identity in the report.
class ProofRunner {
  public:
    explicit ProofRunner(int r) { report_.r = r; }

    void step(const std::string& name, const std::function<bool(std::string&)>& body) {
        if (failed_) return;
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        report_.steps.push_back({name, ok, ok ? "" : detail});
        if (!ok) failed_ = true;
    }

    ProofReport take() { return std::move(report_); }

  private:
    ProofReport report_;
    bool failed_ = false;
};

bool sym_eq(const P& got, const P& want, std::string& detail) {
    if (got == want) return true;
    detail = "computed " + to_string(got) + ", expected " + to_string(want);
    return false;
}

// f(x) = x^8 + x^6 + t^2 x^3 + (t^4+t^3) x^2 + t^4 x collides at t and t+1.
bool shift_family_check(const FieldCtx& F, std::string& detail) {
    for (uint32_t lt = 0; lt < F.q() - 1; ++lt) {
        FieldElement t = F.from_exp(lt);
        Octic f = Octic::normalized(F, F.zero(), F.one(), F.zero(), F.zero(), F.mul(t, t),
                                    F.add(F.pow(t, 4), F.pow(t, 3)), F.pow(t, 4));
        FieldElement want = F.add(F.pow(t, 8), F.pow(t, 5));
        if (eval(f, t) != want || eval(f, F.add(t, F.one())) != want) {
            detail = "collision fails at t = " + to_string(F, t);
            return false;
        }
    }
    return true;
}

// f(x) = x^8 + x^6 + a5 x^5 + a4 x^4 + a5^3 x^3 + a2 x^2 +
//        (a5^7 + a5^5 + a4 a5^3 + a2 a5) x vanishes at both 0 and a5.
bool root_family_check(const FieldCtx& F, std::string& detail) {
    // symbolic: substituting x = a5 cancels identically in F_2[a2,a4,a5]
    P a5 = v5(), a4 = v4(), a2 = v2();
    P a1sub = pow(a5, 7) + pow(a5, 5) + a4 * pow(a5, 3) + a2 * a5;
    P at_a5 = pow(a5, 8) + pow(a5, 6) + a5 * pow(a5, 5) + a4 * pow(a5, 4) +
              pow(a5, 3) * pow(a5, 3) + a2 * pow(a5, 2) + a1sub * a5;
    if (!at_a5.is_zero()) {
        detail = "symbolic substitution left " + to_string(at_a5);
        return false;
    }
    // exhaustive over the whole family
    const uint32_t q = F.q();
    for (uint32_t l5 = 0; l5 < q - 1; ++l5) {
        FieldElement e5 = F.from_exp(l5);
        FieldElement p2 = F.mul(e5, e5);
        FieldElement p3 = F.mul(p2, e5), p4 = F.mul(p3, e5), p5 = F.mul(p4, e5);
        FieldElement fixed = F.add(F.add(F.pow(e5, 8), F.mul(p3, p3)),          // a5^8 + a5^6
                                   F.add(F.mul(e5, p5), F.mul(p3, p3)));        // + a5*a5^5 + a5^3*a5^3
        FieldElement a1base = F.add(F.pow(e5, 7), p5);
        for (uint32_t b4 = 0; b4 < q; ++b4) {
            FieldElement a4{static_cast<uint16_t>(b4)};
            FieldElement with4 = F.add(fixed, F.mul(a4, p4));
            FieldElement a1mid = F.add(a1base, F.mul(a4, p3));
            for (uint32_t b2 = 0; b2 < q; ++b2) {
                FieldElement a2{static_cast<uint16_t>(b2)};
                FieldElement a1 = F.add(a1mid, F.mul(a2, e5));
                FieldElement value = F.add(with4, F.add(F.mul(a2, p2), F.mul(a1, e5)));
                if (value.bits != 0) {
                    detail = "f(a5) != 0 at a5 = " + to_string(F, e5);
                    return false;
                }
            }
        }
    }
    // tie the closed-form loop back to the generic evaluator on a sample
    for (uint32_t l5 = 0; l5 < q - 1; l5 += 7) {
        FieldElement e5 = F.from_exp(l5);
        FieldElement a4 = F.from_exp(3 * l5 + 1), a2 = F.from_exp(5 * l5 + 2);
        FieldElement a1 = F.add(F.add(F.pow(e5, 7), F.pow(e5, 5)),
                                F.add(F.mul(a4, F.pow(e5, 3)), F.mul(a2, e5)));
        Octic f = Octic::normalized(F, F.zero(), F.one(), e5, a4, F.pow(e5, 3), a2, a1);
        if (eval(f, e5).bits != 0 || eval(f, F.zero()).bits != 0) {
            detail = "generic evaluation disagrees at a5 = " + to_string(F, e5);
            return false;
        }
    }
    return true;
}

}  // namespace

ProofReport verify_r7(const FieldCtx& F) {
    if (F.r() != 7) throw std::invalid_argument("verify_r7: context must have r = 7");
    ProofRunner run(7);
    const P zero = P::zero(), one = P::one();
    const P a1 = v1(), a2 = v2(), a3 = v3(), a4 = v4(), a5 = v5();
    auto H = [&](long long k, const HcCoeffs<P>& c) { return hc_sym(7, k, c); };

    run.step("hc(7,23,(0,0,a5,a4,a3,a2,a1)) = a5^19", [&](std::string& d) {
        return sym_eq(H(23, {zero, zero, a5, a4, a3, a2, a1}), pow(a5, 19), d);
    });
    run.step("hc(7,29,(0,0,0,a4,a3,a2,a1)) = a3^21", [&](std::string& d) {
        return sym_eq(H(29, {zero, zero, zero, a4, a3, a2, a1}), pow(a3, 21), d);
    });

    // case (a7,a6,a5) = (0,1,0), a4 = 0
    run.step("hc(7,43,(0,1,0,0,0,a2,a1)) = a2", [&](std::string& d) {
        return sym_eq(H(43, {zero, one, zero, zero, zero, a2, a1}), a2, d);
    });
    run.step("hc(7,55,(0,1,0,0,0,0,a1)) = a1^16", [&](std::string& d) {
        return sym_eq(H(55, {zero, one, zero, zero, zero, zero, a1}), pow(a1, 16), d);
    });
    run.step("x^8 + x^6 is not a PP over F_128", [&](std::string&) {
        return !is_pp_brute(Octic::normalized(F, F.zero(), F.one(), F.zero(), F.zero(), F.zero(),
                                              F.zero(), F.zero()));
    });
    run.step("hc(7,23,(0,1,0,0,a3,a2,a1)) = a3^5 + a2^2 a3 + a1 a3^2", [&](std::string& d) {
        return sym_eq(H(23, {zero, one, zero, zero, a3, a2, a1}),
                      pow(a3, 5) + pow(a2, 2) * a3 + a1 * pow(a3, 2), d);
    });
    run.step("hc(7,27,(0,1,0,0,a3,a2,a1)) = a3^17 + a2^2 a3^9 + a1 a3^10 + a2^8 a3",
             [&](std::string& d) {
                 return sym_eq(H(27, {zero, one, zero, zero, a3, a2, a1}),
                               pow(a3, 17) + pow(a2, 2) * pow(a3, 9) + a1 * pow(a3, 10) +
                                   pow(a2, 8) * a3, d);
             });
    run.step("hc(7,23)*a3^8 + hc(7,27) = a3^17 + a3^13 + a2^8 a3 = a3 (a3^4+a3^3+a2^2)^4",
             [&](std::string& d) {
                 P lhs = H(23, {zero, one, zero, zero, a3, a2, a1}) * pow(a3, 8) +
                         H(27, {zero, one, zero, zero, a3, a2, a1});
                 P mid = pow(a3, 17) + pow(a3, 13) + pow(a2, 8) * a3;
                 P rhs = a3 * pow(pow(a3, 4) + pow(a3, 3) + pow(a2, 2), 4);
                 return sym_eq(lhs, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("family x^8+x^6+t^2x^3+(t^4+t^3)x^2+t^4x: f(t+1) = t^8+t^5 = f(t) on F_128^*",
             [&](std::string& d) { return shift_family_check(F, d); });

    // case (a7,a6) = (0,1), a5 != 0
    run.step("hc(7,23,(0,1,*))^4 a3 + hc(7,29,(0,1,*)) = a3 a5^76 + a3^5 a5^64 = a3 a5^64 (a5^3+a3)^4",
             [&](std::string& d) {
                 HcCoeffs<P> c{zero, one, a5, a4, a3, a2, a1};
                 P lhs = pow(H(23, c), 4) * a3 + H(29, c);
                 P mid = a3 * pow(a5, 76) + pow(a3, 5) * pow(a5, 64);
                 P rhs = a3 * pow(a5, 64) * pow(pow(a5, 3) + a3, 4);
                 return sym_eq(lhs, mid, d) && sym_eq(mid, rhs, d);
             });

    // sub-case a3 = 0
    run.step("hc(7,27,(0,1,a5,a4,0,a2,a1)) + hc(7,43,(0,1,a5,a4,0,a2,a1))^8 a5^3 "
             "= a2^256 a5^27 + a5^67 + a1^2 a5^25 -> a2^2 a5^27 + a5^67 + a1^2 a5^25",
             [&](std::string& d) {
                 HcCoeffs<P> c{zero, one, a5, a4, zero, a2, a1};
                 P lhs = H(27, c) + pow(H(43, c), 8) * pow(a5, 3);
                 P raw = pow(a2, 256) * pow(a5, 27) + pow(a5, 67) + pow(a1, 2) * pow(a5, 25);
                 P red = pow(a2, 2) * pow(a5, 27) + pow(a5, 67) + pow(a1, 2) * pow(a5, 25);
                 return sym_eq(lhs, raw, d) && sym_eq(sp_reduce_exponents(lhs, 128), red, d);
             });
    run.step("hc(7,23,(0,1,a5,a4,0,a2,a5^21+a2 a5)) = a5^43+a5^27+a5^19+a2 a5^7+a4^4 a5^3+a2^2 a5^3",
             [&](std::string& d) {
                 P a1s = pow(a5, 21) + a2 * a5;
                 return sym_eq(H(23, {zero, one, a5, a4, zero, a2, a1s}),
                               pow(a5, 43) + pow(a5, 27) + pow(a5, 19) + a2 * pow(a5, 7) +
                                   pow(a4, 4) * pow(a5, 3) + pow(a2, 2) * pow(a5, 3), d);
             });
    run.step("hc(7,27,(0,1,a5,a2^64+a2^32 a5+a5^10+a5^6+a5^4,0,a2,a5^21+a2 a5)) "
             "reduces to a5^67 + a5^51 + a5^36 = a5^35 (a5^32+a5^16+a5)",
             [&](std::string& d) {
                 P a4s = pow(a2, 64) + pow(a2, 32) * a5 + pow(a5, 10) + pow(a5, 6) + pow(a5, 4);
                 P a1s = pow(a5, 21) + a2 * a5;
                 P raw = H(27, {zero, one, a5, a4s, zero, a2, a1s});
                 P want_raw = pow(a2, 1024) * pow(a5, 3) + pow(a2, 256) * pow(a5, 27) +
                              pow(a5, 163) + pow(a5, 67) + pow(a5, 51) + pow(a2, 2) * pow(a5, 27) +
                              pow(a2, 8) * pow(a5, 3);
                 P red = pow(a5, 35) * (pow(a5, 32) + pow(a5, 16) + a5);
                 return sym_eq(raw, want_raw, d) && sym_eq(sp_reduce_exponents(raw, 128), red, d);
             });
    run.step("(a5^32+a5^16+a5)^8 reduces to a5^8+a5^2+a5, so a5 is a root of x^7+x+1",
             [&](std::string& d) {
                 P lhs = sp_reduce_exponents(pow(pow(a5, 32) + pow(a5, 16) + a5, 8), 128);
                 if (!sym_eq(lhs, pow(a5, 8) + pow(a5, 2) + a5, d)) return false;
                 // same nonzero roots: a^8+a^2+a = a(a^7+a+1) for a != 0
                 for (uint32_t l = 0; l < F.q() - 1; ++l) {
                     FieldElement a = F.from_exp(l);
                     bool z1 = F.add(F.add(F.pow(a, 8), F.mul(a, a)), a).bits == 0;
                     bool z2 = F.add(F.add(F.pow(a, 7), a), F.one()).bits == 0;
                     if (z1 != z2) {
                         d = "root sets differ at " + to_string(F, a);
                         return false;
                     }
                 }
                 return true;
             });
    run.step("x^7+x+1 has 7 roots in F_128, each generating F_128^*", [&](std::string& d) {
        int count = 0;
        for (uint32_t l = 0; l < F.q() - 1; ++l) {
            FieldElement a = F.from_exp(l);
            if (F.add(F.add(F.pow(a, 7), a), F.one()).bits != 0) continue;
            ++count;
            if (a == F.one()) {  // order 127 is automatic otherwise (127 prime)
                d = "1 cannot be a root";
                return false;
            }
        }
        if (count != 7) {
            d = "found " + std::to_string(count) + " roots";
            return false;
        }
        return true;
    });
    run.step("hc(7,31,(0,1,rho,a2^64+a2^32 rho+rho^10+rho^6+rho^4,0,a2,rho^21+a2 rho)) "
             "mod (a2^128 - a2) is the nonzero constant rho^2 + rho for each root rho",
             [&](std::string& d) {
                 FieldPolyDomain PD(F, true);
                 for (uint32_t l = 0; l < F.q() - 1; ++l) {
                     FieldElement rho = F.from_exp(l);
                     if (F.add(F.add(F.pow(rho, 7), rho), F.one()).bits != 0) continue;
                     FieldPoly y = PD.variable();
                     FieldPoly a4p = PD.add(
                         PD.add(PD.pow(y, 64), PD.mul(PD.pow(y, 32), PD.constant(rho))),
                         PD.constant(F.add(F.add(F.pow(rho, 10), F.pow(rho, 6)), F.pow(rho, 4))));
                     FieldPoly a1p = PD.add(PD.constant(F.pow(rho, 21)), PD.mul(y, PD.constant(rho)));
                     HcCoeffs<FieldPoly> c{PD.zero(), PD.one(), PD.constant(rho), a4p,
                                           PD.zero(), y,        a1p};
                     FieldPoly res = hc(PD, 7, 31, c);
                     FieldPoly want = PD.constant(F.add(F.mul(rho, rho), rho));
                     if (res.is_zero() || !PD.eq(res, want)) {
                         d = "at rho = " + to_string(F, rho) + ": got " + to_string(F, res, "a2");
                         return false;
                     }
                 }
                 return true;
             });

    // case (a7,a6) = (1,0)
    run.step("hc(7,19,(1,0,a5,a4,a3,a2,a1)) = a5^3 + a4^2 + a1", [&](std::string& d) {
        return sym_eq(H(19, {one, zero, a5, a4, a3, a2, a1}), pow(a5, 3) + pow(a4, 2) + a1, d);
    });
    run.step("hc(7,37,(1,0,a5,a4,a3,a2,a1)) = a3^33 + a2", [&](std::string& d) {
        return sym_eq(H(37, {one, zero, a5, a4, a3, a2, a1}), pow(a3, 33) + a2, d);
    });
    run.step("hc(7,27,(1,0,a5,a4,a3,a3^33,a5^3+a4^2)) = a4^16 a5^8 + a3^8 a5^16 + a3^16 "
             "= (a4^2 a5 + a3 a5^2 + a3^2)^8",
             [&](std::string& d) {
                 P got = H(27, {one, zero, a5, a4, a3, pow(a3, 33), pow(a5, 3) + pow(a4, 2)});
                 P mid = pow(a4, 16) * pow(a5, 8) + pow(a3, 8) * pow(a5, 16) + pow(a3, 16);
                 P rhs = pow(pow(a4, 2) * a5 + a3 * pow(a5, 2) + pow(a3, 2), 8);
                 return sym_eq(got, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("a4 = a3^64 a5^64 + a3 a5^63 solves a4^2 a5 + a3 a5^2 + a3^2 = 0 on F_128 x F_128^*",
             [&](std::string& d) {
                 for (uint32_t b = 0; b < F.q(); ++b) {
                     FieldElement x3{static_cast<uint16_t>(b)};
                     for (uint32_t l = 0; l < F.q() - 1; ++l) {
                         FieldElement x5 = F.from_exp(l);
                         FieldElement x4 = F.add(F.mul(F.pow(x3, 64), F.pow(x5, 64)),
                                                 F.mul(x3, F.pow(x5, 63)));
                         FieldElement lhs = F.add(F.add(F.mul(F.mul(x4, x4), x5),
                                                        F.mul(x3, F.mul(x5, x5))),
                                                  F.mul(x3, x3));
                         if (lhs.bits != 0) {
                             d = "fails at a3 = " + to_string(F, x3) + ", a5 = " + to_string(F, x5);
                             return false;
                         }
                     }
                 }
                 return true;
             });
    run.step("hc(7,{23,29,31}) of the (1,0) chain have no common zero on F_128 x F_128^*",
             [&](std::string& d) {
                 P a4s = pow(a3, 64) * pow(a5, 64) + a3 * pow(a5, 63);
                 P a2s = pow(a3, 33);
                 P a1s = pow(a5, 3) + a3 * a5 + pow(a3, 2) * pow(a5, 126);
                 std::array<P, 3> hs = {H(23, {one, zero, a5, a4s, a3, a2s, a1s}),
                                        H(29, {one, zero, a5, a4s, a3, a2s, a1s}),
                                        H(31, {one, zero, a5, a4s, a3, a2s, a1s})};
                 for (auto& h : hs) h = sp_reduce_exponents(h, 128);  // function-preserving
                 FieldDomain FD(F);
                 std::array<FieldElement, 7> assign{};
                 for (uint32_t b = 0; b < F.q(); ++b) {
                     assign[2] = {static_cast<uint16_t>(b)};  // a3
                     for (uint32_t l = 0; l < F.q() - 1; ++l) {
                         assign[4] = F.from_exp(l);  // a5
                         bool all_zero = true;
                         for (const auto& h : hs)
                             if (sp_eval(h, FD, assign).bits != 0) {
                                 all_zero = false;
                                 break;
                             }
                         if (all_zero) {
                             d = "common zero at a3 = " + to_string(F, assign[2]) +
                                 ", a5 = " + to_string(F, assign[4]);
                             return false;
                         }
                     }
                 }
                 return true;
             });

    return run.take();
}

ProofReport verify_r8(const FieldCtx& F) {
    if (F.r() != 8) throw std::invalid_argument("verify_r8: context must have r = 8");
    ProofRunner run(8);
    const P zero = P::zero(), one = P::one();
    const P a1 = v1(), a2 = v2(), a3 = v3(), a4 = v4(), a5 = v5();
    auto H = [&](long long k, const HcCoeffs<P>& c) { return hc_sym(8, k, c); };

    run.step("hc(8,51,(0,0,a5,a4,a3,a2,a1)) = a5^51", [&](std::string& d) {
        return sym_eq(H(51, {zero, zero, a5, a4, a3, a2, a1}), pow(a5, 51), d);
    });
    run.step("hc(8,55,(0,0,0,a4,a3,a2,a1)) = a3^37", [&](std::string& d) {
        return sym_eq(H(55, {zero, zero, zero, a4, a3, a2, a1}), pow(a3, 37), d);
    });

    // case (a7,a6) = (0,1)
    run.step("hc(8,43,(0,1,a5,a4,a3,a2,a1)) = a5^3 + a3", [&](std::string& d) {
        return sym_eq(H(43, {zero, one, a5, a4, a3, a2, a1}), pow(a5, 3) + a3, d);
    });
    run.step("hc(8,85,(0,1,a5,a4,a3,a2,a1)) = a3^85 + 1", [&](std::string& d) {
        return sym_eq(H(85, {zero, one, a5, a4, a3, a2, a1}), pow(a3, 85) + one, d);
    });
    run.step("hc(8,47,(0,1,a5,a4,a5^3,a2,a1))^4 a5^3 + hc(8,61,(0,1,a5,a4,a5^3,a2,a1)) "
             "= a5^191+a5^175+a4^8 a5^159+a2^8 a5^143+a1^8 a5^135 "
             "= a5^135 (a5^7+a5^5+a4 a5^3+a2 a5+a1)^8",
             [&](std::string& d) {
                 HcCoeffs<P> c{zero, one, a5, a4, pow(a5, 3), a2, a1};
                 P lhs = pow(H(47, c), 4) * pow(a5, 3) + H(61, c);
                 P mid = pow(a5, 191) + pow(a5, 175) + pow(a4, 8) * pow(a5, 159) +
                         pow(a2, 8) * pow(a5, 143) + pow(a1, 8) * pow(a5, 135);
                 P rhs = pow(a5, 135) *
                         pow(pow(a5, 7) + pow(a5, 5) + a4 * pow(a5, 3) + a2 * a5 + a1, 8);
                 return sym_eq(lhs, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("family with a3 = a5^3, a1 = a5^7+a5^5+a4 a5^3+a2 a5 has f(a5) = 0 = f(0) "
             "for all a5 in F_256^*, a4, a2 in F_256",
             [&](std::string& d) { return root_family_check(F, d); });

    // case (a7,a6) = (1,0)
    run.step("hc(8,37,(1,0,a5,a4,a3,a2,a1)) = a3", [&](std::string& d) {
        return sym_eq(H(37, {one, zero, a5, a4, a3, a2, a1}), a3, d);
    });
    run.step("hc(8,53,(1,0,a5,a4,0,a2,a1)) = a2^4 a5^48 + a2^4 a4^32 + a1^16 a2^4 "
             "= a2^4 (a5^3+a4^2+a1)^16",
             [&](std::string& d) {
                 P got = H(53, {one, zero, a5, a4, zero, a2, a1});
                 P mid = pow(a2, 4) * pow(a5, 48) + pow(a2, 4) * pow(a4, 32) +
                         pow(a1, 16) * pow(a2, 4);
                 P rhs = pow(a2, 4) * pow(pow(a5, 3) + pow(a4, 2) + a1, 16);
                 return sym_eq(got, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("hc(8,43,(1,0,a5,a4,0,a2,a1)) = a2^8 (a5^3+a4^2+a1) + a1^8, so a1 = 0",
             [&](std::string& d) {
                 P got = H(43, {one, zero, a5, a4, zero, a2, a1});
                 P rhs = pow(a2, 8) * (pow(a5, 3) + pow(a4, 2) + a1) + pow(a1, 8);
                 return sym_eq(got, rhs, d);
             });
    run.step("hc(8,45,(1,0,a5,a4,0,a2,0)) = a5^32 + a2^12, so a5 = a2^96", [&](std::string& d) {
        P got = H(45, {one, zero, a5, a4, zero, a2, zero});
        if (!sym_eq(got, pow(a5, 32) + pow(a2, 12), d)) return false;
        P eighth = sp_reduce_exponents(pow(got, 8), 256);
        return sym_eq(eighth, a5 + pow(a2, 96), d);
    });
    run.step("hc(8,39,(1,0,0,a4,0,0,0)) = a4^6", [&](std::string& d) {
        return sym_eq(H(39, {one, zero, zero, a4, zero, zero, zero}), pow(a4, 6), d);
    });
    run.step("x^8 + x^7 is not a PP over F_256", [&](std::string&) {
        return !is_pp_brute(Octic::normalized(F, F.one(), F.zero(), F.zero(), F.zero(), F.zero(),
                                              F.zero(), F.zero()));
    });
    run.step("hc(8,39,(1,0,a2^96,a2^144,0,a2,0)) = a2^386 + a2^4; a2^382 = 1 forces a2 = 1 "
             "(gcd(382,255) = 1)",
             [&](std::string& d) {
                 P got = H(39, {one, zero, pow(a2, 96), pow(a2, 144), zero, a2, zero});
                 if (!sym_eq(got, pow(a2, 386) + pow(a2, 4), d)) return false;
                 if (std::gcd(382, 255) != 1) {
                     d = "gcd(382,255) != 1";
                     return false;
                 }
                 int solutions = 0;
                 for (uint32_t l = 0; l < F.q() - 1; ++l)
                     if (F.pow(F.from_exp(l), 382) == F.one()) ++solutions;
                 if (solutions != 1) {
                     d = "a2^382 = 1 has " + std::to_string(solutions) + " solutions";
                     return false;
                 }
                 return true;
             });
    run.step("hc(8,55,(1,0,1,1,0,1,0)) = 1 in F_256", [&](std::string& d) {
        FieldElement got = hc(F, 55, {F.one(), F.zero(), F.one(), F.one(), F.zero(), F.one(), F.zero()});
        if (got == F.one()) return true;
        d = "computed " + to_string(F, got);
        return false;
    });

    return run.take();
}

ProofReport verify_r9(const FieldCtx& F) {
    if (F.r() != 9) throw std::invalid_argument("verify_r9: context must have r = 9");
    ProofRunner run(9);
    const P zero = P::zero(), one = P::one();
    const P a1 = v1(), a2 = v2(), a3 = v3(), a4 = v4(), a5 = v5(), a6 = v6(), a7 = v7();
    auto H = [&](long long k, const HcCoeffs<P>& c) { return hc_sym(9, k, c); };

    run.step("hc(9,73,(a7,a6,a5,a4,a3,a2,a1)) = a7^73, so a7 = 0", [&](std::string& d) {
        return sym_eq(H(73, {a7, a6, a5, a4, a3, a2, a1}), pow(a7, 73), d);
    });
    run.step("hc(9,117,(0,0,0,a4,a3,a2,a1)) = a3^85", [&](std::string& d) {
        return sym_eq(H(117, {zero, zero, zero, a4, a3, a2, a1}), pow(a3, 85), d);
    });

    // case a7 = a6 = 0 != a5, so (a5,a4) = (1,0)
    run.step("hc(9,93,(0,0,1,0,a3,a2,a1)) = a3", [&](std::string& d) {
        return sym_eq(H(93, {zero, zero, one, zero, a3, a2, a1}), a3, d);
    });
    run.step("hc(9,103,(0,0,1,0,0,a2,a1)) = a1", [&](std::string& d) {
        return sym_eq(H(103, {zero, zero, one, zero, zero, a2, a1}), a1, d);
    });
    run.step("hc(9,107,(0,0,1,0,0,a2,0)) = a2^8", [&](std::string& d) {
        return sym_eq(H(107, {zero, zero, one, zero, zero, a2, zero}), pow(a2, 8), d);
    });
    run.step("x^8 + x^5 is not a PP over F_512", [&](std::string&) {
        return !is_pp_brute(Octic::normalized(F, F.zero(), F.zero(), F.one(), F.zero(), F.zero(),
                                              F.zero(), F.zero()));
    });

    // case (a7,a6,a5) = (0,1,0), a4 = 0
    run.step("hc(9,171,(0,1,0,0,0,a2,a1)) = a2", [&](std::string& d) {
        return sym_eq(H(171, {zero, one, zero, zero, zero, a2, a1}), a2, d);
    });
    run.step("hc(9,183,(0,1,0,0,0,0,a1)) = a1^16", [&](std::string& d) {
        return sym_eq(H(183, {zero, one, zero, zero, zero, zero, a1}), pow(a1, 16), d);
    });
    run.step("x^8 + x^6 is not a PP over F_512", [&](std::string&) {
        return !is_pp_brute(Octic::normalized(F, F.zero(), F.one(), F.zero(), F.zero(), F.zero(),
                                              F.zero(), F.zero()));
    });
    run.step("hc(9,87,(0,1,0,0,a3,a2,a1)) = a3^5 + a2^2 a3 + a1 a3^2", [&](std::string& d) {
        return sym_eq(H(87, {zero, one, zero, zero, a3, a2, a1}),
                      pow(a3, 5) + pow(a2, 2) * a3 + a1 * pow(a3, 2), d);
    });
    run.step("hc(9,91,(0,1,0,0,a3,a2,a1)) = a3^17 + a2^2 a3^9 + a1 a3^10 + a2^8 a3",
             [&](std::string& d) {
                 return sym_eq(H(91, {zero, one, zero, zero, a3, a2, a1}),
                               pow(a3, 17) + pow(a2, 2) * pow(a3, 9) + a1 * pow(a3, 10) +
                                   pow(a2, 8) * a3, d);
             });
    run.step("hc(9,87)*a3^8 + hc(9,91) = a3^17 + a3^13 + a2^8 a3 = a3 (a3^4+a3^3+a2^2)^4",
             [&](std::string& d) {
                 HcCoeffs<P> c{zero, one, zero, zero, a3, a2, a1};
                 P lhs = H(87, c) * pow(a3, 8) + H(91, c);
                 P mid = pow(a3, 17) + pow(a3, 13) + pow(a2, 8) * a3;
                 P rhs = a3 * pow(pow(a3, 4) + pow(a3, 3) + pow(a2, 2), 4);
                 return sym_eq(lhs, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("family x^8+x^6+t^2x^3+(t^4+t^3)x^2+t^4x: f(t+1) = t^8+t^5 = f(t) on F_512^*",
             [&](std::string& d) { return shift_family_check(F, d); });

    // case (a7,a6) = (0,1), a5 != 0
    run.step("hc(9,87,(0,1,*)) (a5^96+a3^32) + hc(9,103,(0,1,*)) "
             "= a5^115 + a3 a5^112 + a3^32 a5^19 + a3^33 a5^16 = a5^16 (a5^3+a3)^33",
             [&](std::string& d) {
                 HcCoeffs<P> c{zero, one, a5, a4, a3, a2, a1};
                 P lhs = H(87, c) * (pow(a5, 96) + pow(a3, 32)) + H(103, c);
                 P mid = pow(a5, 115) + a3 * pow(a5, 112) + pow(a3, 32) * pow(a5, 19) +
                         pow(a3, 33) * pow(a5, 16);
                 P rhs = pow(a5, 16) * pow(pow(a5, 3) + a3, 33);
                 return sym_eq(lhs, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("hc(9,87,(0,1,a5,a4,a5^3,a2,a1)) = a5^15+a5^11+a4^2 a5^7+a2^2 a5^3+a1^2 a5 "
             "= a5 (a5^7+a5^5+a4 a5^3+a2 a5+a1)^2",
             [&](std::string& d) {
                 P got = H(87, {zero, one, a5, a4, pow(a5, 3), a2, a1});
                 P mid = pow(a5, 15) + pow(a5, 11) + pow(a4, 2) * pow(a5, 7) +
                         pow(a2, 2) * pow(a5, 3) + pow(a1, 2) * a5;
                 P rhs = a5 * pow(pow(a5, 7) + pow(a5, 5) + a4 * pow(a5, 3) + a2 * a5 + a1, 2);
                 return sym_eq(got, mid, d) && sym_eq(mid, rhs, d);
             });
    run.step("family with a3 = a5^3, a1 = a5^7+a5^5+a4 a5^3+a2 a5 has f(a5) = 0 = f(0) "
             "for all a5 in F_512^*, a4, a2 in F_512",
             [&](std::string& d) { return root_family_check(F, d); });

    return run.take();
}

Classification classify(int r, const SearchOptions& opt) {
    if (r < 4 || r > 9)
        throw std::out_of_range("classify: r must be in 4..9 (degree-8 theory needs r > 3; "
                                "no non-exceptional PPs exist for r > 9)");
    Classification out;
    out.ctx = std::make_shared<FieldCtx>(make_ctx(r));
    out.r = r;
    switch (r) {
        case 4: out.records = classify_r4(*out.ctx, opt); break;
        case 5: out.records = classify_r5(*out.ctx, opt); break;
        case 6: out.records = classify_r6(*out.ctx, opt); break;
        case 7: out.report = verify_r7(*out.ctx); break;
        case 8: out.report = verify_r8(*out.ctx); break;
        case 9: out.report = verify_r9(*out.ctx); break;
    }
    return out;
}

}  // namespace pp8
