// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pp8/equiv.hpp"
#include "pp8/hermite.hpp"
#include "pp8/pptest.hpp"
#include "pp8/search.hpp"
#include "test_util.hpp"

using namespace pp8;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(), secs);
    if (!ok) {
        if (!detail.empty()) std::printf("      %s\n", detail.c_str());
        ++failures;
    }
}

using Tuple5 = std::array<uint32_t, 5>;  // (a5, a4, a3, a2, a1) log codes

Tuple5 low5(const Octic& f) {
    auto t = tuple_logs(f);
    return {t[2], t[3], t[4], t[5], t[6]};
}

// The 35 representatives listed for r = 4 (log codes, unit = 15).
const std::vector<Tuple5> kMainListR4 = {
    {1, 0, 3, 5, 1},    {1, 0, 3, 9, 10},   {1, 1, 3, 8, 11},   {1, 1, 3, 9, 12},
    {1, 1, 3, 11, 4},   {1, 1, 3, 12, 9},   {1, 1, 3, 13, 4},   {3, 0, 9, 5, 15},
    {3, 0, 9, 8, 8},    {3, 2, 9, 0, 12},   {3, 2, 9, 7, 12},   {3, 2, 9, 15, 11},
    {5, 0, 15, 3, 15},  {5, 0, 15, 10, 1},  {5, 0, 15, 10, 4},  {5, 0, 15, 12, 15},
    {5, 1, 15, 0, 13},  {5, 1, 15, 0, 14},  {5, 1, 15, 5, 3},   {5, 1, 15, 5, 13},
    {5, 1, 15, 7, 7},   {5, 1, 15, 9, 6},   {5, 1, 15, 9, 7},   {7, 0, 6, 1, 7},
    {7, 0, 6, 2, 5},    {7, 0, 6, 9, 7},    {7, 0, 6, 9, 14},   {7, 0, 6, 11, 6},
    {7, 0, 6, 12, 2},   {7, 2, 6, 1, 9},    {7, 2, 6, 5, 1},    {7, 2, 6, 12, 10},
    {15, 0, 15, 1, 15}, {15, 3, 15, 1, 13}, {15, 3, 15, 2, 13},
};

// The four further representatives with a5 in the transversal.
const std::vector<Tuple5> kRemarkListR4 = {
    {15, 0, 15, 2, 15},
    {15, 0, 15, 4, 15},
    {15, 0, 15, 8, 15},
    {15, 3, 15, 4, 13},
};

// Published representatives for r = 5 with a5 in {e, e^11} (log codes, unit = 31):
// x^8+x^6+e x^5+e^26 x^3+e^25 x^2 and x^8+x^6+e^11 x^5+e x^4+e^29 x^3+e^27 x.
const std::vector<Tuple5> kMainListR5 = {
    {1, 0, 26, 25, 0},
    {11, 1, 29, 0, 27},
};

int nonzero_count(const Tuple5& t) {
    int n = 0;
    for (auto v : t) n += v != 0;
    return n;
}

}  // namespace

int main() {
    criterion(1, "classify_r4: 113 classes; 39 survive the Frobenius filter and match the "
                 "published 35 + 4 tuples verbatim",
              [](std::string& d) {
                  FieldCtx F = make_ctx(4);
                  auto records = classify_r4(F);
                  if (records.size() != 113) {
                      d = "got " + std::to_string(records.size()) + " records";
                      return false;
                  }
                  for (const auto& rec : records) {
                      const Octic& f = rec.octic;
                      if (f.a[7] != F.zero() || f.a[6] != F.one() || f.a[5] == F.zero() ||
                          f.a[3] != F.pow(f.a[5], 3)) {
                          d = "record " + to_string(f) + " violates the (0,1)/a3 = a5^3 shape";
                          return false;
                      }
                  }
                  std::vector<Tuple5> filtered;
                  for (const auto& rec : records)
                      if (rec.frobenius_rep) filtered.push_back(low5(rec.octic));
                  std::vector<Tuple5> expected = kMainListR4;
                  expected.insert(expected.end(), kRemarkListR4.begin(), kRemarkListR4.end());
                  std::sort(expected.begin(), expected.end());
                  std::sort(filtered.begin(), filtered.end());
                  if (filtered != expected) {
                      d = "Frobenius-filtered tuples differ from the published lists";
                      return false;
                  }
                  return true;
              });

    criterion(2, "classify_r5: 20 tuples in 10 shift pairs; representatives with a5 in {e, e^11} "
                 "match the two published polynomials",
              [](std::string& d) {
                  FieldCtx F = make_ctx(5);
                  auto records = classify_r5(F);
                  if (records.size() != 20) {
                      d = "got " + std::to_string(records.size()) + " tuples";
                      return false;
                  }
                  std::set<std::set<size_t>> pairs;
                  for (size_t i = 0; i < records.size(); ++i) {
                      if (!records[i].pair_link) {
                          d = "record without a shift partner";
                          return false;
                      }
                      size_t j = *records[i].pair_link;
                      if (j == i || !records[j].pair_link || *records[j].pair_link != i) {
                          d = "pairing is not an involution";
                          return false;
                      }
                      pairs.insert({i, j});
                  }
                  if (pairs.size() != 10) {
                      d = "got " + std::to_string(pairs.size()) + " pairs";
                      return false;
                  }
                  // per pair keep the sparser tuple, then filter a5 in {e, e^11}
                  std::vector<Tuple5> reps;
                  for (const auto& pr : pairs) {
                      auto it = pr.begin();
                      Tuple5 a = low5(records[*it].octic);
                      Tuple5 b = low5(records[*std::next(it)].octic);
                      Tuple5 rep = (nonzero_count(a) != nonzero_count(b))
                                       ? (nonzero_count(a) < nonzero_count(b) ? a : b)
                                       : std::min(a, b);
                      if (rep[0] == 1 || rep[0] == 11) reps.push_back(rep);
                  }
                  std::sort(reps.begin(), reps.end());
                  if (reps != kMainListR5) {
                      d = "representatives differ from the published pair";
                      return false;
                  }
                  return true;
              });

    criterion(3, "classify_r6: exactly the three published polynomials, verbatim in log form",
              [](std::string& d) {
                  FieldCtx F = make_ctx(6);
                  auto records = classify_r6(F);
                  std::vector<std::array<uint32_t, 7>> got;
                  for (const auto& rec : records) got.push_back(tuple_logs(rec.octic));
                  std::vector<std::array<uint32_t, 7>> want = {
                      {0, 0, 1, 0, 0, 2, 0},
                      {0, 0, 2, 0, 0, 4, 0},
                      {0, 63, 63, 3, 63, 14, 6},
                  };
                  if (got != want) {
                      d = "got " + std::to_string(got.size()) + " records";
                      return false;
                  }
                  return true;
              });

    criterion(4, "verify_r7 / verify_r8 / verify_r9: every proof step passes", [](std::string& d) {
        for (int r = 7; r <= 9; ++r) {
            FieldCtx F = make_ctx(r);
            ProofReport rep = r == 7 ? verify_r7(F) : r == 8 ? verify_r8(F) : verify_r9(F);
            int sym_steps = 0;
            for (const auto& s : rep.steps)
                if (s.name.find("hc(") != std::string::npos) ++sym_steps;
            if (!rep.all_pass()) {
                for (const auto& s : rep.steps)
                    if (!s.pass) d = "r=" + std::to_string(r) + " FAIL: " + s.name + ": " + s.detail;
                return false;
            }
            if (sym_steps < 10) {
                d = "r=" + std::to_string(r) + " has only " + std::to_string(sym_steps) +
                    " Hermite-sum steps";
                return false;
            }
            // the named checkpoints of each replay must all be present
            std::vector<std::string> expect;
            if (r == 7)
                expect = {"f(t+1) = t^8+t^5 = f(t)", "rho^2 + rho", "no common zero"};
            else if (r == 8)
                expect = {"f(a5) = 0 = f(0)", "hc(8,55,(1,0,1,1,0,1,0)) = 1"};
            else
                expect = {"f(t+1) = t^8+t^5 = f(t)", "f(a5) = 0 = f(0)"};
            for (const auto& needle : expect) {
                bool found = false;
                for (const auto& s : rep.steps)
                    found = found || s.name.find(needle) != std::string::npos;
                if (!found) {
                    d = "r=" + std::to_string(r) + " is missing the step containing '" + needle + "'";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(5, "hermite_full_check == is_pp_brute == is_pp_wan on the (R1) grid over F_16 and "
                 "on 500 + 200 random octics over F_16 / F_32",
              [](std::string& d) {
                  FieldCtx F4 = make_ctx(4);
                  auto check_all = [&](const Octic& f) {
                      bool brute = is_pp_brute(f);
                      return hermite_full_check(f) == brute && is_pp_wan(f) == brute;
                  };
                  // the three (R1) shapes with a5, a4 varying and the rest zero
                  for (int shape = 0; shape < 3; ++shape) {
                      FieldElement a7 = shape == 0 ? F4.one() : F4.zero();
                      FieldElement a6 = shape == 1 ? F4.one() : F4.zero();
                      for (auto a5 : F4.elements())
                          for (auto a4 : F4.elements()) {
                              Octic f = Octic::normalized(F4, a7, a6, a5, a4, F4.zero(), F4.zero(),
                                                          F4.zero());
                              if (!check_all(f)) {
                                  d = "disagreement at " + to_string(f);
                                  return false;
                              }
                          }
                  }
                  std::mt19937 rng(1001);
                  for (int i = 0; i < 500; ++i) {
                      Octic f = testutil::random_normalized(F4, rng);
                      if (!check_all(f)) {
                          d = "disagreement at " + to_string(f) + " over F_16";
                          return false;
                      }
                  }
                  FieldCtx F5 = make_ctx(5);
                  for (int i = 0; i < 200; ++i) {
                      Octic f = testutil::random_normalized(F5, rng);
                      if (!check_all(f)) {
                          d = "disagreement at " + to_string(f) + " over F_32";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "hc equals the summed power-series coefficients for k = 1..63 on 50 random "
                 "octics over each of F_16 and F_32",
              [](std::string& d) {
                  std::mt19937 rng(1002);
                  for (int r : {4, 5}) {
                      FieldCtx F = make_ctx(r);
                      for (int trial = 0; trial < 50; ++trial) {
                          Octic f = testutil::random_normalized(F, rng);
                          for (long long k = 1; k <= 63; ++k) {
                              FieldElement want = F.zero();
                              for (long long m = F.q() - 1; m <= 8 * k; m += F.q() - 1)
                                  want = F.add(want, coeff_of_power_oracle(f, k, m));
                              if (hc(F, k, hc_coeffs(f)) != want) {
                                  d = "mismatch at r=" + std::to_string(r) +
                                      " k=" + std::to_string(k) + " f=" + to_string(f);
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "multinomial_parity equals the exact multinomial mod 2 for all k <= 16 and all "
                 "compositions into 8 parts",
              [](std::string& d) {
                  auto fact = [](long long n) {
                      uint64_t f = 1;
                      for (long long i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
                      return f;
                  };
                  for (long long k = 0; k <= 16; ++k) {
                      std::vector<long long> js(8, 0);
                      std::function<bool(int, long long)> rec = [&](int pos, long long left) {
                          if (pos == 7) {
                              js[7] = left;
                              uint64_t denom = 1;
                              for (auto j : js) denom *= fact(j);
                              int exact = static_cast<int>((fact(k) / denom) & 1);
                              if (multinomial_parity(k, js) != exact) return false;
                              return true;
                          }
                          for (long long j = 0; j <= left; ++j) {
                              js[pos] = j;
                              if (!rec(pos + 1, left - j)) return false;
                          }
                          return true;
                      };
                      if (!rec(0, k)) {
                          d = "parity mismatch at k=" + std::to_string(k);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "is_exceptional_deg8 matches the linearized no-root oracle on all 16^3 "
                 "linearized octics; every exceptional one is a PP",
              [](std::string& d) {
                  FieldCtx F = make_ctx(4);
                  for (uint32_t b4 = 0; b4 < 16; ++b4)
                      for (uint32_t b2 = 0; b2 < 16; ++b2)
                          for (uint32_t b1 = 0; b1 < 16; ++b1) {
                              Octic f = Octic::normalized(
                                  F, F.zero(), F.zero(), F.zero(), {static_cast<uint16_t>(b4)},
                                  F.zero(), {static_cast<uint16_t>(b2)},
                                  {static_cast<uint16_t>(b1)});
                              bool root = false;
                              for (uint32_t l = 0; l < 15 && !root; ++l)
                                  root = eval(f, F.from_exp(l)) == F.zero();
                              bool ex = is_exceptional_deg8(f);
                              if (ex != !root || (ex && !is_pp_brute(f))) {
                                  d = "mismatch at " + to_string(f);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(9, "completeness cross-check over F_16: the unpruned (R1)-(R3) enumeration yields "
                 "113 classes, identical to classify_r4",
              [](std::string& d) {
                  FieldCtx F = make_ctx(4);
                  std::vector<Octic> survivors;
                  auto consider = [&](const Octic& f) {
                      if (is_pp_wan(f) && !is_exceptional_deg8(f)) survivors.push_back(f);
                  };
                  const auto elems = F.elements();
                  // shape (1,0): free tail
                  for (auto a5 : elems)
                      for (auto a4 : elems)
                          for (auto a3 : elems)
                              for (auto a2 : elems)
                                  for (auto a1 : elems)
                                      consider(Octic::normalized(F, F.one(), F.zero(), a5, a4, a3,
                                                                 a2, a1));
                  // shape (0,1): a4 constrained by (R2)
                  for (auto a5 : elems) {
                      std::vector<FieldElement> a4s = {F.zero()};
                      if (a5 != F.zero()) a4s.push_back(omega(F, a5));
                      for (auto a4 : a4s)
                          for (auto a3 : elems)
                              for (auto a2 : elems)
                                  for (auto a1 : elems)
                                      consider(Octic::normalized(F, F.zero(), F.one(), a5, a4, a3,
                                                                 a2, a1));
                  }
                  // shape (0,0): a5 = 0 free, or a5 in {1, e, e^2} with a4 = 0 (R3)
                  for (auto a4 : elems)
                      for (auto a3 : elems)
                          for (auto a2 : elems)
                              for (auto a1 : elems)
                                  consider(Octic::normalized(F, F.zero(), F.zero(), F.zero(), a4,
                                                             a3, a2, a1));
                  for (FieldElement a5 : {F.one(), F.generator(), F.from_exp(2)})
                      for (auto a3 : elems)
                          for (auto a2 : elems)
                              for (auto a1 : elems)
                                  consider(Octic::normalized(F, F.zero(), F.zero(), a5, F.zero(),
                                                             a3, a2, a1));

                  // quotient by linear relatedness (union-find over survivors)
                  std::vector<size_t> parent(survivors.size());
                  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
                  std::function<size_t(size_t)> find = [&](size_t x) {
                      return parent[x] == x ? x : parent[x] = find(parent[x]);
                  };
                  for (size_t i = 0; i < survivors.size(); ++i)
                      for (size_t j = i + 1; j < survivors.size(); ++j) {
                          NormalForm a{survivors[i], LinearWitness::identity()};
                          NormalForm b{survivors[j], LinearWitness::identity()};
                          if (linearly_related(a, b)) parent[find(i)] = find(j);
                      }
                  std::set<size_t> classes;
                  for (size_t i = 0; i < survivors.size(); ++i) classes.insert(find(i));
                  if (classes.size() != 113) {
                      d = "got " + std::to_string(classes.size()) + " classes from " +
                          std::to_string(survivors.size()) + " survivors";
                      return false;
                  }
                  // and the survivor set is exactly the pruned search output
                  auto records = classify_r4(F);
                  std::set<std::array<uint32_t, 7>> a, b;
                  for (const auto& f : survivors) a.insert(tuple_logs(f));
                  for (const auto& rec : records) b.insert(tuple_logs(rec.octic));
                  if (a != b) {
                      d = "survivor set differs from the pruned search";
                      return false;
                  }
                  return true;
              });

    std::printf("ACCEPTANCE: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
