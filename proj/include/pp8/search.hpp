#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pp8/equiv.hpp"
#include "pp8/octic.hpp"

namespace pp8 {

/// One representative of a linear-equivalence class of non-exceptional
/// permutation polynomials of degree 8.
struct ClassRecord {
    Octic octic;
    bool frobenius_rep = false;          // a5 lies in gamma(ctx)
    std::optional<size_t> pair_link;     // index of the distinct case-(ii) partner
};

struct ProofStep {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Replay of one nonexistence proof; a failing step stops the run.
struct ProofReport {
    int r = 0;
    std::vector<ProofStep> steps;

    bool all_pass() const {
        for (const auto& s : steps)
            if (!s.pass) return false;
        return !steps.empty();
    }
};

struct SearchOptions {
    int threads = 1;
};

/// Complete searches for r = 4, 5, 6. Every pruning constraint taken from
/// the Hermite sums is re-derived symbolically at run time before it is
/// trusted; a mismatch throws instead of silently shrinking the search.
/// Records are sorted by the log tuple (a7,...,a1).
std::vector<ClassRecord> classify_r4(const FieldCtx& ctx, const SearchOptions& opt = {});
std::vector<ClassRecord> classify_r5(const FieldCtx& ctx, const SearchOptions& opt = {});
std::vector<ClassRecord> classify_r6(const FieldCtx& ctx, const SearchOptions& opt = {});

/// Machine checks for "every degree-8 PP over F_2^r is exceptional",
/// r = 7, 8, 9: symbolic Hermite identities, the two counterexample
/// families, and the finite emptiness searches.
ProofReport verify_r7(const FieldCtx& ctx);
ProofReport verify_r8(const FieldCtx& ctx);
ProofReport verify_r9(const FieldCtx& ctx);

struct Classification {
    std::shared_ptr<const FieldCtx> ctx;
    int r = 0;
    std::vector<ClassRecord> records;          // empty for r >= 7
    std::optional<ProofReport> report;         // set for r >= 7
};

/// Dispatcher: class lists for r = 4..6, proof reports for r = 7..9.
Classification classify(int r, const SearchOptions& opt = {});

}  // namespace pp8
