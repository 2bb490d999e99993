#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pp8 {

/// An element of GF(2^r) in the polynomial basis: bit i is the
/// coefficient of x^i. Valid values satisfy bits < 2^r.
struct FieldElement {
    uint16_t bits = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.bits == b.bits; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.bits != b.bits; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.bits < b.bits; }
};

/// Display form of an element: code 0 is the zero element, code i in
/// 1..q-1 is e^i (so the unit prints as q-1, never as 0).
struct LogRep {
    uint32_t code = 0;

    friend bool operator==(LogRep a, LogRep b) { return a.code == b.code; }
    friend bool operator!=(LogRep a, LogRep b) { return a.code != b.code; }
};

/// Arithmetic context for GF(2^r), 1 <= r <= 16. The modulus is a
/// primitive irreducible polynomial, so e = x generates the
/// multiplicative group; exp/log tables are built once at construction
/// and the context is immutable afterwards (safe to share across threads).
class FieldCtx {
  public:
    FieldCtx(int r, uint32_t modulus_bits);

    int r() const { return r_; }
    uint32_t q() const { return q_; }
    uint32_t modulus() const { return modulus_; }
    FieldElement zero() const { return {}; }
    FieldElement one() const { return {1}; }
    FieldElement generator() const { return {exp_[1 % (q_ - 1)]}; }  // = 1 when r = 1

    bool same_field(const FieldCtx& other) const {
        return r_ == other.r_ && modulus_ == other.modulus_;
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        return {static_cast<uint16_t>(a.bits ^ b.bits)};
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.bits == 0 || b.bits == 0) return {};
        return {exp_[log_[a.bits] + log_[b.bits]]};
    }
    FieldElement inv(FieldElement a) const;

    /// a^n. n may be negative for a != 0 (reduced mod q-1).
    /// pow(a, 0) = 1 for every a, including a = 0.
    FieldElement pow(FieldElement a, long long n) const;

    /// Frobenius power a -> a^(2^j); j is taken mod r, so frob(a, r) = a.
    FieldElement frob(FieldElement a, long long j) const;

    /// Square root (a -> a^(2^(r-1))); every element has exactly one.
    FieldElement sqrt(FieldElement a) const { return frob(a, r_ - 1); }

    FieldElement from_log(LogRep rep) const;
    LogRep to_log(FieldElement a) const;

    /// e^n for any integer n (reduced mod q-1).
    FieldElement from_exp(long long n) const;

    /// Internal discrete log in [0, q-2]; a must be nonzero.
    uint32_t raw_log(FieldElement a) const;

    /// All q elements in bit order 0, 1, ..., q-1.
    std::vector<FieldElement> elements() const;

  private:
    int r_;
    uint32_t q_;
    uint32_t modulus_;
    std::vector<uint16_t> exp_;  // doubled: exp_[i] = e^(i mod q-1), i < 2(q-1)
    std::vector<uint32_t> log_;  // log_[bits] for bits != 0
};

/// Context with the standard modulus for extension degree r (1 <= r <= 16).
/// The table can be overridden through the PP8_MODULI_FILE environment
/// variable (same text format as data/moduli.txt).
FieldCtx make_ctx(int r);

/// The built-in modulus for degree r, before any file override.
uint32_t default_modulus(int r);

/// Parse a moduli table (lines "r 0xHEX", '#' comments) and return the
/// entry for r; throws if the file is unreadable or has no entry.
uint32_t modulus_from_file(const std::string& path, int r);

std::string to_string(const FieldCtx& ctx, FieldElement a);

}  // namespace pp8
