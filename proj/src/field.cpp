#include "pp8/field.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pp8 {

namespace {

// Primitive polynomials defining GF(2^r). Entries for r = 4..7 match the
// classical Conway polynomials x^4+x+1, x^5+x^2+1, x^6+x^4+x^3+x+1,
// x^7+x+1; r = 8, 9 are the Conway polynomials x^8+x^4+x^3+x^2+1 and
// x^9+x^4+x^3+x+1; the rest are standard maximal-LFSR polynomials.
// Classification counts do not depend on this choice, but log-form output
// does: tuples printed under a different modulus name different elements.
constexpr uint32_t kModuli[17] = {
    0,
    0x3,      // x+1
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x5B,     // x^6+x^4+x^3+x+1
    0x83,     // x^7+x+1
    0x11D,    // x^8+x^4+x^3+x^2+1
    0x21B,    // x^9+x^4+x^3+x+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

}  // namespace

FieldCtx::FieldCtx(int r, uint32_t modulus_bits) : r_(r), modulus_(modulus_bits) {
    if (r < 1 || r > 16) throw std::out_of_range("FieldCtx: r must be in 1..16");
    q_ = 1u << r;
    if (modulus_ >> r != 1u) throw std::invalid_argument("FieldCtx: modulus must have degree exactly r");
    if ((modulus_ & 1u) == 0) throw std::invalid_argument("FieldCtx: modulus must have nonzero constant term");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        if (seen[x]) throw std::invalid_argument("FieldCtx: modulus is not primitive");
        seen[x] = true;
        exp_[i] = static_cast<uint16_t>(x);
        exp_[i + q_ - 1] = static_cast<uint16_t>(x);
        log_[x] = i;
        x <<= 1;
        if (x & q_) x ^= modulus_;
    }
    if (x != 1) throw std::invalid_argument("FieldCtx: modulus is not primitive");
}

FieldElement FieldCtx::inv(FieldElement a) const {
    if (a.bits == 0) throw std::domain_error("inv(0) is undefined");
    uint32_t l = log_[a.bits];
    return {exp_[(q_ - 1 - l) % (q_ - 1)]};
}

FieldElement FieldCtx::pow(FieldElement a, long long n) const {
    if (a.bits == 0) {
        if (n == 0) return one();  // empty product
        if (n < 0) throw std::domain_error("pow(0, n) with n < 0");
        return {};
    }
    long long m = q_ - 1;
    long long e = ((n % m) + m) % m;
    return {exp_[static_cast<size_t>(static_cast<long long>(log_[a.bits]) * e % m)]};
}

FieldElement FieldCtx::frob(FieldElement a, long long j) const {
    if (a.bits == 0) return {};
    long long jj = ((j % r_) + r_) % r_;
    long long m = q_ - 1;
    long long l = log_[a.bits];
    for (long long i = 0; i < jj; ++i) l = (l * 2) % m;
    return {exp_[static_cast<size_t>(l)]};
}

FieldElement FieldCtx::from_log(LogRep rep) const {
    if (rep.code == 0) return {};
    if (rep.code > q_ - 1) throw std::out_of_range("from_log: code out of range");
    return {exp_[rep.code % (q_ - 1)]};
}

LogRep FieldCtx::to_log(FieldElement a) const {
    if (a.bits == 0) return {0};
    if (a.bits >= q_) throw std::out_of_range("to_log: element out of field");
    uint32_t l = log_[a.bits];
    return {l == 0 ? q_ - 1 : l};
}

FieldElement FieldCtx::from_exp(long long n) const {
    long long m = q_ - 1;
    return {exp_[static_cast<size_t>(((n % m) + m) % m)]};
}

uint32_t FieldCtx::raw_log(FieldElement a) const {
    if (a.bits == 0) throw std::domain_error("raw_log(0) is undefined");
    return log_[a.bits];
}

std::vector<FieldElement> FieldCtx::elements() const {
    std::vector<FieldElement> out(q_);
    for (uint32_t b = 0; b < q_; ++b) out[b] = {static_cast<uint16_t>(b)};
    return out;
}

uint32_t default_modulus(int r) {
    if (r < 1 || r > 16) throw std::out_of_range("default_modulus: r must be in 1..16");
    return kModuli[r];
}

uint32_t modulus_from_file(const std::string& path, int r) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open moduli file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int rr = 0;
        std::string hex;
        if (!(ls >> rr >> hex)) continue;
        if (rr == r) return static_cast<uint32_t>(std::stoul(hex, nullptr, 16));
    }
    throw std::runtime_error("moduli file has no entry for r=" + std::to_string(r));
}

FieldCtx make_ctx(int r) {
    if (const char* path = std::getenv("PP8_MODULI_FILE")) {
        return FieldCtx(r, modulus_from_file(path, r));
    }
    return FieldCtx(r, default_modulus(r));
}

std::string to_string(const FieldCtx& ctx, FieldElement a) {
    LogRep rep = ctx.to_log(a);
    if (rep.code == 0) return "0";
    if (rep.code == ctx.q() - 1) return "1";
    if (rep.code == 1) return "e";
    return "e^" + std::to_string(rep.code);
}

}  // namespace pp8
