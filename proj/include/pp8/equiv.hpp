#pragma once

#include <optional>
#include <vector>

#include "pp8/octic.hpp"

namespace pp8 {

/// A fixed element outside the image of u -> u^2 + a*u (a != 0). The
/// image is an index-2 subspace, so the complement is nonempty; the
/// element with the smallest log code is chosen so representatives are
/// reproducible.
FieldElement omega(const FieldCtx& ctx, FieldElement a);

/// Exceptionality test for degree 8 over GF(2^r), r > 3: f - f(0) must be
/// linearized (a7 = a6 = a5 = a3 = 0) with Dickson determinant
/// det(c_{(i-j) mod r}^(2^j)) != 0, where (c0,c1,c2,c3) = (a1,a2,a4,a8).
/// A nonzero determinant is exactly "no root in F_q^*".
bool is_exceptional_deg8(const Octic& f);

/// A representative satisfying (R1)-(R3):
///   (R1) (a7,a6) in {(1,0),(0,1),(0,0)}
///   (R2) if (a7,a6) = (0,1): a4 = 0, or a4 = omega(a5) when a5 != 0
///   (R3) if a7 = a6 = 0 != a5: a4 = 0 and a5 in {1} (r odd) / {1,e,e^2} (r even)
/// together with the witness taking the original polynomial there.
struct NormalForm {
    Octic octic;
    LinearWitness witness;
};

NormalForm normalize(const Octic& h);

bool satisfies_r1_r2_r3(const Octic& f);

/// Decides linear relatedness of two normal forms with
/// (a7,a6,a5) != (0,0,0). The only nontrivial identifications are
///   (ii)  g(x) = f(x+a5) - f(a5), when (a7,a6) = (0,1), a5(a3+a5^3) != 0
///   (iii) g(x) = t^-8 f(tx) with t a nontrivial cube root of unity,
///         when r is even and a7 = a6 = a4 = 0 != a5.
std::optional<LinearWitness> linearly_related(const NormalForm& f, const NormalForm& g);

/// Exhaustive witness search over all (t, u); s and v are forced for
/// monic polynomials with zero constant term. Oracle for the case split.
std::optional<LinearWitness> related_witness_brute(const Octic& f, const Octic& g);

/// Case-(ii) partner of a (0,1)-shaped normal form: f(x+a5) - f(a5).
Octic shift_partner(const Octic& f);

/// Transversal of the Frobenius orbits on F_q^*: the element with the
/// smallest log code in each orbit {a^(2^j)}.
std::vector<FieldElement> gamma(const FieldCtx& ctx);

struct FrobeniusReduction {
    NormalForm form;  // witness relates frob_lift(input, r - power) to form.octic
    int power;        // j with a5(input) = a5(form)^(2^j)
};

/// For a form with a6 = 1, a5 != 0: replace it by an equivalent-up-to-
/// Frobenius form whose a5 lies in gamma(ctx), re-normalizing (R2).
FrobeniusReduction frobenius_reduce(const NormalForm& f);

}  // namespace pp8
