#ifndef PB_BINOMIAL_HPP
#define PB_BINOMIAL_HPP

#include <vector>

#include "pb/gf.hpp"

namespace pb {

/// The binomial f = a x + x^{r(q-1)+1} over F_{q^2}.  The context must be
/// GF(p, 2n) for q = p^n; a must be nonzero; r an odd prime.
struct BinomialSpec {
    const FieldCtx* F = nullptr;
    u32 q = 0;
    u32 r = 0;
    FieldElem a;
    u64 e = 0;  // r(q-1) + 1

    BinomialSpec(const FieldCtx& ctx, u32 q_, u32 r_, FieldElem a_);

    const FieldCtx& field() const { return *F; }
};

/// b = a^{(q+1)/r} together with its representative a.  Defined only when
/// r | q+1; b then lies in the subgroup of order r(q-1).
struct BClass {
    FieldElem b;
    FieldElem representative;
};

FieldElem eval_f(const BinomialSpec& spec, FieldElem x);

/// Ground-truth permutation oracle: occupancy table over canonical
/// indices, short-circuiting on the first collision.
bool is_permutation(const BinomialSpec& spec);

/// True iff 0 is the only root of f.  Uses a^{(q+1)/r} != 1 when r | q+1
/// (the sign on a is absorbed: (q+1)/r is even for odd q), brute force
/// otherwise.
bool zero_only_root(const BinomialSpec& spec);

BClass b_class(const BinomialSpec& spec);

struct ClassRow {
    FieldElem b;
    FieldElem a_rep;
    u32 a_rep_power = 0;  // a_rep = g^power for the canonical generator g
    bool is_pp = false;
};

/// One is_permutation call per distinct b value; representatives are the
/// first occurrence while walking a = g^t, t = 0, 1, ...  Returns exactly
/// r(q-1) rows sorted by the canonical index of b.
std::vector<ClassRow> classify_classes(const FieldCtx& F, u32 q, u32 r, unsigned jobs = 1);

}  // namespace pb

#endif
