#pragma once

#include "qweyl/freealg.hpp"

#include <functional>
#include <vector>

namespace qweyl {

/// A vector p = (p1..p_len) of nonnegative integers; "p |- k" when |p| = k.
using Composition = std::vector<unsigned>;

/**
 * Visits every composition p of `total` into `parts` entries with
 * p_i <= bound(i, p_1 + ... + p_{i-1}), in lexicographic order.  Zero parts
 * admit only the empty composition of 0.
 */
void for_each_bounded_composition(std::size_t parts, unsigned total,
                                  const std::function<unsigned(std::size_t, unsigned)> &bound,
                                  const std::function<void(const Composition &)> &visit);

// Normal coordinates c(a,b,k): y^a x^b = sum_k c(a,b,k) x^(b+k) y^(a-k).
// Every variant returns the zero polynomial when k > a.

/// Three-case recursion from c(0,b,k) = delta_{0,k}.  Memoized per thread.
QPoly c_recursive(unsigned a, unsigned b, unsigned k);

/// [b]^(k) q^((a-k)b) times the sum over k-subsets S of {1..a} of
/// q^(sum over i not in S of |S ∩ [1,i-1]|).  Requires b >= 1 (throws
/// std::invalid_argument) and a <= limits.subset_a (throws GuardError).
QPoly c_subsets(unsigned a, unsigned b, unsigned k, const Limits &limits = default_limits());

enum class TFormPrefactor {
  Rising,     // [b]^(k)
  ShiftedBase // [b-1]^(k), as the chain formula is sometimes printed
};

/// Sum over chains 1 <= t1 < ... < tk <= a of q^(sum_s s (t_{s+1} - t_s - 1))
/// with t_{k+1} = a + 1, times the prefactor and q^((a-k)b).  Same
/// preconditions as c_subsets.
QPoly c_tform(unsigned a, unsigned b, unsigned k, TFormPrefactor prefactor = TFormPrefactor::Rising,
              const Limits &limits = default_limits());

/// Coefficient of x^(b+k) y^(a-k) in normal_order(y^a x^b).
QPoly c_oracle(unsigned a, unsigned b, unsigned k, const Limits &limits = default_limits());

// Normal polynomials N(A,k,q): prod_i x^ai y^bi = sum_k N(A,k,q) x^(|a|+k) y^(|b|-k).
// All variants require a nonempty A (std::invalid_argument otherwise) and
// return zero for k > |b|.

/// sum over p |- k, p_i <= b_i, of prod_{i<n} c(b_i, |a_{>i}| + |p_{>i}|, p_i).
QPoly npoly_q(const MonomialSeq &seq, unsigned k);

/// sum over p |- k, p_i <= |b_{<=i}| - |p_{<i}|, of
/// prod_{i<n} c(|b_{<=i}| - |p_{<i}|, a_{i+1}, p_i).
QPoly npoly_q_alt(const MonomialSeq &seq, unsigned k);

/// Coefficient read off monomial(A).
QPoly npoly_oracle(const MonomialSeq &seq, unsigned k, const Limits &limits = default_limits());

/// q = 1 value via binomials and rising factorials:
/// sum over p |- k of prod_{i<n} C(b_i, p_i) (|a_{>i}| + |p_{>i}|)^(p_i).
BigInt npoly_q1(const MonomialSeq &seq, unsigned k);

/**
 * Counts maps f from F = ⊔F_i (|F_i| = a_i) to subsets of E = ⊔E_j
 * (|E_j| = b_j) with pairwise disjoint images, y in f(x), x in F_i, y in E_j
 * implying j < i, and total image size k.  Direct enumeration over which
 * element of F (if any) receives each element of E.  Throws GuardError when
 * |a| + |b| exceeds limits.map_total.
 */
BigInt mk_count(const MonomialSeq &seq, unsigned k, const Limits &limits = default_limits());

/// mk_count for every k in 0..|b| from a single enumeration.
std::vector<BigInt> mk_counts(const MonomialSeq &seq, const Limits &limits = default_limits());

} // namespace qweyl
