#pragma once

#include "ribbon/enumeration.hpp"

namespace ribbon {

// Named verification suites shared by the command-line tool and the
// acceptance runner. Each suite returns a CheckReport whose detail lines
// state what was checked and at what scale, in a fixed order, so identical
// parameters always produce identical reports.

// Placement-count claims for one word: reversal invariance, residue-word
// factorisation at Y = 1, and the height-multiset comparison.
CheckReport suite_claims(const BitWord& w, Int r, Int x_bound);

// Truncated two-sided generating identity for one growth rule: chain pairs
// against the product kernel, coefficientwise.
CheckReport suite_cauchy(GrowthDatum datum, Int r, const Partition& core, Int n_vars, Int m_vars,
                         Int degree_bound);

// Spin-refined pair for the symmetric rule: the up/down commutation
// identity followed by the truncated product identity.
CheckReport suite_qcauchy(Int r, const Partition& core, Int n_vars, Int m_vars, Int degree_bound);

// The same pair for the asymmetric rule, whose product side is binomial.
CheckReport suite_asym_cauchy(Int r, const Partition& core, Int n_vars, Int m_vars,
                              Int degree_bound);

// Growth-diagram counting over an n x n square: n! * r^n diagrams in
// total, refined to n! * (1 + q^2 + ... + q^(2(r-1)))^n by spin.
CheckReport suite_schensted(Int r, const Partition& core, Int n);

// Exhaustive property sweep:
//   A. every square-completion rule round-trips on all shape triples inside
//      a box x box square for each ribbon size up to r_max; the rank
//      equation holds on every instance, the double-spin equation on every
//      spin-rule instance, the r = 1 symmetric spin rule agrees with the
//      plain column rule everywhere, and each rejection by the asymmetric
//      rule is confirmed against its level profile;
//   B. the symmetric spin rule restricted to single-ribbon covers agrees
//      with the single-ribbon bumping correspondence;
//   C. the placement recursion agrees with direct search on every word of
//      length <= w_max for ribbon sizes up to 4.
// jobs > 1 spreads independent chunks over threads; jobs <= 0 picks the
// hardware width. The merged report does not depend on the thread count.
CheckReport suite_properties(Int box, Int r_max, Int w_max, Int jobs = 0);

}  // namespace ribbon
