#pragma once

#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/graph.hpp"

namespace hwp {

/// Two C_n-factors partitioning the layer {±1}x{±d}; needs n even and gcd(d, n) = 1.
Decomposition zigzag_c16_pair(int m, int n, int d);

/// The n column cycles ((0,j), (1,j), ..., (m-1,j)): a C_m-factor of the layer {±1}x{0}.
Decomposition column_cm_factor(int m, int n);

/// Three C_m-factors partitioning {±1}x{±n/4, n/2}; m odd, 4 | n.
Decomposition lemma_quarter(int m, int n);

/// Column step between consecutive base cycles of the two C_{2^l}-factors.
/// Literal is 2^{l-2}, which breaks for l >= 4; Corrected is 2.
enum class Lemma41Step { Corrected, Literal };

/// Two C_{2^l}-factors and one C_m-factor partitioning {±1}x{±1, 2^{l-1}};
/// m odd, m >= 2^{l-1} + 1.
Decomposition lemma_41(int m, int l);
/// Unverified output, for inspecting either step rule.
Decomposition lemma_41_raw(int m, int l, Lemma41Step step);

/// 2^{l-1} C_{2^l}-factors and a 1-factor partitioning {±1}x{2^{l-1}} ∪ mK_{2^l}.
Decomposition lemma_4K8(int m, int l);

/// Two C_16-factors of {±1}x{i} ∪ mI_{i-1} ∪ mI_i, i in {2, 4, 6}.
Decomposition lemma_2_13(int m, int i);
/// Two C_16-factors of {±1}x{-i} ∪ mI_{5+i} ∪ mI_{6+i}, i in {2, 4, 6}.
Decomposition lemma_6_27(int m, int i);
/// Two C_16-factors and a 1-factor of {±1}x{8} ∪ m(I_13 ∪ I_14 ∪ I_15).
Decomposition lemma_4_456(int m);
/// A C_16-factor and a 1-factor of {±1}x{8} ∪ mI'_11.
Decomposition lemma_8_6(int m);
/// Four C_16-factors of {±1}x{±6} ∪ m(I'_12 ∪ ... ∪ I'_15).
Decomposition lemma_6I(int m);

/// The m row copies of the 16-cycle a ∪ b. Throws InvalidArgument if the union
/// is not a single cycle.
Decomposition matching_pair_factor(int m, const TableRef& a, const TableRef& b);
Decomposition matching_pair_factor(int m, int n, const Matching& a, const Matching& b);

/// mI_k (or mI'_k) as a single 1-factor.
Decomposition table_one_factor(int m, const TableRef& ref);

/// Verifies a candidate block against its own host. If it fails and all cycle
/// factors share one length, the one-factors that are still valid are kept and
/// the rest of the host is re-partitioned by exact_cover_fallback; each
/// substituted factor's label records the original violation. Otherwise throws
/// VerificationFailure with the report.
Decomposition finalize_block(Decomposition candidate);

}  // namespace hwp
