#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "codeweights/cyclotomic.hpp"
#include "codeweights/gf.hpp"

namespace codeweights {

/// Parameters of the Weil sum S(alpha, beta) = sum over x in F_q of
/// zeta_p^{Tr(alpha * x^{p^l+1} + beta * x)}, alpha nonzero.
struct WeilParams {
    FieldCtx ctx;
    FFElem alpha;
    FFElem beta;
    std::uint32_t l = 1;
    std::uint32_t s = 1;  // gcd(l, e)

    static WeilParams make(const FieldCtx& ctx, FFElem alpha, FFElem beta,
                           std::uint32_t l);
};

// Exact sum by full enumeration of F_q. The ground-truth oracle; the closed
// forms below are the formulas under test.
CycInt weil_sum_bruteforce(const WeilParams& params);

// Closed-form evaluation for l = 1: the permutation-polynomial branch for odd
// e, the +-p^m / +-p^{m+s} split for even e, zero when the associated affine
// equation is unsolvable. Must equal weil_sum_bruteforce everywhere.
CycInt weil_sum_closed(const WeilParams& params);

/// Solution set of alpha^{p^l} X^{p^{2l}} + alpha X = -beta^{p^l}, found by
/// exhaustive enumeration. The count is 0, 1, or p^{2s}.
struct SolvabilityReport {
    bool solvable = false;
    std::vector<FFElem> solutions;
    std::uint64_t count = 0;
};

SolvabilityReport solve_affine(const FieldCtx& ctx, const FFElem& alpha,
                               const FFElem& beta, std::uint32_t l);

/// Same equation solved through the e x e matrix of the F_p-linear map, the
/// fast path used inside weil_sum_closed. All solutions are
/// particular + span(kernel_basis).
struct LinearSolveResult {
    bool solvable = false;
    FFElem particular;
    std::vector<FFElem> kernel_basis;
};

LinearSolveResult solve_linearized(const FieldCtx& ctx, const FFElem& alpha,
                                   const FFElem& beta, std::uint32_t l);

// The inner character sum the code lengths hinge on:
// delta_1,i = sum over c in C_i, y in F_p^* of zeta^{-cy} * S(y, -y).
// Brute force; always a rational integer (NonRationalSumError otherwise).
BigInt delta1(const FieldCtx& ctx, int class_index);

// Closed form of delta_1,i, split over (e parity, e mod 4, p | e).
BigInt delta1_closed(std::uint32_t p, std::uint32_t e, int class_index);

// sum over c in C_i, z in F_p^* of sum_x zeta^{Tr(a z x)}; identically zero
// for a != 0 by character orthogonality. Kept brute force as a cross-check.
CycInt delta2_bruteforce(const FieldCtx& ctx, int class_index, const FFElem& a);

}  // namespace codeweights
