#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codeweights/codes.hpp"
#include "codeweights/cyclotomic.hpp"
#include "codeweights/gf.hpp"

namespace codeweights {

/// Everything the closed-form dispatch keys on for a case (p, e, i).
struct CaseKey {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    int i = 0;
    bool e_odd = false;
    int e_mod4 = 0;
    bool p_divides_e = false;
    int legendre_e = 0;      // (e/p), 0 when p | e
    int legendre_neg_e = 0;  // (-e/p)
    int eta_minus1 = 0;      // (-1/p)
};

// Validates the case and derives the dispatch flags. Throws OutOfScopeError
// for e < 2 and NonPrimeError for even or composite p.
CaseKey classify_case(std::uint32_t p, std::uint32_t e, int i);

// Closed-form family number 1..9 whose hypothesis (keyed on (e/p)) the case
// satisfies; its parameter formula gives the claimed length.
int theorem_number(const CaseKey& key);

// Table 1..9 carrying the distribution, keyed on (-e/p). Differs from
// theorem_number exactly when (-1/p) = -1.
int table_number(const CaseKey& key);

// Claimed code length of the dispatched family.
BigInt length_claimed(const CaseKey& key);

// Length via the dedicated closed form (the delta_1 route); equals
// |defining_set| and length_claimed on every case.
BigInt length_closed(std::uint32_t p, std::uint32_t e, int i);

/// One table row, evaluated verbatim in exact arithmetic.
struct PredictedRow {
    BigInt weight = 0;
    BigInt multiplicity = 0;
    bool valid = false;  // both expressions evaluated to integers
    std::string weight_expr;
    std::string mult_expr;
    std::string anomaly;  // nonempty when this row is flagged
};

/// A theorem table instantiated at (p, e, i). Rows are kept verbatim, never
/// repaired; anything negative, non-integer, duplicated, or requiring an odd
/// power of G lands in anomalies instead of aborting.
struct PredictedDistribution {
    CaseKey key;
    int theorem = 0;
    int table = 0;
    BigInt claimed_n;
    std::uint32_t claimed_k = 0;
    std::vector<PredictedRow> rows;  // first row is the zero row
    std::vector<std::string> anomalies;
};

PredictedDistribution predicted_table(std::uint32_t p, std::uint32_t e, int i);

/// Counting functions over F_q (and over F_p^* for the slope count), each
/// with a brute-force definition and a closed form that must agree.
enum class Count {
    kQuadZeroLinZero,      // Tr(x^{p+1}) = 0 and Tr(x) = 0
    kQuadZeroLinNonzero,   // Tr(x^{p+1}) = 0 and Tr(x) != 0
    kQuadClassLinZero,     // eta(Tr(x^{p+1})) = (-1)^l and Tr(x) = 0
    kQuadClassLinNonzero,  // eta(Tr(x^{p+1})) = (-1)^l and Tr(x) != 0
    kRatioDegenerate,      // both traces nonzero, Tr(x)^2 = e * Tr(x^{p+1})
    kRatioSlope,           // both traces nonzero, Tr(x)^2 = s * Tr(x^{p+1})
    kSlopeClassCount,      // s in F_p^*, s != e, with the residue pair (k, j)
    kQuadClassRatioClass,  // Tr(x^{p+1}) in C_k, slope conditions, ratio in C_j
};

struct CountArgs {
    int l = 0;
    int k = 0;
    int j = 0;
    std::uint32_t s = 0;
};

// Exact closed form; BranchUnavailableError where no formula is stated
// (the ratio/slope counts need p not dividing e, the slope needs s != e).
BigInt counting_closed(Count kind, std::uint32_t p, std::uint32_t e,
                       const CountArgs& args = {});

// Literal set-membership count by enumeration.
std::uint64_t counting_bruteforce(Count kind, const FieldCtx& ctx,
                                  const CountArgs& args = {});

enum class Verdict { kMatch, kMismatch, kFormulaAnomaly };

std::string to_string(Verdict v);

struct RowDiff {
    BigInt weight;
    BigInt predicted;    // 0 when the table has no such weight
    BigInt enumerated;   // 0 when the code has no such weight
};

/// Result of diffing a verbatim table against exhaustive enumeration.
/// verdict is kMatch exactly when the two weight -> multiplicity maps are
/// identical after dropping predicted rows of multiplicity zero.
struct VerifyReport {
    CaseKey key;
    PredictedDistribution predicted;
    WeightDistribution enumerated;
    GriesmerVerdict griesmer_verdict;
    WtRatio ratio;
    bool parameter_match = false;  // claimed [n, e] vs enumerated [n, k]
    std::vector<RowDiff> rows_matched;
    std::vector<RowDiff> rows_mismatched;
    Verdict verdict = Verdict::kMismatch;
};

VerifyReport verify(const FieldCtx& ctx, int i, const WeightOptions& opts = {});
VerifyReport verify(std::uint32_t p, std::uint32_t e, int i,
                    const WeightOptions& opts = {});

}  // namespace codeweights
