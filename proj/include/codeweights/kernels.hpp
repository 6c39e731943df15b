#pragma once

#include <cstdint>
#include <vector>

#include "codeweights/gf.hpp"

namespace codeweights {

struct DefiningSet;  // codes.hpp

namespace kernels {

// Brute-force enumeration limit for the exhaustive kernels.
inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 20;

/// Per-field lookup tables shared by the enumeration kernels: base-p digit
/// matrix and trace of every element, indexed by element number.
/// Construction enumerates the whole field once.
struct FieldTables {
    explicit FieldTables(const FieldCtx& ctx);  // FieldTooLargeError past the limit

    std::uint32_t p;
    std::uint32_t e;
    std::uint64_t q;
    std::vector<std::uint32_t> digits;    // q rows of e digits
    std::vector<std::uint32_t> trace_of;  // q entries

    const std::uint32_t* row(std::uint64_t index) const { return digits.data() + index * e; }
};

// index of x^{p^l + 1} for every x, the power appearing in the Weil sums.
std::vector<std::uint32_t> power_map(const FieldCtx& ctx, const FieldTables& t,
                                     std::uint32_t l);

// Histogram over x in F_q of Tr(alpha * x^{p^l+1} + beta * x) in [0, p).
// The Weil sum is then sum_k hist[k] * zeta^k. Serial reference and
// OpenMP-parallel kernel compute identical histograms.
std::vector<std::uint64_t> weil_exponent_histogram_serial(
    const FieldCtx& ctx, const FieldTables& t, const std::vector<std::uint32_t>& powmap,
    const FFElem& alpha, const FFElem& beta);
std::vector<std::uint64_t> weil_exponent_histogram_parallel(
    const FieldCtx& ctx, const FieldTables& t, const std::vector<std::uint32_t>& powmap,
    const FFElem& alpha, const FFElem& beta);

// Raw weight histogram over all q map inputs a (before collapsing the kernel
// of a -> c(a)): hist[w] = #{a : wt(c(a)) = w}, size |D|+1.
//
// The direct kernel evaluates every codeword coordinate Tr(a*x) with field
// multiplications; it is the slow reference the bucket kernels are checked
// against. The bucket kernels group x in D by the coordinate vector
// (Tr(b_0 x), ..., Tr(b_{e-1} x)) over the polynomial basis b_j = x^j, so the
// inner loop is a digit dot product mod p instead of a field multiply.
std::vector<std::uint64_t> weight_histogram_direct_serial(const FieldCtx& ctx,
                                                          const DefiningSet& set);
std::vector<std::uint64_t> weight_histogram_buckets_serial(const FieldCtx& ctx,
                                                           const DefiningSet& set);
std::vector<std::uint64_t> weight_histogram_buckets_parallel(const FieldCtx& ctx,
                                                             const DefiningSet& set);

}  // namespace kernels
}  // namespace codeweights
