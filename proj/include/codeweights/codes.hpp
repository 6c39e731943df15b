#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "codeweights/cyclotomic.hpp"
#include "codeweights/gf.hpp"

namespace codeweights {

/// The defining set D_i = {x in F_q : Tr(x^{p+1} - x) lies in the squares
/// (i = 0) or non-squares (i = 1) of F_p^*}, listed in field enumeration
/// order so codewords are reproducible byte for byte.
struct DefiningSet {
    int class_index = 0;
    std::vector<FFElem> elements;
};

DefiningSet defining_set(const FieldCtx& ctx, int class_index);

// c(a) = (Tr(a*x))_{x in D}, coordinates in defining-set order.
std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const FFElem& a,
                                    const DefiningSet& set);

/// Exact weight distribution of the code {c(a) : a in F_q} together with its
/// parameters. counts maps Hamming weight to the number of codewords of that
/// weight; multiplicities sum to p^k with exactly one word of weight 0.
struct WeightDistribution {
    std::uint64_t n = 0;  // code length = |D|
    std::uint32_t k = 0;  // dimension (computed, not assumed equal to e)
    std::uint64_t d = 0;  // minimum nonzero weight; 0 for the zero code
    std::uint32_t p = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
};

struct WeightOptions {
    std::uint64_t work_budget = 1'000'000'000;  // scalar ops, q * |D|
    bool parallel = true;
};

// Enumerates all p^e inputs with the bucket kernel and collapses the kernel
// of a -> c(a), so k comes out of the run instead of being trusted.
WeightDistribution weight_distribution(const FieldCtx& ctx, const DefiningSet& set,
                                       const WeightOptions& opts = {});

// Ascending (weight, multiplicity) pairs, zero multiplicities omitted,
// weight-0 term included.
std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerator_polynomial(
    const WeightDistribution& wd);

std::string enumerator_string(const WeightDistribution& wd);

// CSV serialization: header row, then one "weight,multiplicity" row per
// weight in ascending order.
std::string to_csv(const WeightDistribution& wd);

enum class GriesmerClass {
    kOptimalCandidate,        // no [n,k,d+1] code passes the bound
    kAlmostOptimalCandidate,  // [n,k,d+1] passes but [n,k,d+2] does not
    kInconclusive,
};

std::string to_string(GriesmerClass c);

/// Griesmer bound n >= sum ceil(d / p^i). The bound is necessary, never
/// sufficient, so the classification only ever names a candidate.
struct GriesmerVerdict {
    std::uint64_t bound_n = 0;
    bool passes = false;
    bool next_passes = false;  // whether [n,k,d+1] still satisfies the bound
    GriesmerClass classification = GriesmerClass::kInconclusive;
};

GriesmerVerdict griesmer(const WeightDistribution& wd);

// Exact rational comparison wt_min/wt_max > (p-1)/p, no floating point.
struct WtRatio {
    std::uint64_t wt_min = 0;
    std::uint64_t wt_max = 0;
    bool exceeds = false;
};

WtRatio wt_ratio(const WeightDistribution& wd);

}  // namespace codeweights
