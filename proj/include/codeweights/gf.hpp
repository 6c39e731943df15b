#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "codeweights/errors.hpp"

namespace codeweights {

// Residue in [0, p). Elements of the prime field F_p.
struct PrimeElem {
    std::uint32_t value = 0;
    bool operator==(const PrimeElem&) const = default;
};

// Element of F_{p^e} as a coefficient vector over F_p: coeffs[j] is the
// coefficient of x^j, length is always the extension degree e.
struct FFElem {
    std::vector<std::uint32_t> coeffs;
    bool operator==(const FFElem&) const = default;
};

bool is_prime(std::uint64_t n);

// Legendre symbol (c/p) as an integer in {-1, 0, 1}.
int legendre(std::uint64_t c, std::uint32_t p);
inline int legendre(PrimeElem c, std::uint32_t p) { return legendre(c.value, p); }

// 0 for squares mod p, 1 for non-squares. Throws ZeroArgumentError on c = 0.
int cyclotomic_class(PrimeElem c, std::uint32_t p);

// Irreducibility over F_p of a monic polynomial given constant-term-first.
// Root check for degree <= 3, Frobenius gcd test in general.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// Lexicographically smallest monic irreducible of degree e over F_p,
// coefficients compared constant-term-first. Deterministic.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e);

/// The field F_{p^e} = F_p[x]/(modulus). Immutable after construction and
/// safe to share across threads; every operation is a pure function.
class FieldCtx {
public:
    static constexpr std::uint32_t kMaxDegree = 16;

    // Default modulus: lexicographically smallest monic irreducible.
    static FieldCtx make(std::uint32_t p, std::uint32_t e);
    // Explicit modulus override; validates degree, monicity, irreducibility.
    static FieldCtx with_modulus(std::uint32_t p, std::uint32_t e,
                                 std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FFElem zero() const;
    FFElem one() const;
    FFElem from_prime(std::uint64_t c) const;  // embed F_p
    bool is_zero(const FFElem& a) const;

    // Elements indexed 0..q-1 in lexicographic coefficient order, coefficient
    // of x^0 varying fastest: index = sum coeffs[j] * p^j.
    FFElem element(std::uint64_t index) const;
    std::uint64_t index_of(const FFElem& a) const;

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem pow(FFElem base, std::uint64_t n) const;
    FFElem inv(const FFElem& a) const;       // ZeroInverseError on 0
    FFElem frobenius(const FFElem& a) const;  // a^p

    // Absolute trace onto F_p: sum of the e Frobenius conjugates.
    PrimeElem trace(const FFElem& a) const;

    // Quadratic character of F_q extended by 0 at 0: a^{(q-1)/2} as +-1.
    int quad_char_ext(const FFElem& a) const;

    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    void check(const FFElem& a) const;  // FieldMismatchError on foreign elements

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // length e+1, monic
};

// Iterates all q field elements in index order. Parallel callers may instead
// partition [0, q) and use ctx.element(index) directly. Owns a copy of the
// context so a temporary field in a range-for cannot dangle.
class ElementRange {
public:
    explicit ElementRange(FieldCtx ctx) : ctx_(std::move(ctx)) {}

    class iterator {
    public:
        iterator(const FieldCtx* ctx, std::uint64_t index) : ctx_(ctx), index_(index) {}
        FFElem operator*() const { return ctx_->element(index_); }
        iterator& operator++() { ++index_; return *this; }
        bool operator!=(const iterator& other) const { return index_ != other.index_; }

    private:
        const FieldCtx* ctx_;
        std::uint64_t index_;
    };

    iterator begin() const { return {&ctx_, 0}; }
    iterator end() const { return {&ctx_, ctx_.q()}; }

private:
    FieldCtx ctx_;
};

inline ElementRange enumerate(FieldCtx ctx) { return ElementRange(std::move(ctx)); }

}  // namespace codeweights
