#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codeweights/errors.hpp"

namespace codeweights {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity, stored
/// in the canonical basis {1, zeta, ..., zeta^{p-2}} with the reduction
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}). Two values are equal iff
/// their coefficient vectors are equal. Coefficients are arbitrary precision.
class CycInt {
public:
    explicit CycInt(std::uint32_t p) : p_(p), coeffs_(p - 1) {}

    static CycInt integer(std::uint32_t p, BigInt n);
    // Canonical form of zeta_p^k.
    static CycInt root(std::uint32_t p, std::uint64_t k);

    std::uint32_t prime() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const CycInt&) const = default;

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt operator-() const;
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);

    CycInt& scale(const BigInt& n);

    bool is_zero() const;
    // The integer n when this value equals n * zeta^0, otherwise empty.
    std::optional<BigInt> rational_part() const;

    std::string str() const;

private:
    void check_same(const CycInt& other) const {
        if (p_ != other.p_)
            throw PrimeMismatchError("cyclotomic operands over different primes");
    }

    std::uint32_t p_;
    std::vector<BigInt> coeffs_;  // index k holds the zeta^k coordinate
};

// Quadratic Gauss sum over F_p: sum of legendre(v) * zeta^v. Its square is
// the rational integer legendre(-1, p) * p.
CycInt gauss_sum(std::uint32_t p);

// Gaussian period: sum of zeta^x over the squares (i = 0) or non-squares
// (i = 1) of F_p^*.
CycInt gaussian_period(int i, std::uint32_t p);

/// Symbolic power of G = sqrt(p*) with p* = legendre(-1,p) * p. Even powers
/// are exact integers (p*)^{k/2}; odd powers stay symbolic and value() on
/// them throws, so an irrational quantity can never leak into an integer
/// computation unnoticed.
class GaussPower {
public:
    GaussPower(std::uint32_t p, std::uint32_t exponent);

    std::uint32_t prime() const { return p_; }
    std::uint32_t exponent() const { return k_; }
    int star_sign() const { return star_sign_; }  // legendre(-1, p)
    bool is_integral() const { return k_ % 2 == 0; }

    // (p*)^{k/2} for even k; throws OddExponentError otherwise.
    BigInt value() const;

    // Exact cyclotomic value for any parity: (p*)^{floor(k/2)} * G^{k mod 2}.
    CycInt as_cyclotomic() const;

private:
    std::uint32_t p_;
    std::uint32_t k_;
    int star_sign_;
};

inline GaussPower g_power(std::uint32_t p, std::uint32_t exponent) {
    return GaussPower(p, exponent);
}

}  // namespace codeweights
