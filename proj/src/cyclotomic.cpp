#include "codeweights/cyclotomic.hpp"

#include <sstream>

#include "codeweights/gf.hpp"

namespace codeweights {

CycInt CycInt::integer(std::uint32_t p, BigInt n) {
    CycInt r(p);
    r.coeffs_[0] = std::move(n);
    return r;
}

CycInt CycInt::root(std::uint32_t p, std::uint64_t k) {
    CycInt r(p);
    k %= p;
    if (k == p - 1) {
        for (auto& c : r.coeffs_) c = -1;
    } else {
        r.coeffs_[k] = 1;
    }
    return r;
}

CycInt& CycInt::operator+=(const CycInt& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const std::uint32_t p = a.p_;
    // Convolve with exponents mod p, then eliminate the zeta^{p-1} slot via
    // the minimal-polynomial relation.
    std::vector<BigInt> acc(p);
    for (std::uint32_t i = 0; i < p - 1; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j < p - 1; ++j) {
            if (b.coeffs_[j] == 0) continue;
            acc[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    CycInt r(p);
    const BigInt& top = acc[p - 1];
    for (std::uint32_t k = 0; k < p - 1; ++k) r.coeffs_[k] = acc[k] - top;
    return r;
}

CycInt& CycInt::scale(const BigInt& n) {
    for (auto& c : coeffs_) c *= n;
    return *this;
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> CycInt::rational_part() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return std::nullopt;
    return coeffs_[0];
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (any) os << (coeffs_[k] > 0 ? " + " : " - ");
        else if (coeffs_[k] < 0) os << "-";
        const BigInt mag = abs(coeffs_[k]);
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

CycInt gauss_sum(std::uint32_t p) {
    CycInt g(p);
    for (std::uint32_t v = 1; v < p; ++v) {
        CycInt term = CycInt::root(p, v);
        if (legendre(v, p) == -1) term = -term;
        g += term;
    }
    return g;
}

CycInt gaussian_period(int i, std::uint32_t p) {
    CycInt r(p);
    const int want = i == 0 ? 1 : -1;
    for (std::uint32_t v = 1; v < p; ++v)
        if (legendre(v, p) == want) r += CycInt::root(p, v);
    return r;
}

GaussPower::GaussPower(std::uint32_t p, std::uint32_t exponent)
    : p_(p), k_(exponent), star_sign_(legendre(p - 1, p)) {}

BigInt GaussPower::value() const {
    if (!is_integral())
        throw OddExponentError("odd power of G has no integer value");
    BigInt star = star_sign_ > 0 ? BigInt(p_) : BigInt(-static_cast<std::int64_t>(p_));
    return pow(star, k_ / 2);
}

CycInt GaussPower::as_cyclotomic() const {
    BigInt star = star_sign_ > 0 ? BigInt(p_) : BigInt(-static_cast<std::int64_t>(p_));
    BigInt even = pow(star, k_ / 2);
    if (is_integral()) return CycInt::integer(p_, even);
    CycInt g = gauss_sum(p_);
    g.scale(even);
    return g;
}

}  // namespace codeweights
