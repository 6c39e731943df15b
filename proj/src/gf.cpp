#include "codeweights/gf.hpp"

#include <algorithm>
#include <cstdint>

namespace codeweights {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Dense polynomials over F_p, constant term first. Only used for the
// irreducibility test; field arithmetic proper lives in FieldCtx.
using Poly = std::vector<std::uint64_t>;

int degree(const Poly& a) {
    for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d)
        if (a[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t dm = mod.size() - 1;  // mod is monic
    while (r.size() > dm) {
        const std::uint64_t lead = r.back();
        if (lead != 0) {
            const std::size_t off = r.size() - 1 - dm;
            for (std::size_t k = 0; k < dm; ++k)
                r[off + k] = (r[off + k] + (p - lead % p) * mod[k]) % p;
        }
        r.pop_back();
    }
    r.resize(dm, 0);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& mod, std::uint64_t p) {
    Poly r(mod.size() - 1, 0);
    r[0] = 1;
    while (exp) {
        if (exp & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        exp >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    while (degree(b) >= 0) {
        int da = degree(a);
        const int db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        const std::uint64_t inv = powmod(b[static_cast<std::size_t>(db)], p - 2, p);
        while (da >= db) {
            const std::uint64_t lead = a[static_cast<std::size_t>(da)];
            if (lead != 0) {
                const std::uint64_t c = mulmod(lead, inv, p);
                for (int k = 0; k <= db; ++k) {
                    auto& ak = a[static_cast<std::size_t>(da - db + k)];
                    ak = (ak + (p - c) * b[static_cast<std::size_t>(k)]) % p;
                }
            }
            --da;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(std::uint64_t c, std::uint32_t p) {
    c %= p;
    if (c == 0) return 0;
    return powmod(c, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int cyclotomic_class(PrimeElem c, std::uint32_t p) {
    if (c.value % p == 0)
        throw ZeroArgumentError("cyclotomic_class: zero has no class");
    return legendre(c, p) == 1 ? 0 : 1;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    const std::size_t e = poly.size() - 1;
    if (poly.empty() || poly.back() != 1) return false;
    if (e == 0) return false;
    if (e == 1) return true;
    // A reducible polynomial of degree <= 3 has a root.
    for (std::uint64_t c = 0; c < p; ++c) {
        std::uint64_t v = 0;
        for (std::size_t j = poly.size(); j-- > 0;) v = (v * c + poly[j]) % p;
        if (v == 0) return false;
    }
    if (e <= 3) return true;
    // gcd(x^{p^k} - x, poly) = 1 for 1 <= k <= e/2 rules out every factor of
    // degree <= e/2, hence any nontrivial factorization.
    Poly mod(poly.begin(), poly.end());
    Poly xq(e, 0);
    xq[1] = 1;  // x
    for (std::size_t k = 1; k <= e / 2; ++k) {
        xq = poly_powmod(xq, p, mod, p);
        Poly diff = xq;
        diff[1] = (diff[1] + p - 1) % p;
        const Poly g = poly_gcd(mod, diff, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint32_t> cand(e + 1, 0);
    cand[e] = 1;
    // Count through the non-leading coefficients with c_{e-1} fastest, which
    // enumerates (c_0, ..., c_{e-1}) in lexicographic order, c_0 compared first.
    while (true) {
        if (is_irreducible(cand, p)) return cand;
        std::size_t j = e;
        while (j-- > 0) {
            if (++cand[j] < p) break;
            cand[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            throw Error("smallest_irreducible: exhausted candidates");  // unreachable
    }
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t k = 0; k < e_; ++k) {
        if (q_ > (std::uint64_t{1} << 62) / p_)
            throw FieldTooLargeError("field order does not fit in 63 bits");
        q_ *= p_;
    }
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t e) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NonPrimeError("p must be an odd prime");
    if (e < 1) throw DegreeTooLargeError("extension degree must be at least 1");
    if (e > kMaxDegree) throw DegreeTooLargeError("extension degree exceeds 16");
    return FieldCtx(p, e, smallest_irreducible(p, e));
}

FieldCtx FieldCtx::with_modulus(std::uint32_t p, std::uint32_t e,
                                std::vector<std::uint32_t> modulus) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NonPrimeError("p must be an odd prime");
    if (e < 1 || e > kMaxDegree) throw DegreeTooLargeError("extension degree out of range");
    if (modulus.size() != e + 1 || modulus[e] != 1)
        throw InvalidModulusError("modulus must be monic of degree e");
    for (auto c : modulus)
        if (c >= p) throw InvalidModulusError("modulus coefficient out of range");
    if (!is_irreducible(modulus, p))
        throw InvalidModulusError("modulus is reducible");
    return FieldCtx(p, e, std::move(modulus));
}

void FieldCtx::check(const FFElem& a) const {
    if (a.coeffs.size() != e_)
        throw FieldMismatchError("element does not belong to this field");
    for (auto c : a.coeffs)
        if (c >= p_) throw FieldMismatchError("element coefficient out of range");
}

FFElem FieldCtx::zero() const { return FFElem{std::vector<std::uint32_t>(e_, 0)}; }

FFElem FieldCtx::one() const {
    FFElem r = zero();
    r.coeffs[0] = 1;
    return r;
}

FFElem FieldCtx::from_prime(std::uint64_t c) const {
    FFElem r = zero();
    r.coeffs[0] = static_cast<std::uint32_t>(c % p_);
    return r;
}

bool FieldCtx::is_zero(const FFElem& a) const {
    check(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                       [](std::uint32_t c) { return c == 0; });
}

FFElem FieldCtx::element(std::uint64_t index) const {
    FFElem r = zero();
    for (std::uint32_t j = 0; j < e_; ++j) {
        r.coeffs[j] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return r;
}

std::uint64_t FieldCtx::index_of(const FFElem& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (std::uint32_t j = e_; j-- > 0;) idx = idx * p_ + a.coeffs[j];
    return idx;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
    check(a);
    check(b);
    FFElem r = zero();
    for (std::uint32_t j = 0; j < e_; ++j) {
        std::uint32_t s = a.coeffs[j] + b.coeffs[j];
        if (s >= p_) s -= p_;
        r.coeffs[j] = s;
    }
    return r;
}

FFElem FieldCtx::neg(const FFElem& a) const {
    check(a);
    FFElem r = zero();
    for (std::uint32_t j = 0; j < e_; ++j)
        r.coeffs[j] = a.coeffs[j] == 0 ? 0 : p_ - a.coeffs[j];
    return r;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
    check(a);
    check(b);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (a.coeffs[i] == 0) continue;
        const std::uint64_t ai = a.coeffs[i];
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + ai * b.coeffs[j]) % p_;
    }
    for (std::uint32_t d = 2 * e_ - 2; d >= e_ && d < 2 * e_; --d) {
        const std::uint64_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        // x^d = x^{d-e} * (x^e mod modulus)
        for (std::uint32_t k = 0; k < e_; ++k)
            prod[d - e_ + k] = (prod[d - e_ + k] + (p_ - modulus_[k] % p_) * lead) % p_;
    }
    FFElem r = zero();
    for (std::uint32_t j = 0; j < e_; ++j) r.coeffs[j] = static_cast<std::uint32_t>(prod[j]);
    return r;
}

FFElem FieldCtx::pow(FFElem base, std::uint64_t n) const {
    check(base);
    FFElem r = one();
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FFElem FieldCtx::inv(const FFElem& a) const {
    if (is_zero(a)) throw ZeroInverseError("inverse of zero");
    return pow(a, q_ - 2);
}

FFElem FieldCtx::frobenius(const FFElem& a) const { return pow(a, p_); }

PrimeElem FieldCtx::trace(const FFElem& a) const {
    check(a);
    FFElem acc = a;
    FFElem conj = a;
    for (std::uint32_t k = 1; k < e_; ++k) {
        conj = frobenius(conj);
        acc = add(acc, conj);
    }
    // The trace lands in the prime subfield.
    for (std::uint32_t j = 1; j < e_; ++j)
        if (acc.coeffs[j] != 0) throw Error("trace left the prime subfield");
    return PrimeElem{acc.coeffs[0]};
}

int FieldCtx::quad_char_ext(const FFElem& a) const {
    if (is_zero(a)) return 0;
    const FFElem r = pow(a, (q_ - 1) / 2);
    return r == one() ? 1 : -1;
}

}  // namespace codeweights
