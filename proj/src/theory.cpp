#include "codeweights/theory.hpp"

#include <map>
#include <sstream>

namespace codeweights {

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

// Every table entry is a sum of terms (rational coefficient) * G^k; the
// p-powers are folded into the coefficient. Evaluation is exact, and a term
// demanding an odd power of G or a non-integer total is an anomaly, not a
// crash.
struct Term {
    BigRational coeff;
    std::uint32_t g_exp = 0;
};

struct Expr {
    std::vector<Term> terms;
};

BigRational rpow(std::uint32_t p, int k) {
    BigInt num = 1, den = 1;
    for (int j = 0; j < (k >= 0 ? k : -k); ++j) (k >= 0 ? num : den) *= p;
    return BigRational(num, den);
}

struct Eval {
    std::optional<BigInt> value;
    std::string anomaly;
};

Eval eval_expr(const Expr& ex, std::uint32_t p) {
    BigRational total = 0;
    for (const Term& t : ex.terms) {
        try {
            total += t.coeff * BigRational(GaussPower(p, t.g_exp).value());
        } catch (const OddExponentError&) {
            return {std::nullopt, "odd power of G"};
        }
    }
    if (denominator(total) != 1) return {std::nullopt, "non-integer value"};
    return {numerator(total), {}};
}

std::string render(const Expr& ex) {
    std::ostringstream os;
    for (std::size_t t = 0; t < ex.terms.size(); ++t) {
        if (t > 0) os << " + ";
        os << "(" << ex.terms[t].coeff << ")";
        if (ex.terms[t].g_exp > 0) os << "*G^" << ex.terms[t].g_exp;
    }
    if (ex.terms.empty()) os << "0";
    return os.str();
}

struct RowSpec {
    Expr weight;
    Expr mult;
};

// The nine closed-form tables, transcribed verbatim. Index 5/8 are the
// minus-sign variants dispatched when (-e/p) = (-1)^i, 6/9 the plus-sign
// ones dispatched on (-e/p) = (-1)^{1-i}.
std::vector<RowSpec> table_rows(const CaseKey& key, int table) {
    const std::uint32_t p = key.p;
    const std::uint32_t e = key.e;
    const int si = key.i == 0 ? 1 : -1;  // (-1)^i
    const int em1 = key.eta_minus1;
    auto R = [](BigInt num, BigInt den = 1) { return BigRational(num, den); };
    const BigInt P = p;
    const BigRational base = R((P - 1) * (P - 1), 2) * rpow(p, static_cast<int>(e) - 2);

    std::vector<RowSpec> rows;
    rows.push_back({Expr{{{BigRational(0), 0}}}, Expr{{{BigRational(1), 0}}}});
    auto row = [&](Expr w, Expr m) { rows.push_back({std::move(w), std::move(m)}); };

    switch (table) {
        case 1: {
            const BigRational h = R(si * (P - 1), 2);  // (-1)^i (p-1)/2
            row({{{base, 0}}}, {{{rpow(p, e - 2) - 1, 0}}});
            row({{{base, 0}, {h, e - 1}}}, {{{R(P - 1) * rpow(p, e - 2), 0}}});
            row({{{base, 0}, {h, e - 1}, {h, e - 3}}},
                {{{R(P - 1, 2) * rpow(p, e - 2), 0},
                  {-h, e - 1},
                  {R((1 - em1) * (P - 1) * (P - 1), 4) * rpow(p, e - 2), 0}}});
            row({{{base, 0}, {h, e - 1}, {-h, e - 3}}},
                {{{R(P - 1, 2) * rpow(p, e - 1), 0},
                  {h, e - 1},
                  {R((1 + em1) * (P - 1) * (P - 1), 4) * rpow(p, e - 2), 0}}});
            row({{{base, 0}, {h, e - 1}, {R(-si * (P + 1), 2), e + 3}}},
                {{{base, 0}}});
            break;
        }
        case 2: {
            const BigRational g1 = R(-si);                    // -(-1)^i G^{e-1}
            const BigRational g3 = R(si * em1 * (P - 1), 2);  // (-1)^i eta(-1)(p-1)/2
            row({{{base, 0}}},
                {{{rpow(p, e - 2) - 1, 0}, {R(si * em1 * (P - 1)), e - 3}}});
            row({{{base, 0}, {g1, e - 1}}},
                {{{R(P - 1) * rpow(p, e - 2), 0}, {R(-si * em1 * (P - 1)), e - 3}}});
            row({{{base, 0}, {g1, e - 1}, {-g3, e - 3}}},
                {{{R((P - 1) * (P - 1), 4) * rpow(p, e - 2), 0},
                  {R(-si * em1 * (P - 1) * (P - 1), 4), e - 3}}});
            row({{{base, 0}, {g1, e - 1}, {g3, e - 3}}},
                {{{R((P - 1) * (P + 3), 4) * rpow(p, e - 2), 0},
                  {R(si * em1 * 3 * (P - 1) * (P - 1), 4), e - 3}}});
            row({{{base, 0}, {g1, e - 1}, {R(si * em1 * (P + 1), 2), e - 3}}},
                {{{R(P * P - 1, 4) * rpow(p, e - 2), 0},
                  {R(-si * em1 * (P * P - 1), 4), e - 3}}});
            row({{{base, 0}, {g1, e - 1}, {R(-si * em1 * (P + 1), 2), e - 3}}},
                {{{R((P - 1) * (P - 3), 4) * rpow(p, e - 2), 0},
                  {R(-si * em1 * (P - 1) * (P - 3), 4), e - 3}}});
            break;
        }
        case 3: {
            const BigRational g3 = R(si * em1 * (P - 1), 2);
            row({{{base, 0}}}, {{{rpow(p, e - 1) - 1, 0}}});
            row({{{base, 0}, {g3, e - 3}}},
                {{{R(P * P - 1, 4) * rpow(p, e - 2), 0},
                  {R(si * em1 * (P * P - 1), 4), e - 3}}});
            row({{{base, 0}, {-g3, e - 3}}},
                {{{R(P * P - 1, 4) * rpow(p, e - 2), 0},
                  {R(-si * em1 * (P - 1) * (3 * P - 1), 4), e - 3}}});
            row({{{base, 0}, {R(-si * (P + 1), 2), e - 3}}},
                {{{R((P - 1) * (P - 1), 4) * rpow(p, e - 2), 0},
                  {R(si * em1 * (P - 1) * (P - 1), 4), e - 3}}});
            row({{{base, 0}, {R(si * (P + 1), 2), e - 3}}},
                {{{R((P - 1) * (P - 1), 4) * rpow(p, e - 2), 0},
                  {R(si * em1 * (P - 1) * (P - 1), 4), e - 3}}});
            break;
        }
        case 4: {
            const int h = static_cast<int>(e) / 2;
            row({{{base, 0}}},
                {{{R(P + 1, 2) * rpow(p, e - 2) - 1 - R(P - 1, 2) * rpow(p, h - 1), 0}}});
            row({{{base + R(P - 1, 2) * rpow(p, h - 1), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 2), 0}}});
            row({{{base + R(P - 1) * rpow(p, h - 1), 0}}},
                {{{R(P - 1, 2) * rpow(p, e - 2) + R(P - 1, 2) * rpow(p, h - 1), 0}}});
            row({{{base + R(P - 3, 2) * rpow(p, h - 1), 0}}},
                {{{base, 0}}});
            break;
        }
        case 5: {
            const int h = static_cast<int>(e) / 2;
            row({{{base, 0}}}, {{{rpow(p, e - 2) - 1, 0}}});
            row({{{base - R(P + 1, 2) * rpow(p, h - 1), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 2) - R(P - 1) * rpow(p, h - 1), 0}}});
            row({{{base - R(P + 3, 2) * rpow(p, h - 1), 0}}},
                {{{R((P - 1) * (P - 3), 4) * (rpow(p, e - 2) - rpow(p, h - 1)), 0}}});
            row({{{base - R(P - 1, 2) * rpow(p, h - 1), 0}}},
                {{{R(P * P - 1, 4) * (rpow(p, e - 2) + rpow(p, h - 1)), 0}}});
            row({{{base - rpow(p, h - 1), 0}}}, {{{R(P - 1) * rpow(p, e - 2), 0}}});
            break;
        }
        case 6: {
            const int h = static_cast<int>(e) / 2;
            row({{{base, 0}}}, {{{rpow(p, e - 1) - 1, 0}}});
            row({{{base + R(P - 1, 2) * rpow(p, h - 1), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 2), 0}}});
            row({{{base + R(P - 3, 2) * rpow(p, h - 1), 0}}},
                {{{R((P - 1) * (P - 1), 4) * (rpow(p, e - 2) - rpow(p, h - 1)), 0}}});
            row({{{base + R(P + 1, 2) * rpow(p, h - 1), 0}}},
                {{{R((P - 1) * (P - 1), 4) * (rpow(p, e - 2) + rpow(p, h - 1)), 0}}});
            break;
        }
        case 7: {
            const int h = static_cast<int>(e) / 2;
            row({{{base + R((P - 1) * (P - 1), 2) * rpow(p, h - 1), 0}}},
                {{{rpow(p, e) - rpow(p, e - 2), 0}}});
            row({{{base, 0}}},
                {{{R(P + 1, 2) * rpow(p, e - 4) - 1 - R(P - 1, 2) * rpow(p, h - 2), 0}}});
            row({{{base + R(P - 1, 2) * rpow(p, h), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 4), 0}}});
            row({{{base + R(P - 1) * rpow(p, h), 0}}},
                {{{R(P - 1, 2) * rpow(p, e - 4) + R(P - 1, 2) * rpow(p, h - 2), 0}}});
            row({{{base + R(P - 3, 2) * rpow(p, h), 0}}},
                {{{R((P - 1) * (P - 1), 2) * rpow(p, e - 4), 0}}});
            break;
        }
        case 8: {
            const int h = static_cast<int>(e) / 2;
            row({{{base - R(P * P - 1, 2) * rpow(p, h - 1), 0}}},
                {{{rpow(p, e) - rpow(p, e - 2), 0}}});
            row({{{base, 0}}}, {{{rpow(p, e - 4) - 1, 0}}});
            row({{{base - R(P + 1, 2) * rpow(p, h), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 4) - R(P - 1) * rpow(p, h - 2), 0}}});
            row({{{base - R(P + 3, 2) * rpow(p, h), 0}}},
                {{{R((P - 1) * (P - 3), 4) * (rpow(p, e - 4) - rpow(p, h - 2)), 0}}});
            row({{{base - R(P - 1, 2) * rpow(p, h), 0}}},
                {{{R(P * P - 1, 4) * (rpow(p, e - 4) + rpow(p, h - 2)), 0}}});
            row({{{base - rpow(p, h), 0}}}, {{{R(P - 1) * rpow(p, e - 4), 0}}});
            break;
        }
        case 9: {
            const int h = static_cast<int>(e) / 2;
            row({{{base + R((P - 1) * (P - 1), 2) * rpow(p, h - 1), 0}}},
                {{{rpow(p, e) - rpow(p, e - 2), 0}}});
            row({{{base, 0}}}, {{{rpow(p, e - 3) - 1, 0}}});
            row({{{base + R(P - 1, 2) * rpow(p, h), 0}}},
                {{{R(P * P - 1, 2) * rpow(p, e - 4), 0}}});
            row({{{base + R(P - 3, 2) * rpow(p, h), 0}}},
                {{{R((P - 1) * (P - 1), 4) * (rpow(p, e - 4) - rpow(p, h - 2)), 0}}});
            row({{{base + R(P + 1, 2) * rpow(p, h), 0}}},
                {{{R((P - 1) * (P - 1), 4) * (rpow(p, e - 4) + rpow(p, h - 2)), 0}}});
            break;
        }
        default:
            throw OutOfScopeError("unknown table");
    }
    return rows;
}

Expr claimed_length_expr(const CaseKey& key, int theorem) {
    const std::uint32_t p = key.p;
    const std::uint32_t e = key.e;
    const int si = key.i == 0 ? 1 : -1;
    const int em1 = key.eta_minus1;
    const BigInt P = p;
    const BigRational lead = BigRational(P - 1, 2) * rpow(p, static_cast<int>(e) - 1);
    switch (theorem) {
        case 1: return {{{lead, 0}, {BigRational(si * (P - 1), 2), e - 1}}};
        case 2: return {{{lead, 0}, {BigRational(-si), e - 1}}};
        case 3: return {{{lead, 0}}};
        case 4: return {{{lead + BigRational(P - 1, 2) * rpow(p, e / 2 - 1), 0}}};
        case 5: return {{{lead - BigRational(1 + em1 * P, 2) * rpow(p, e / 2 - 1), 0}}};
        case 6: return {{{lead - BigRational(1 - em1 * P, 2) * rpow(p, e / 2 - 1), 0}}};
        case 7: return {{{lead + BigRational(P - 1, 2) * rpow(p, e / 2), 0}}};
        case 8: return {{{lead - BigRational(1 + em1 * P, 2) * rpow(p, e / 2), 0}}};
        case 9: return {{{lead - BigRational(1 - em1 * P, 2) * rpow(p, e / 2), 0}}};
        default: throw OutOfScopeError("unknown theorem");
    }
}

}  // namespace

CaseKey classify_case(std::uint32_t p, std::uint32_t e, int i) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NonPrimeError("p must be an odd prime");
    if (e < 2) throw OutOfScopeError("the closed forms assume e >= 2");
    if (i != 0 && i != 1) throw OutOfScopeError("class index must be 0 or 1");
    CaseKey key;
    key.p = p;
    key.e = e;
    key.i = i;
    key.e_odd = e % 2 == 1;
    key.e_mod4 = static_cast<int>(e % 4);
    key.p_divides_e = e % p == 0;
    key.legendre_e = key.p_divides_e ? 0 : legendre(e % p, p);
    key.legendre_neg_e = key.p_divides_e ? 0 : legendre((p - e % p) % p, p);
    key.eta_minus1 = legendre(p - 1, p);
    return key;
}

int theorem_number(const CaseKey& key) {
    const int si = key.i == 0 ? 1 : -1;
    if (key.e_odd) {
        if (key.p_divides_e) return 1;
        return key.legendre_e == si ? 2 : 3;
    }
    if (key.e_mod4 == 2) {
        if (key.p_divides_e) return 4;
        return key.legendre_e == si ? 5 : 6;
    }
    if (key.p_divides_e) return 7;
    return key.legendre_e == si ? 8 : 9;
}

int table_number(const CaseKey& key) {
    const int si = key.i == 0 ? 1 : -1;
    if (key.e_odd || key.p_divides_e) return theorem_number(key);
    if (key.e_mod4 == 2) return key.legendre_neg_e == si ? 5 : 6;
    return key.legendre_neg_e == si ? 8 : 9;
}

BigInt length_claimed(const CaseKey& key) {
    const Eval r = eval_expr(claimed_length_expr(key, theorem_number(key)), key.p);
    if (!r.value) throw OddExponentError("length formula demanded " + r.anomaly);
    return *r.value;
}

BigInt length_closed(std::uint32_t p, std::uint32_t e, int i) {
    const CaseKey key = classify_case(p, e, i);
    const int si = i == 0 ? 1 : -1;
    const BigInt P = p;
    const BigRational lead = BigRational(P - 1, 2) * rpow(p, static_cast<int>(e) - 1);
    Expr ex;
    if (key.e_odd) {
        if (key.p_divides_e) {
            ex = {{{lead, 0}, {BigRational(si * (P - 1), 2), e - 1}}};
        } else {
            ex = {{{lead, 0}, {BigRational(-(si + key.legendre_e), 2), e - 1}}};
        }
    } else {
        const int h = static_cast<int>(e) / 2 - (key.e_mod4 == 2 ? 1 : 0);
        if (key.p_divides_e) {
            ex = {{{lead + BigRational(P - 1, 2) * rpow(p, h), 0}}};
        } else {
            ex = {{{lead - BigRational(si * key.legendre_neg_e * P + 1, 2) * rpow(p, h), 0}}};
        }
    }
    const Eval r = eval_expr(ex, p);
    if (!r.value) throw OddExponentError("length formula demanded " + r.anomaly);
    return *r.value;
}

PredictedDistribution predicted_table(std::uint32_t p, std::uint32_t e, int i) {
    PredictedDistribution out;
    out.key = classify_case(p, e, i);
    out.theorem = theorem_number(out.key);
    out.table = table_number(out.key);
    out.claimed_n = length_claimed(out.key);
    out.claimed_k = e;
    const auto specs = table_rows(out.key, out.table);
    BigRational mult_sum = 0;
    std::map<BigInt, int> weight_seen;
    for (std::size_t r = 0; r < specs.size(); ++r) {
        PredictedRow row;
        row.weight_expr = render(specs[r].weight);
        row.mult_expr = render(specs[r].mult);
        const Eval w = eval_expr(specs[r].weight, p);
        const Eval m = eval_expr(specs[r].mult, p);
        std::ostringstream why;
        if (!w.value) why << "weight: " << w.anomaly;
        if (!m.value) why << (why.str().empty() ? "" : "; ") << "multiplicity: " << m.anomaly;
        if (w.value && m.value) {
            row.weight = *w.value;
            row.multiplicity = *m.value;
            row.valid = true;
            if (row.weight < 0) why << (why.str().empty() ? "" : "; ") << "negative weight";
            if (row.multiplicity < 0)
                why << (why.str().empty() ? "" : "; ") << "negative multiplicity";
            mult_sum += BigRational(row.multiplicity);
            if (row.multiplicity > 0 && ++weight_seen[row.weight] == 2)
                why << (why.str().empty() ? "" : "; ") << "duplicate weight";
        }
        row.anomaly = why.str();
        if (!row.anomaly.empty())
            out.anomalies.push_back("row " + std::to_string(r) + ": " + row.anomaly);
        out.rows.push_back(std::move(row));
    }
    const BigInt q = numerator(rpow(p, static_cast<int>(e)));
    if (mult_sum != BigRational(q)) {
        std::ostringstream os;
        os << "multiplicities sum to " << mult_sum << ", expected " << q;
        out.anomalies.push_back(os.str());
    }
    return out;
}

BigInt counting_closed(Count kind, std::uint32_t p, std::uint32_t e,
                       const CountArgs& args) {
    const CaseKey key = classify_case(p, e, 0);
    const BigInt P = p;
    const int em1 = key.eta_minus1;
    const int eta_e = key.legendre_e;
    const int eta_ne = key.legendre_neg_e;
    const bool pdiv = key.p_divides_e;
    const int h = static_cast<int>(e) / 2;
    const int sl = args.l % 2 == 0 ? 1 : -1;
    const int sk = args.k % 2 == 0 ? 1 : -1;
    const int sj = args.j % 2 == 0 ? 1 : -1;

    auto finish = [&](const Expr& ex) {
        const Eval r = eval_expr(ex, p);
        if (!r.value) throw OddExponentError("counting formula demanded " + r.anomaly);
        return *r.value;
    };
    const auto need_p_coprime = [&] {
        if (pdiv)
            throw BranchUnavailableError("no closed form is stated for p | e");
    };

    switch (kind) {
        case Count::kQuadZeroLinZero: {
            if (key.e_odd && pdiv) return finish({{{rpow(p, e - 2), 0}}});
            if (key.e_odd)
                return finish({{{rpow(p, e - 2), 0},
                                {BigRational(eta_ne * (P - 1)) / rpow(p, 2), e + 1}}});
            if (!pdiv) return finish({{{rpow(p, e - 2), 0}}});
            const int drop = key.e_mod4 == 2 ? h - 1 : h;
            return finish({{{rpow(p, e - 2) - rpow(p, drop) * BigRational(P - 1), 0}}});
        }
        case Count::kQuadZeroLinNonzero: {
            const BigRational lead = rpow(p, e - 2) * BigRational(P - 1);
            if (pdiv) return finish({{{lead, 0}}});
            if (key.e_odd)
                return finish({{{lead, 0},
                                {BigRational(-eta_ne * (P - 1)) / rpow(p, 2), e + 1}}});
            const int drop = key.e_mod4 == 2 ? h - 1 : h;
            return finish({{{lead - rpow(p, drop) * BigRational(P - 1), 0}}});
        }
        case Count::kQuadClassLinZero: {
            const BigRational lead = BigRational(P - 1, 2) * rpow(p, e - 2);
            if (key.e_odd && pdiv)
                return finish({{{lead, 0},
                                {BigRational(sl * em1 * (P - 1)) / (2 * rpow(p, 1)), e + 1}}});
            if (key.e_odd)
                return finish({{{lead, 0},
                                {BigRational(-eta_ne * (P - 1)) / (2 * rpow(p, 2)), e + 1}}});
            const int hh = key.e_mod4 == 2 ? h - 1 : h;
            if (pdiv)
                return finish({{{lead + BigRational(P - 1, 2) * rpow(p, hh), 0}}});
            return finish(
                {{{lead - BigRational(sl * eta_ne * (P - 1), 2) * rpow(p, hh), 0}}});
        }
        case Count::kQuadClassLinNonzero: {
            const BigRational lead = BigRational((P - 1) * (P - 1), 2) * rpow(p, e - 2);
            if (pdiv) return finish({{{lead, 0}}});
            if (key.e_odd)
                return finish(
                    {{{lead, 0},
                      {BigRational(sl * em1 * P + eta_ne) * BigRational(P - 1) /
                           (2 * rpow(p, 2)),
                       e + 1}}});
            const int hh = key.e_mod4 == 2 ? h - 1 : h;
            return finish(
                {{{lead + BigRational((1 + sl * eta_ne) * (P - 1), 2) * rpow(p, hh), 0}}});
        }
        case Count::kRatioDegenerate: {
            need_p_coprime();
            const BigRational lead = BigRational(P - 1) * rpow(p, e - 2);
            if (!key.e_odd) return finish({{{lead, 0}}});
            return finish({{{lead, 0},
                            {BigRational(eta_ne * (P - 1) * (P - 1)) / rpow(p, 2), e + 1}}});
        }
        case Count::kRatioSlope: {
            need_p_coprime();
            const std::uint32_t s = args.s % p;
            if (s == 0 || s == e % p)
                throw BranchUnavailableError("slope must be nonzero and distinct from e");
            const BigRational lead = BigRational(P - 1) * rpow(p, e - 2);
            if (key.e_odd)
                return finish({{{lead, 0},
                                {BigRational(-eta_ne * (P - 1)) / rpow(p, 2), e + 1}}});
            const int sign = legendre(s, p) * legendre((s + p - e % p) % p, p);
            const int hh = key.e_mod4 == 2 ? h - 1 : h;
            return finish({{{lead - BigRational(sign * (P - 1)) * rpow(p, hh), 0}}});
        }
        case Count::kSlopeClassCount: {
            need_p_coprime();
            const BigInt v = P - 2 - sk * eta_e - sj * eta_e - sk * sj * em1;
            if (v % 4 != 0) throw NonRationalSumError("slope class size not integral");
            return v / 4;
        }
        case Count::kQuadClassRatioClass: {
            need_p_coprime();
            const BigInt nu = counting_closed(Count::kSlopeClassCount, p, e, args);
            const BigRational lead = BigRational(P - 1) * rpow(p, e - 2);
            Expr per;
            if (key.e_odd) {
                per = {{{lead, 0},
                        {BigRational(-eta_ne * (P - 1)) / rpow(p, 2), e + 1}}};
            } else {
                const int hh = key.e_mod4 == 2 ? h - 1 : h;
                per = {{{lead - BigRational(sk * sj * em1 * (P - 1)) * rpow(p, hh), 0}}};
            }
            return BigInt(nu) * finish(per);
        }
    }
    throw OutOfScopeError("unknown counting function");
}

std::uint64_t counting_bruteforce(Count kind, const FieldCtx& ctx, const CountArgs& args) {
    const std::uint32_t p = ctx.p();
    const std::uint64_t e_modp = ctx.e() % p;
    const int em1 = legendre(p - 1, p);
    if (kind == Count::kSlopeClassCount) {
        std::uint64_t count = 0;
        for (std::uint32_t s = 1; s < p; ++s) {
            if (s == e_modp) continue;
            if (legendre(s, p) != (args.k % 2 == 0 ? 1 : -1)) continue;
            if (legendre((s + p - e_modp) % p, p) != (args.j % 2 == 0 ? 1 : -1) * em1)
                continue;
            ++count;
        }
        return count;
    }
    if (ctx.q() > (std::uint64_t{1} << 20))
        throw FieldTooLargeError("counting scan requires full enumeration");
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
        const FFElem x = ctx.element(idx);
        const std::uint64_t quad = ctx.trace(ctx.pow(x, p + 1)).value;
        const std::uint64_t lin = ctx.trace(x).value;
        bool in = false;
        switch (kind) {
            case Count::kQuadZeroLinZero:
                in = quad == 0 && lin == 0;
                break;
            case Count::kQuadZeroLinNonzero:
                in = quad == 0 && lin != 0;
                break;
            case Count::kQuadClassLinZero:
                in = legendre(quad, p) == (args.l % 2 == 0 ? 1 : -1) && lin == 0;
                break;
            case Count::kQuadClassLinNonzero:
                in = legendre(quad, p) == (args.l % 2 == 0 ? 1 : -1) && lin != 0;
                break;
            case Count::kRatioDegenerate:
                in = quad != 0 && lin != 0 && lin * lin % p == e_modp * quad % p;
                break;
            case Count::kRatioSlope:
                in = quad != 0 && lin != 0 && lin * lin % p == args.s % p * quad % p;
                break;
            case Count::kQuadClassRatioClass: {
                if (quad == 0 || lin == 0) break;
                if (legendre(quad, p) != (args.k % 2 == 0 ? 1 : -1)) break;
                const std::uint64_t l2 = lin * lin % p;
                const std::uint64_t eq = e_modp * quad % p;
                if (l2 == eq) break;
                const std::uint64_t inv = powmod_u64(quad, p - 2, p);
                const std::uint64_t ratio = (eq + p - l2) % p * inv % p;
                in = legendre(ratio, p) == (args.j % 2 == 0 ? 1 : -1);
                break;
            }
            case Count::kSlopeClassCount:
                break;  // handled above
        }
        if (in) ++count;
    }
    return count;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kMatch: return "MATCH";
        case Verdict::kMismatch: return "MISMATCH";
        case Verdict::kFormulaAnomaly: return "FORMULA_ANOMALY";
    }
    return "MISMATCH";
}

VerifyReport verify(const FieldCtx& ctx, int i, const WeightOptions& opts) {
    VerifyReport rep;
    rep.predicted = predicted_table(ctx.p(), ctx.e(), i);
    rep.key = rep.predicted.key;
    const DefiningSet set = defining_set(ctx, i);
    rep.enumerated = weight_distribution(ctx, set, opts);
    if (rep.enumerated.k >= 1) {
        rep.griesmer_verdict = griesmer(rep.enumerated);
        rep.ratio = wt_ratio(rep.enumerated);
    }
    rep.parameter_match = BigInt(rep.enumerated.n) == rep.predicted.claimed_n &&
                          rep.enumerated.k == rep.predicted.claimed_k;

    std::map<BigInt, BigInt> predicted;
    for (const PredictedRow& row : rep.predicted.rows)
        if (row.valid && row.multiplicity > 0) predicted[row.weight] += row.multiplicity;
    std::map<BigInt, BigInt> enumerated;
    for (const auto& [w, c] : rep.enumerated.counts) enumerated[BigInt(w)] = BigInt(c);

    for (const auto& [w, m] : predicted) {
        const auto it = enumerated.find(w);
        const BigInt got = it == enumerated.end() ? BigInt(0) : it->second;
        RowDiff diff{w, m, got};
        (m == got ? rep.rows_matched : rep.rows_mismatched).push_back(std::move(diff));
    }
    for (const auto& [w, c] : enumerated)
        if (!predicted.contains(w)) rep.rows_mismatched.push_back({w, 0, c});

    if (rep.rows_mismatched.empty()) {
        rep.verdict = Verdict::kMatch;
    } else if (!rep.predicted.anomalies.empty()) {
        rep.verdict = Verdict::kFormulaAnomaly;
    } else {
        rep.verdict = Verdict::kMismatch;
    }
    return rep;
}

VerifyReport verify(std::uint32_t p, std::uint32_t e, int i, const WeightOptions& opts) {
    return verify(FieldCtx::make(p, e), i, opts);
}

}  // namespace codeweights
