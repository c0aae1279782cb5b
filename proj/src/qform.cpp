#include "paratwist/qform.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace paratwist {

std::ostream& operator<<(std::ostream& os, const HalfIntegralForm& f) {
    return os << f.alpha << "," << f.two_beta << "," << f.gamma;
}

std::string form_to_string(const HalfIntegralForm& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

HalfIntegralForm parse_form(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("form literal needs three comma-separated integers: " + s);
    for (const std::string& part : parts) {
        if (part.empty()) throw std::invalid_argument("empty component in form literal: " + s);
        for (size_t i = 0; i < part.size(); ++i) {
            char ch = part[i];
            if (!((ch >= '0' && ch <= '9') || (ch == '-' && i == 0)))
                throw std::invalid_argument("bad character in form literal: " + s);
        }
    }
    return HalfIntegralForm{Int(parts[0]), Int(parts[1]), Int(parts[2])};
}

Int discriminant4(const HalfIntegralForm& f) {
    return f.two_beta * f.two_beta - 4 * f.alpha * f.gamma;
}

Int content(const HalfIntegralForm& f) {
    Int g = gcd(f.alpha, f.two_beta);
    return gcd(g, f.gamma);
}

bool in_ANplus(const HalfIntegralForm& f, const Int& N) {
    if (N < 1) throw InternalError("in_ANplus: level must be positive");
    return f.alpha > 0 && divides(N, f.alpha) && discriminant4(f) < 0;
}

HalfIntegralForm transform(const HalfIntegralForm& f, const IntMat2& M) {
    // S[M] for S = [alpha, beta; beta, gamma], M = [[a, b], [c, d]]:
    //   alpha'    = a^2 alpha + a c (2 beta) + c^2 gamma
    //   2 beta'   = 2 a b alpha + (a d + b c)(2 beta) + 2 c d gamma
    //   gamma'    = b^2 alpha + b d (2 beta) + d^2 gamma
    HalfIntegralForm r;
    r.alpha = M.a * M.a * f.alpha + M.a * M.c * f.two_beta + M.c * M.c * f.gamma;
    r.two_beta = 2 * M.a * M.b * f.alpha + (M.a * M.d + M.b * M.c) * f.two_beta + 2 * M.c * M.d * f.gamma;
    r.gamma = M.b * M.b * f.alpha + M.b * M.d * f.two_beta + M.d * M.d * f.gamma;
    return r;
}

HalfIntegralForm transform(const HalfIntegralForm& f, const RatMat2& A) {
    Rat alpha = A.a * A.a * f.alpha + A.a * A.c * f.two_beta + A.c * A.c * f.gamma;
    Rat two_beta = 2 * A.a * A.b * f.alpha + (A.a * A.d + A.b * A.c) * f.two_beta + 2 * A.c * A.d * f.gamma;
    Rat gamma = A.b * A.b * f.alpha + A.b * A.d * f.two_beta + A.d * A.d * f.gamma;
    if (alpha.get_den() != 1 || two_beta.get_den() != 1 || gamma.get_den() != 1)
        throw NonIntegralResult("substitution leaves the half-integral lattice at " + form_to_string(f));
    return HalfIntegralForm{alpha.get_num(), two_beta.get_num(), gamma.get_num()};
}

HalfIntegralForm transform_scaled(const HalfIntegralForm& f, const IntMat2& M, const Int& den) {
    if (den <= 0) throw InternalError("transform_scaled: denominator must be positive");
    HalfIntegralForm big = transform(f, M);
    Int den2 = den * den;
    Int r0, r1, r2, q0, q1, q2;
    mpz_tdiv_qr(q0.get_mpz_t(), r0.get_mpz_t(), big.alpha.get_mpz_t(), den2.get_mpz_t());
    mpz_tdiv_qr(q1.get_mpz_t(), r1.get_mpz_t(), big.two_beta.get_mpz_t(), den2.get_mpz_t());
    mpz_tdiv_qr(q2.get_mpz_t(), r2.get_mpz_t(), big.gamma.get_mpz_t(), den2.get_mpz_t());
    if (r0 != 0 || r1 != 0 || r2 != 0)
        throw NonIntegralResult("substitution leaves the half-integral lattice at " + form_to_string(f));
    return HalfIntegralForm{q0, q1, q2};
}

namespace {

// Right-multiplies the accumulated substitution by U.
void fold(IntMat2& M, const IntMat2& U) {
    IntMat2 r;
    r.a = M.a * U.a + M.b * U.c;
    r.b = M.a * U.b + M.b * U.d;
    r.c = M.c * U.a + M.d * U.c;
    r.d = M.c * U.b + M.d * U.d;
    M = r;
}

}  // namespace

ReductionResult reduce_gl2z(const HalfIntegralForm& f) {
    if (!(f.alpha > 0 && discriminant4(f) < 0))
        throw NotPositiveDefinite("form is not positive definite: " + form_to_string(f));

    HalfIntegralForm cur = f;
    IntMat2 M{1, 0, 0, 1};  // cur == transform(f, M) throughout

    for (;;) {
        // Translate two_beta into (-alpha, alpha].
        Int t;
        mpz_fdiv_q(t.get_mpz_t(), Int(cur.alpha - cur.two_beta).get_mpz_t(), Int(2 * cur.alpha).get_mpz_t());
        if (t != 0) {
            IntMat2 U{1, t, 0, 1};
            cur = transform(cur, U);
            fold(M, U);
        }
        if (cur.alpha > cur.gamma) {
            IntMat2 U{0, -1, 1, 0};  // (alpha, two_beta, gamma) -> (gamma, -two_beta, alpha)
            cur = transform(cur, U);
            fold(M, U);
            continue;
        }
        break;
    }
    if (cur.two_beta < 0) {
        IntMat2 U{1, 0, 0, -1};
        cur = transform(cur, U);
        fold(M, U);
    }

    Int det = M.det();
    if (det != 1 && det != -1) throw InternalError("reduction accumulated a non-unimodular substitution");
    // inverse of M, exact since det = +-1
    IntMat2 inv{M.d * det, -M.b * det, -M.c * det, M.a * det};
    return ReductionResult{cur, inv, static_cast<int>(det.get_si())};
}

}  // namespace paratwist
