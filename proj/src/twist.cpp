#include "paratwist/twist.hpp"

#include <algorithm>
#include <climits>

#include "paratwist/charsum.hpp"

namespace paratwist {

TwistContext::TwistContext(const Int& N_, long k_, const Int& p_) : N(N_), k(k_), p(p_) {
    if (N < 1) throw OutsideLevel("level must be positive, got " + N.get_str());
    if (k < 1) throw OutsideLevel("weight must be positive, got " + std::to_string(k));
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw OutsideLevel("p must be an odd prime, got " + p.get_str());
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw OutsideLevel("p must be an odd prime, got " + p.get_str());
    if (divides(p, N)) throw OutsideLevel("p = " + p.get_str() + " must not divide the level " + N.get_str());
}

const char* case_name(TwistCase c) {
    switch (c) {
        case TwistCase::I: return "Case I";
        case TwistCase::II: return "Case II";
        case TwistCase::III: return "Case III";
        case TwistCase::IV: return "Case IV";
        case TwistCase::V: return "Case V";
    }
    throw InternalError("unreachable case label");
}

TwistCase classify(const HalfIntegralForm& S, const TwistContext& ctx) {
    Int level = ctx.N * pow_int(ctx.p, 4);
    if (!in_ANplus(S, level))
        throw OutsideLevel("form " + form_to_string(S) + " is outside the level-" + level.get_str() +
                           " index set");
    int e = S.two_beta == 0 ? INT_MAX : v_p(S.two_beta, ctx.p);
    int fv = v_p(S.alpha, ctx.p);
    if (e == 0) return TwistCase::I;
    if (e == 1) return fv == 4 ? TwistCase::II : TwistCase::III;
    return fv == 4 ? TwistCase::IV : TwistCase::V;
}

QuadPoly f_S(const HalfIntegralForm& S, const Int& p) {
    Int p2 = p * p;
    Int p4 = p2 * p2;
    if (!divides(p4, S.alpha) || !divides(p2, S.two_beta))
        throw NonIntegralCoefficient("form " + form_to_string(S) +
                                     " lacks the divisibility for integral root-condition coefficients");
    return QuadPoly{divide_exact(S.alpha, p4), -divide_exact(S.two_beta, p2), S.gamma};
}

namespace {

struct Term {
    Rat coeff;
    IntMat2 M;
    Int den;
    const char* tag;
};

struct Engine {
    const HalfIntegralForm& S;
    const TwistContext& ctx;
    Int p, p2, p3, p4;
    Rat pinv;
    std::vector<Term> terms;
    std::map<std::string, std::string> branches;

    Engine(const HalfIntegralForm& S_, const TwistContext& ctx_)
        : S(S_), ctx(ctx_), p(ctx_.p), p2(p * p), p3(p2 * p), p4(p2 * p2), pinv(Int(1), p) {
        pinv.canonicalize();
    }

    int chi(const Int& a) const { return legendre(a, p); }
    Rat ppow(long e) const { return pow_rat(p, e); }

    void emit(const Rat& coeff, IntMat2 M, const Int& den, const char* tag) {
        terms.push_back(Term{coeff, std::move(M), den, tag});
    }

    void build(TwistCase label) {
        switch (label) {
            case TwistCase::I: case_one(); return;
            case TwistCase::II: case_two(); return;
            case TwistCase::III: case_three(); return;
            case TwistCase::IV: case_four(); return;
            case TwistCase::V: case_five(); return;
        }
        throw InternalError("unreachable case label");
    }

    // p | 2 beta fails: a single family of translate-dilate images.
    void case_one() {
        Rat lead = ppow(1 - ctx.k) * chi(S.two_beta);
        for (Int b = 1; b < p; ++b)
            emit(lead * chi(b), IntMat2{p, -b, 0, p2}, p, "translate-dilate");
    }

    // p || 2 beta, p^4 || alpha.
    void case_two() {
        Int alpha4 = divide_exact(S.alpha, p4);
        Int t1 = divide_exact(S.two_beta, p);
        const Int& g = S.gamma;

        for (Int a = 1; a < p; ++a)
            for (Int b = 1; b < p; ++b) {
                int c = chi(a * b * (t1 * a - g));
                if (c != 0) emit(pinv * c, IntMat2{p, -(a + b), 0, p}, p, "shallow-translates");
            }
        for (Int a = 1; a < p; ++a)
            for (Int z = 2; z < p; ++z) {
                int c = chi(a * z * (1 - z) * (a * z * alpha4 - t1));
                if (c != 0) emit(pinv * c, IntMat2{p, -a, 0, p3}, p2, "split-dilates");
            }
        emit(-pinv * chi(alpha4), IntMat2{1, 0, 0, p4}, p2, "full-dilate");
        // x alpha4 = t1 mod p^2 pins the depth-3 translate; the canonical
        // lift is chosen, any other differs by an integral substitution.
        Int x = mod_pos(t1 * inv_mod(alpha4, p2), p2);
        emit(ppow(ctx.k - 2) * chi(-alpha4), IntMat2{p2, -x, 0, p3}, p3, "pinned-alpha-translate");
        int cg = chi(-g);
        if (cg != 0) {
            // y t1 = -gamma mod p^2
            Int y = mod_pos(-g * inv_mod(t1, p2), p2);
            emit(ppow(ctx.k - 2) * cg, IntMat2{p2, y, 0, p}, p2, "pinned-gamma-translate");
            branches["pinned-gamma-translate"] = "emitted";
        } else {
            branches["pinned-gamma-translate"] = "dropped (p | gamma)";
        }
    }

    // p || 2 beta, p^5 | alpha.
    void case_three() {
        Int t1 = divide_exact(S.two_beta, p);
        const Int& g = S.gamma;

        for (Int a = 1; a < p; ++a)
            for (Int b = 1; b < p; ++b) {
                int c = chi(a * b * (t1 * a - g));
                if (c != 0) emit(pinv * c, IntMat2{p, -(a + b), 0, p}, p, "shallow-translates");
            }
        int cg = chi(-g);
        if (cg != 0) {
            Int y = mod_pos(-g * inv_mod(t1, p2), p2);
            emit(ppow(ctx.k - 2) * cg, IntMat2{p2, y, 0, p}, p2, "pinned-gamma-translate");
            branches["pinned-gamma-translate"] = "emitted";
        } else {
            branches["pinned-gamma-translate"] = "dropped (p | gamma)";
        }
        Rat lead = -pinv * chi(t1);
        for (Int a = 1; a < p; ++a)
            emit(lead * chi(a), IntMat2{p, -a, 0, p3}, p2, "dilate-sum");
    }

    // p^2 | 2 beta, p^4 || alpha.
    void case_four() {
        Int alpha4 = divide_exact(S.alpha, p4);
        Int tb2 = divide_exact(S.two_beta, p2);
        const Int& g = S.gamma;
        Int D = discriminant4(S);
        Int D4 = divide_exact(D, p4);
        int chi_g = chi(g);
        int chi_a4 = chi(alpha4);
        int chi_ma4 = chi(-alpha4);
        Rat pk3 = ppow(ctx.k - 3);
        Rat p2k4 = ppow(2 * ctx.k - 4);

        emit((1 - pinv) * chi_g, IntMat2{1, 0, 0, 1}, 1, "identity");
        for (Int b = 1; b < p; ++b) emit(-pinv * chi_g, IntMat2{p, -b, 0, p}, p, "shallow-translates");
        for (Int b = 1; b < p; ++b)
            for (Int x = 2; x < p; ++x) {
                Int xinv = inv_mod(x, p);
                for (Int y = 2; y < p; ++y) {
                    Int winv = inv_mod(mod_pos(1 - y, p), p);
                    int c = chi(y * (1 - x) * (alpha4 * winv * (y - x) * b * b + tb2 * b - g * xinv));
                    if (c != 0) emit(pk3 * c, IntMat2{p, -b, 0, p2}, p2, "depth1-translates");
                }
            }
        Int combo = chi_g + p * chi(D4 * g) - chi_ma4 * gauss_trivial(tb2, p);
        emit(pk3 * combo, IntMat2{1, 0, 0, p}, p, "depth1-zero");
        for (Int x = 0; x < p; ++x)
            emit(pk3 * chi_ma4 * gauss_trivial(tb2 - x * alpha4, p), IntMat2{p, -x, 0, p2}, p2,
                 "depth1-gauss");

        QuadPoly f = f_S(S, p);
        RootSetModP2 roots = roots_mod_p2(f, p);
        long unit_roots = 0;
        for (const Int& b : roots.roots) {
            if (divides(p, b)) continue;
            ++unit_roots;
            for (Int z = 2; z < p; ++z) {
                int c = chi(z * (1 - z) * (g - z * alpha4 * b * b));
                if (c != 0) emit(p2k4 * c, IntMat2{p2, -b, 0, p2}, p3, "depth2-translates");
            }
        }
        branches["depth2-roots"] = std::to_string(unit_roots);

        for (Int a = 1; a < p; ++a) emit(-pinv * chi_a4, IntMat2{p, -a, 0, p3}, p2, "dilate-translates");
        emit(pk3 * chi_a4 * (p * chi(D4) - gauss_trivial(g, p)), IntMat2{1, 0, 0, p3}, p2, "dilate-zero");
        emit((1 - pinv) * chi_a4, IntMat2{1, 0, 0, p4}, p2, "full-dilate");

        Int p5 = p4 * p;
        if (divides(p5, D) && chi(g * alpha4) == 1) {
            emit(p2k4 * chi_a4 * gauss_trivial(divide_exact(D, p5), p), IntMat2{1, 0, 0, p2}, p2,
                 "c-dilate");
            branches["c-term"] = "fired";
        } else if (!divides(p5, D)) {
            branches["c-term"] = "absent (p^5 does not divide the discriminant)";
        } else {
            branches["c-term"] = "absent (chi(gamma alpha') != 1)";
        }

        // The deep dilations exist only when the pinning congruence
        // 2 alpha' a = 2 beta p^-2 (mod p or p^2) has a unit solution,
        // i.e. when p^2 || 2 beta.
        if (!divides(p, tb2)) {
            Int p6 = p5 * p;
            Int p8 = p6 * p2;
            if (divides(p6, D)) {
                int cD6 = chi(divide_exact(D, p6));
                if (cD6 != 0) {
                    Int a = mod_pos(tb2 * inv_mod(2 * alpha4, p), p);
                    emit(ppow(3 * ctx.k - 5) * chi_a4 * cD6, IntMat2{p, -a, 0, p2}, p3, "d-depth1");
                    branches["d-depth1-term"] = "fired";
                } else {
                    branches["d-depth1-term"] = "absent (p^7 divides the discriminant)";
                }
            } else {
                branches["d-depth1-term"] = "absent (p^6 does not divide the discriminant)";
            }
            if (divides(p8, D)) {
                Int b = mod_pos(tb2 * inv_mod(2 * alpha4, p2), p2);
                emit(ppow(4 * ctx.k - 6) * chi_a4, IntMat2{p2, -b, 0, p2}, p4, "d-depth2");
                branches["d-depth2-term"] = "fired";
            } else {
                branches["d-depth2-term"] = "absent (p^8 does not divide the discriminant)";
            }
        } else {
            branches["d-depth1-term"] = "absent (p^3 | 2 beta or 2 beta = 0)";
            branches["d-depth2-term"] = "absent (p^3 | 2 beta or 2 beta = 0)";
        }
    }

    // p^2 | 2 beta, p^5 | alpha.
    void case_five() {
        Int tb2 = divide_exact(S.two_beta, p2);
        const Int& g = S.gamma;
        Int D4 = divide_exact(discriminant4(S), p4);
        int chi_g = chi(g);
        Rat pk3 = ppow(ctx.k - 3);

        emit((1 - pinv) * chi_g, IntMat2{1, 0, 0, 1}, 1, "identity");
        for (Int b = 1; b < p; ++b) emit(-pinv * chi_g, IntMat2{p, -b, 0, p}, p, "shallow-translates");
        for (Int b = 1; b < p; ++b)
            for (Int x = 2; x < p; ++x) {
                int c = chi((1 - x) * (tb2 * b - g * inv_mod(x, p)));
                if (c != 0) emit(-pk3 * c, IntMat2{p, -b, 0, p2}, p2, "depth1-translates");
            }
        emit(pk3 * chi_g * (1 - p + p * chi(D4)), IntMat2{1, 0, 0, p}, p, "depth1-zero");

        // Depth-2 translates carry chi(-gamma), so they are dead when
        // p | gamma; the leading coefficient of the root-condition polynomial
        // is p-divisible here, so roots are scanned directly.
        int cg = chi(-g);
        long unit_roots = 0;
        if (cg != 0) {
            QuadPoly f = f_S(S, p);
            Rat lead = -ppow(2 * ctx.k - 4) * cg;
            for (Int b = 1; b < p2; ++b) {
                if (divides(p, b) || !divides(p2, f.eval(b))) continue;
                ++unit_roots;
                emit(lead, IntMat2{p2, -b, 0, p2}, p3, "depth2-translates");
            }
        }
        branches["depth2-roots"] = cg != 0 ? std::to_string(unit_roots) : "not scanned (p | gamma)";
    }
};

}  // namespace

SymbolicTwist a_chi_symbolic(const HalfIntegralForm& S, const TwistContext& ctx) {
    TwistCase label = classify(S, ctx);
    Engine eng(S, ctx);
    eng.build(label);

    SymbolicTwist out;
    out.case_label = label;
    out.branches = std::move(eng.branches);
    for (const Term& t : eng.terms) {
        HalfIntegralForm img;
        try {
            img = transform_scaled(S, t.M, t.den);
        } catch (const NonIntegralResult& e) {
            throw InternalError(std::string("integrality guard failed in ") + t.tag + ": " + e.what());
        }
        if (!in_ANplus(img, ctx.N))
            throw InternalError(std::string("image outside the level index set in ") + t.tag + " at " +
                                form_to_string(img));
        out.form.add(canonicalize(img, ctx.N, ctx.k), t.coeff);
    }
    return out;
}

TwistReport a_chi(const HalfIntegralForm& S, const TwistContext& ctx, const CoeffTable& table,
                  bool assume_zero_outside) {
    if (table.level() != ctx.N || table.weight() != ctx.k)
        throw OutsideLevel("table is for N=" + table.level().get_str() + " k=" +
                           std::to_string(table.weight()) + ", context wants N=" + ctx.N.get_str() +
                           " k=" + std::to_string(ctx.k));
    SymbolicTwist sym = a_chi_symbolic(S, ctx);
    TwistReport report;
    report.case_label = sym.case_label;
    report.approximate = assume_zero_outside;
    report.consumed = sym.form.support();
    report.branches = std::move(sym.branches);
    report.value = assume_zero_outside ? sym.form.evaluate_assuming_zero(table) : sym.form.evaluate(table);
    for (const auto& [key, coeff] : sym.form.terms()) {
        Int den = coeff.get_den();
        if (den == 1) continue;
        report.denom_exponent = std::max(report.denom_exponent, static_cast<long>(v_p(den, ctx.p)));
    }
    return report;
}

std::vector<HalfIntegralForm> required_support(const HalfIntegralForm& S, const TwistContext& ctx) {
    return a_chi_symbolic(S, ctx).form.support();
}

}  // namespace paratwist
