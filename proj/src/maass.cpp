#include "paratwist/maass.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace paratwist {

namespace {

std::string strip_line(const std::string& raw) {
    std::string s = raw;
    size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

JacobiCoeffs JacobiCoeffs::ingest(std::istream& in) {
    JacobiCoeffs jc;
    std::string raw;
    long line_no = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = strip_line(raw);
        if (s.empty()) continue;
        if (!have_header) {
            if (s.rfind("k=", 0) != 0 || s.find(' ') != std::string::npos)
                throw InvalidHeader("expected header \"k=<int>\", got \"" + s + "\"");
            try {
                jc.k = std::stol(s.substr(2));
            } catch (const std::exception&) {
                throw InvalidHeader("expected header \"k=<int>\", got \"" + s + "\"");
            }
            have_header = true;
            continue;
        }
        std::istringstream ls(s);
        std::string d_tok, v_tok, rest;
        ls >> d_tok >> v_tok;
        if (v_tok.empty() || (ls >> rest)) throw ParseError(line_no, "expected \"D value\", got \"" + s + "\"");
        Int D;
        Rat value;
        try {
            D = Int(d_tok);
            value = rat_from_string(v_tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (D > 0) throw ParseError(line_no, "discriminant must be <= 0, got " + D.get_str());
        Int res = mod_pos(D, 4);
        if (res != 0 && res != 1)
            throw ParseError(line_no, "discriminant must be 0 or 1 mod 4, got " + D.get_str());
        auto [it, inserted] = jc.c.emplace(D, value);
        if (!inserted && it->second != value)
            throw DuplicateKeyConflict(line_no, "discriminant " + D.get_str() + " already has value " +
                                                    rat_to_string(it->second));
    }
    if (!have_header) throw InvalidHeader("missing header \"k=<int>\"");
    return jc;
}

void JacobiCoeffs::emit(std::ostream& out) const {
    out << "k=" << k << "\n";
    for (const auto& [D, value] : c) out << D << " " << rat_to_string(value) << "\n";
}

const Rat& JacobiCoeffs::at(const Int& D) const {
    auto it = c.find(D);
    if (it == c.end())
        throw MissingJacobiCoefficient(D, "no Jacobi coefficient stored for discriminant " + D.get_str());
    return it->second;
}

std::vector<Int> divisors(const Int& n) {
    if (n < 1) throw InternalError("divisors: argument must be positive");
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (!divides(d, n)) continue;
        out.push_back(d);
        Int co = divide_exact(n, d);
        if (co != d) out.push_back(co);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat maass_coeff(const HalfIntegralForm& S, long k, const JacobiCoeffs& jc) {
    if (jc.k != k) throw HypothesisViolated("Jacobi table has weight " + std::to_string(jc.k) +
                                            ", lift wants " + std::to_string(k));
    Int D = discriminant4(S);
    Rat acc(0);
    for (const Int& d : divisors(content(S)))
        acc += Rat(pow_int(d, static_cast<unsigned long>(k - 1))) * jc.at(divide_exact(D, d * d));
    return acc;
}

CoeffTable maass_table(const JacobiCoeffs& jc, long k, const Int& alpha_max, const Int& gamma_max) {
    CoeffTable table(Int(1), k);
    for (Int alpha = 1; alpha <= alpha_max; ++alpha)
        for (Int tb = 0; tb <= alpha; ++tb)
            for (Int gamma = alpha; gamma <= gamma_max; ++gamma) {
                HalfIntegralForm S{alpha, tb, gamma};
                table.insert(S, maass_coeff(S, k, jc));
            }
    return table;
}

void MaassLinearForm::add(const Int& D, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(D, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<Int> MaassLinearForm::support() const {
    std::vector<Int> keys;
    keys.reserve(terms_.size());
    for (const auto& [D, coeff] : terms_) keys.push_back(D);
    return keys;
}

MaassLinearForm maass_symbolic(const HalfIntegralForm& S, long k) {
    Int D = discriminant4(S);
    MaassLinearForm out;
    for (const Int& d : divisors(content(S)))
        out.add(divide_exact(D, d * d), Rat(pow_int(d, static_cast<unsigned long>(k - 1))));
    return out;
}

VanishingReport verify_maass_vanishing(const HalfIntegralForm& S, const TwistContext& ctx) {
    if (ctx.N != 1) throw HypothesisViolated("the lift vanishing check requires level 1");
    if (ctx.k % 2 != 0)
        throw HypothesisViolated("the lift vanishing check requires even weight, got k=" +
                                 std::to_string(ctx.k));
    SymbolicTwist sym = a_chi_symbolic(S, ctx);
    MaassLinearForm acc;
    for (const auto& [key, coeff] : sym.form.terms()) {
        MaassLinearForm lifted = maass_symbolic(key, ctx.k);
        for (const auto& [D, c] : lifted.terms()) acc.add(D, coeff * c);
    }
    return VanishingReport{acc.zero(), sym.case_label, std::move(acc)};
}

namespace {

Int least_nonresidue(const Int& p) {
    for (Int c = 2; c < p; ++c)
        if (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) == -1) return c;
    throw InternalError("no quadratic nonresidue below " + p.get_str());
}

}  // namespace

std::vector<SweepEntry> curated_sweep(const Int& p, long k) {
    Int p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p5 = p4 * p;
    std::vector<SweepEntry> out;
    auto add = [&](const Int& alpha, const Int& tb, const Int& gamma, const std::string& profile) {
        HalfIntegralForm S{alpha, tb, gamma};
        if (discriminant4(S) >= 0)
            throw InternalError("curated sweep entry is not positive definite: " + form_to_string(S));
        out.push_back(SweepEntry{S, profile});
    };

    add(p4, 1, 1, "case=I p|gamma=no");
    add(2 * p4, 1, 2, "case=I alpha'=2");
    add(p4, p, 1, "case=II p|gamma=no");
    add(p4, p, p, "case=II p|gamma=yes");
    add(p4, p, Int(p + 2), "case=II gamma=p+2");
    add(p5, p, 1, "case=III p|gamma=no");
    add(p5, p, p, "case=III p|gamma=yes");

    // Fourth case, alpha' = 1: S = (p^4, p^2 t, g) has discriminant
    // p^4 (t^2 - 4g), so the valuation bucket is 4 + v_p(t^2 - 4g) and the
    // character class of gamma alpha' is legendre(g, p). Valuations 5..9
    // force that class into {+1, 0}; both signs exist only at 4.
    std::map<std::pair<int, int>, bool> want;
    for (int cls : {1, -1, 0}) want[{4, cls}] = false;
    for (int v = 5; v <= 9; ++v)
        for (int cls : {1, 0}) want[{v, cls}] = false;
    long unfilled = static_cast<long>(want.size());
    Int g_bound = 4 * p5 + p2;
    for (Int t = 0; t <= 2 * p2 && unfilled > 0; ++t) {
        for (Int g = 1; g <= g_bound && unfilled > 0; ++g) {
            Int core = t * t - 4 * g;
            if (core >= 0) continue;
            int v = 4 + v_p(core, p);
            if (v > 9) continue;
            int cls = mpz_legendre(g.get_mpz_t(), p.get_mpz_t());
            auto it = want.find({v, cls});
            if (it == want.end() || it->second) continue;
            it->second = true;
            --unfilled;
            std::string chi_str = cls == 1 ? "+1" : (cls == -1 ? "-1" : "0");
            add(p4, p2 * t, g,
                "case=IV vD=" + std::to_string(v) + " chi(gamma alpha')=" + chi_str +
                    " p|gamma=" + (cls == 0 ? "yes" : "no"));
        }
    }
    if (unfilled > 0) throw InternalError("curated sweep could not realize every valuation bucket");

    // Two entries with a nonresidue alpha' so the character of gamma alpha'
    // decouples from the character of gamma. With 2 beta = p^2 the core
    // 1 - 4 nr g is divisible by p exactly when chi(nr g) = +1, so the +1
    // entry instead takes 2 beta = p^3, where NO unit core is lost.
    Int nr = least_nonresidue(p);
    bool got_plus = false, got_minus = false;
    for (Int g = 1; g <= p2 && !got_minus; ++g) {
        Int core = 1 - 4 * nr * g;
        if (core >= 0 || v_p(core, p) != 0) continue;
        if (mpz_legendre(Int(g * nr).get_mpz_t(), p.get_mpz_t()) != -1) continue;
        got_minus = true;
        add(nr * p4, p2, g, "case=IV alpha'=nonresidue vD=4 chi(gamma alpha')=-1");
    }
    for (Int g = 1; g <= p2 && !got_plus; ++g) {
        Int core = p2 - 4 * nr * g;
        if (core >= 0 || v_p(core, p) != 0) continue;
        if (mpz_legendre(Int(g * nr).get_mpz_t(), p.get_mpz_t()) != 1) continue;
        got_plus = true;
        add(nr * p4, p3, g, "case=IV alpha'=nonresidue vD=4 chi(gamma alpha')=+1");
    }
    if (!(got_plus && got_minus))
        throw InternalError("curated sweep could not realize the nonresidue-alpha' entries");

    add(p5, p2, 1, "case=V vD=4 p|gamma=no");
    add(p5, p2, p, "case=V vD=4 p|gamma=yes");
    add(p5, 0, 1, "case=V 2beta=0 vD=5");
    add(p5, 0, p, "case=V 2beta=0 vD=6");
    add(p5, p3, Int(p - 1), "case=V vD=5 p|gamma=no");

    // Drop duplicates, keep first occurrence, and check the advertised case.
    TwistContext ctx(Int(1), k, p);
    std::set<std::string> seen;
    std::vector<SweepEntry> dedup;
    for (SweepEntry& e : out) {
        std::string key = form_to_string(e.S);
        if (!seen.insert(key).second) continue;
        TwistCase label = classify(e.S, ctx);
        size_t pos = e.profile.find("case=");
        if (pos != std::string::npos) {
            std::string claimed = e.profile.substr(pos + 5, e.profile.find(' ', pos) - pos - 5);
            std::string actual = case_name(label) + 5;  // strip "Case "
            if (claimed != actual)
                throw InternalError("curated entry " + key + " classifies as " + case_name(label) +
                                    ", profile says " + e.profile);
        }
        dedup.push_back(std::move(e));
    }
    return dedup;
}

std::vector<SweepEntry> random_sweep(const Int& p, long k, unsigned long seed, int count) {
    TwistContext ctx(Int(1), k, p);
    Int p4 = p * p * p * p;
    std::mt19937_64 rng(seed);
    std::vector<SweepEntry> out;
    std::set<std::string> seen;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < 10000) {
        ++attempts;
        Int alpha = p4 * Int(1 + static_cast<long>(rng() % 20));
        if (rng() % 3 == 0) alpha *= p;
        Int tb = Int(static_cast<long>(rng() % 241)) - 120;
        Int gamma = Int(1 + static_cast<long>(rng() % 40));
        HalfIntegralForm S{alpha, tb, gamma};
        if (discriminant4(S) >= 0) continue;
        if (!seen.insert(form_to_string(S)).second) continue;
        out.push_back(SweepEntry{S, std::string("random case=") + (case_name(classify(S, ctx)) + 5)});
    }
    if (static_cast<int>(out.size()) < count)
        throw InternalError("random sweep failed to collect enough admissible forms");
    return out;
}

}  // namespace paratwist
