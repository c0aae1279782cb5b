#include "paratwist/coeffs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace paratwist {

CanonicalRef canonicalize(const HalfIntegralForm& S, const Int& N, long k) {
    if (!in_ANplus(S, N))
        throw OutsideANplus("form " + form_to_string(S) + " is outside the level-" + N.get_str() +
                            " index set");
    if (N == 1) {
        ReductionResult r = reduce_gl2z(S);
        int sign = (k % 2 != 0 && r.det_sign < 0) ? -1 : 1;
        return CanonicalRef{r.reduced, sign};
    }
    // Translate two_beta into (-alpha, alpha], then flip its sign if negative.
    // Both moves fix alpha, so level membership is preserved.
    HalfIntegralForm cur = S;
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), Int(cur.alpha - cur.two_beta).get_mpz_t(), Int(2 * cur.alpha).get_mpz_t());
    if (t != 0) cur = transform(cur, IntMat2{1, t, 0, 1});
    int det_sign = 1;
    if (cur.two_beta < 0) {
        cur = transform(cur, IntMat2{1, 0, 0, -1});
        det_sign = -1;
    }
    int sign = (k % 2 != 0 && det_sign < 0) ? -1 : 1;
    return CanonicalRef{cur, sign};
}

void LinearForm::add(const CanonicalRef& ref, const Rat& coeff) {
    if (coeff == 0) return;
    Rat adjusted = ref.sign < 0 ? Rat(-coeff) : coeff;
    auto [it, inserted] = terms_.emplace(ref.key, adjusted);
    if (!inserted) {
        it->second += adjusted;
        if (it->second == 0) terms_.erase(it);
    }
}

void LinearForm::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
}

std::vector<HalfIntegralForm> LinearForm::support() const {
    std::vector<HalfIntegralForm> keys;
    keys.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) keys.push_back(key);
    return keys;
}

Rat LinearForm::evaluate(const CoeffTable& table) const {
    Rat acc(0);
    for (const auto& [key, coeff] : terms_) acc += coeff * table.lookup(key);
    return acc;
}

Rat LinearForm::evaluate_assuming_zero(const CoeffTable& table) const {
    Rat acc(0);
    for (const auto& [key, coeff] : terms_) {
        auto it = table.entries().find(key);
        if (it != table.entries().end()) acc += coeff * it->second;
    }
    return acc;
}

CoeffTable::CoeffTable(const Int& N, long k) : N_(N), k_(k) {
    if (N < 1) throw OutsideLevel("level must be positive, got " + N.get_str());
}

void CoeffTable::insert(const HalfIntegralForm& S, const Rat& value) {
    CanonicalRef ref = canonicalize(S, N_, k_);
    Rat adjusted = ref.sign < 0 ? Rat(-value) : value;
    auto [it, inserted] = entries_.emplace(ref.key, adjusted);
    if (!inserted && it->second != adjusted)
        throw DuplicateKeyConflict(0, "key " + form_to_string(ref.key) + " already has value " +
                                          rat_to_string(it->second));
}

Rat CoeffTable::lookup(const HalfIntegralForm& S) const {
    CanonicalRef ref = canonicalize(S, N_, k_);
    auto it = entries_.find(ref.key);
    if (it == entries_.end())
        throw MissingCoefficient(ref.key, "no coefficient stored for canonical key " +
                                              form_to_string(ref.key));
    return ref.sign < 0 ? Rat(-it->second) : it->second;
}

CanonicalRef CoeffTable::lookup_symbolic(const HalfIntegralForm& S) const {
    return canonicalize(S, N_, k_);
}

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string content_of(const std::string& raw) {
    std::string s = raw;
    size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

CoeffTable CoeffTable::ingest(std::istream& in) {
    std::string raw;
    long line_no = 0;
    bool have_header = false;
    Int N;
    long k = 0;

    std::vector<std::pair<long, std::string>> body;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = content_of(raw);
        if (s.empty()) continue;
        if (!have_header) {
            std::istringstream hs(s);
            std::string ntok, ktok;
            hs >> ntok >> ktok;
            std::string rest;
            if (hs >> rest || ntok.rfind("N=", 0) != 0 || ktok.rfind("k=", 0) != 0)
                throw InvalidHeader("expected header \"N=<int> k=<int>\", got \"" + s + "\"");
            try {
                N = Int(ntok.substr(2));
                k = std::stol(ktok.substr(2));
            } catch (const std::exception&) {
                throw InvalidHeader("expected header \"N=<int> k=<int>\", got \"" + s + "\"");
            }
            if (N < 1) throw InvalidHeader("level must be positive, got " + N.get_str());
            have_header = true;
            continue;
        }
        body.emplace_back(line_no, s);
    }
    if (!have_header) throw InvalidHeader("missing header \"N=<int> k=<int>\"");

    CoeffTable table(N, k);
    for (const auto& [no, s] : body) {
        std::istringstream ls(s);
        std::string form_tok, value_tok, rest;
        ls >> form_tok >> value_tok;
        if (value_tok.empty() || (ls >> rest))
            throw ParseError(no, "expected \"alpha,two_beta,gamma value\", got \"" + s + "\"");
        HalfIntegralForm form;
        Rat value;
        try {
            form = parse_form(form_tok);
            value = rat_from_string(value_tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(no, e.what());
        }
        try {
            table.insert(form, value);
        } catch (const OutsideANplus& e) {
            throw ParseError(no, e.what());
        } catch (const DuplicateKeyConflict& e) {
            throw DuplicateKeyConflict(no, e.detail);
        }
    }
    return table;
}

void CoeffTable::emit(std::ostream& out) const {
    out << "N=" << N_ << " k=" << k_ << "\n";
    for (const auto& [key, value] : entries_) out << key << " " << rat_to_string(value) << "\n";
}

}  // namespace paratwist
