#include "paratwist/arith.hpp"

#include <limits>

namespace paratwist {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Int& base, long e) {
    if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
    if (base == 0) throw InternalError("pow_rat: negative power of zero");
    Rat r(Int(1), pow_int(base, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

int v_p(const Int& n, const Int& p) {
    if (n == 0) throw InternalError("v_p: valuation of zero");
    if (p < 2) throw InternalError("v_p: modulus must be >= 2");
    int v = 0;
    Int m = abs(n);
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m = divide_exact(m, p);
        ++v;
    }
    return v;
}

bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int divide_exact(const Int& n, const Int& d) {
    if (d == 0) throw InternalError("divide_exact: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw InternalError("divide_exact: " + n.get_str() + " not divisible by " + d.get_str());
    return q;
}

Int mod_pos(const Int& a, const Int& m) {
    if (m <= 0) throw InternalError("mod_pos: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("bad character in rational literal: " + s);
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

long to_long_checked(const Int& n) {
    if (!n.fits_slong_p()) throw InternalError("value does not fit in a signed long: " + n.get_str());
    return n.get_si();
}

}  // namespace paratwist
