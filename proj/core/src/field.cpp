#include "coralg/field.hpp"

namespace coralg {

Field Field::prime(long p) {
    if (p < 2 || p >= (1L << 31))
        throw error("field characteristic out of range: " + std::to_string(p));
    mpz_class pz(p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw error("field characteristic is not prime: " + std::to_string(p));
    return Field(Kind::prime, p);
}

Scalar Field::norm(const Scalar& x) const {
    Scalar r = x;
    r.canonicalize();
    if (kind_ == Kind::rationals) return r;
    // Representative in [0,p); denominators are cleared by modular inversion.
    mpz_class pz(p_);
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw error("denominator not invertible mod " + std::to_string(p_));
    mpz_class v = num * dinv;
    mpz_class m;
    mpz_mod(m.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return Scalar(m);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar r = norm(a);
    if (r == 0) throw error("division by zero");
    if (kind_ == Kind::rationals) return Scalar(1) / r;
    mpz_class pz(p_), v = r.get_num(), iv;
    mpz_invert(iv.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return Scalar(iv);
}

Scalar Field::parse(const std::string& s) const {
    Scalar r;
    if (r.set_str(s, 10) != 0)
        throw error("cannot parse scalar: '" + s + "'");
    return norm(r);
}

std::string Field::str(const Scalar& a) const { return norm(a).get_str(); }

} // namespace coralg
