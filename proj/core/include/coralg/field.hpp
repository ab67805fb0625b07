#pragma once

#include <gmpxx.h>

#include <string>

#include "coralg/verdict.hpp"

namespace coralg {

/// Exact field element. Over the rationals this is an arbitrary mpq in
/// lowest terms; over a prime field it is an integer representative in [0,p).
using Scalar = mpq_class;

/// The ground field: either ℚ or 𝔽_p for a prime p < 2^31.
class Field {
  public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(long p);

    Kind kind() const { return kind_; }
    long p() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }

    /// Canonical form: lowest terms over ℚ, representative in [0,p) over 𝔽_p.
    Scalar norm(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return norm(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return norm(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return norm(a * b); }
    Scalar neg(const Scalar& a) const { return norm(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return norm(a) == 0; }
    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar of(long n) const { return norm(Scalar(n)); }

    /// Parse "n" or "n/d"; over 𝔽_p the value is reduced mod p.
    Scalar parse(const std::string& s) const;
    std::string str(const Scalar& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Field(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

} // namespace coralg
