#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "weil/rational.hpp"

namespace weil {

// Minimal RAII wrapper over mpfr_t at an explicit precision. Arithmetic
// results take the precision of the left operand.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real from(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real from(const Integer& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    Real operator+(const Real& o) const { Real r(prec()); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(prec()); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(prec()); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(prec()); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }

    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real sqrt() const { Real r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // nearest integer
    Integer round() const {
        Real t(prec());
        mpfr_round(t.v_, v_);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

private:
    mpfr_t v_;
};

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return re.prec(); }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { return abs2().sqrt(); }
    Complex conj() const { return {re, -im}; }

    // principal argument via atan2
    Real arg() const {
        Real r(prec());
        mpfr_atan2(r.raw(), im.raw(), re.raw(), MPFR_RNDN);
        return r;
    }
};

} // namespace weil
