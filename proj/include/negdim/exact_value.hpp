#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace negdim {

/// Exact scalar of the form coeff * pi^(pi_half_power/2) * i^i_power, or a
/// gamma-pole marker carrying a pole order. This is the currency of every
/// symbolic result in the library.
///
/// Canonical form: coeff in lowest terms (boost keeps it so); i_power in
/// {0, 1} with i^2 folded into the sign of coeff; the zero value has all
/// powers cleared; a pole carries no finite data besides its order.
class ExactValue {
public:
    ExactValue() = default;

    ExactValue(Rational coefficient, int pi_half_power = 0, int i_power = 0)
        : coeff_(std::move(coefficient)), pi_half_(pi_half_power), i_pow_(i_power) {
        canonicalize();
    }

    static ExactValue zero() { return ExactValue(); }
    static ExactValue one() { return ExactValue(Rational(1)); }
    static ExactValue sqrt_pi() { return ExactValue(Rational(1), 1); }
    static ExactValue imaginary_unit() { return ExactValue(Rational(1), 0, 1); }

    static ExactValue pole(int order = 1) {
        ExactValue v;
        v.pole_order_ = order < 1 ? 1 : order;
        return v;
    }

    bool is_pole() const { return pole_order_ > 0; }
    int pole_order() const { return pole_order_; }
    bool is_zero() const { return !is_pole() && coeff_ == 0; }
    bool is_finite() const { return !is_pole(); }

    const Rational& coeff() const {
        require_finite("coeff");
        return coeff_;
    }
    int pi_half_power() const {
        require_finite("pi_half_power");
        return pi_half_;
    }
    int i_power() const {
        require_finite("i_power");
        return i_pow_;
    }

    bool is_real() const { return is_finite() && (i_pow_ == 0 || coeff_ == 0); }

    ExactValue operator-() const {
        if (is_pole()) return *this;
        return ExactValue(-coeff_, pi_half_, i_pow_);
    }

    ExactValue operator*(const ExactValue& rhs) const {
        if (is_pole() || rhs.is_pole()) {
            if ((is_finite() && is_zero()) || (rhs.is_finite() && rhs.is_zero()))
                throw IndeterminateRatio("0 * pole is indeterminate");
            return pole(pole_order_ + rhs.pole_order_);
        }
        return ExactValue(coeff_ * rhs.coeff_, pi_half_ + rhs.pi_half_, i_pow_ + rhs.i_pow_);
    }

    ExactValue operator/(const ExactValue& rhs) const {
        if (is_pole() && rhs.is_pole()) throw IndeterminateRatio("pole / pole is indeterminate");
        if (rhs.is_pole()) {
            if (is_zero()) throw IndeterminateRatio("0 / pole is indeterminate");
            return zero();  // finite / infinity
        }
        if (rhs.is_zero()) {
            if (is_zero()) throw IndeterminateRatio("0 / 0 is indeterminate");
            return pole(is_pole() ? pole_order_ + 1 : 1);
        }
        if (is_pole()) return *this;
        return ExactValue(coeff_ / rhs.coeff_, pi_half_ - rhs.pi_half_, i_pow_ - rhs.i_pow_);
    }

    /// Addition is defined only for like monomials: identical pi and i powers.
    /// Zero is the neutral element regardless of powers.
    ExactValue operator+(const ExactValue& rhs) const {
        if (is_pole() || rhs.is_pole()) throw MixedPowerAddition("cannot add a pole value");
        if (is_zero()) return rhs;
        if (rhs.is_zero()) return *this;
        if (pi_half_ != rhs.pi_half_ || i_pow_ != rhs.i_pow_)
            throw MixedPowerAddition(
                "cannot add ExactValues of mixed pi/i power; render to floating point first");
        return ExactValue(coeff_ + rhs.coeff_, pi_half_, i_pow_);
    }

    ExactValue operator-(const ExactValue& rhs) const { return *this + (-rhs); }

    ExactValue operator*(const Rational& r) const { return *this * ExactValue(r); }
    ExactValue operator/(const Rational& r) const { return *this / ExactValue(r); }

    bool operator==(const ExactValue& rhs) const {
        if (is_pole() || rhs.is_pole()) return pole_order_ == rhs.pole_order_;
        return coeff_ == rhs.coeff_ && pi_half_ == rhs.pi_half_ && i_pow_ == rhs.i_pow_;
    }
    bool operator!=(const ExactValue& rhs) const { return !(*this == rhs); }

    std::complex<double> to_complex() const {
        require_finite("to_complex");
        double mag = to_double(coeff_) * std::pow(M_PI, pi_half_ / 2.0);
        return i_pow_ == 0 ? std::complex<double>(mag, 0.0) : std::complex<double>(0.0, mag);
    }

    /// Real render; rejects values with a surviving factor of i.
    double to_real() const {
        require_finite("to_real");
        if (i_pow_ != 0) throw PoleValueAccess("to_real on a non-real ExactValue");
        return to_double(coeff_) * std::pow(M_PI, pi_half_ / 2.0);
    }

    std::string to_string() const {
        if (is_pole()) return "pole(order " + std::to_string(pole_order_) + ")";
        if (is_zero()) return "0";
        std::string symbols;
        if (pi_half_ != 0) {
            symbols = "pi";
            if (pi_half_ != 2) symbols += "^(" + std::to_string(pi_half_) + "/2)";
        }
        if (i_pow_ != 0) symbols += symbols.empty() ? "i" : "*i";
        if (symbols.empty()) return rational_to_string(coeff_);
        if (coeff_ == 1) return symbols;
        if (coeff_ == -1) return "-" + symbols;
        return rational_to_string(coeff_) + "*" + symbols;
    }

private:
    void require_finite(const char* what) const {
        if (is_pole()) throw PoleValueAccess(std::string(what) + " on a pole value");
    }

    void canonicalize() {
        i_pow_ = ((i_pow_ % 4) + 4) % 4;
        if (i_pow_ >= 2) {  // i^2 = -1 folds into the coefficient
            coeff_ = -coeff_;
            i_pow_ -= 2;
        }
        if (coeff_ == 0) {
            pi_half_ = 0;
            i_pow_ = 0;
        }
    }

    Rational coeff_{0};
    int pi_half_ = 0;
    int i_pow_ = 0;
    int pole_order_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExactValue& v) {
    return os << v.to_string();
}

} // namespace negdim
