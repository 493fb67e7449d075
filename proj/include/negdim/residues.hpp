#pragma once

// Residue-theorem evaluator for integrals of P(x) e^{i omega x} / Q(x) along
// the real line, with Q supplied in factored form: upper-half-plane roots and
// multiplicities, each implying its complex conjugate. The contour closes in
// the upper half-plane, so the result is 2 pi i times the sum of the listed
// residues. Higher-order poles go through exact polynomial differentiation of
// (z - z0)^m f(z).

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace negdim {

using Complex = std::complex<double>;

/// Dense polynomial with complex coefficients, ascending order.
class ComplexPolynomial {
public:
    ComplexPolynomial() : coeff_{Complex(0.0)} {}
    explicit ComplexPolynomial(std::vector<Complex> coefficients) : coeff_(std::move(coefficients)) {
        trim();
    }
    static ComplexPolynomial constant(Complex c) { return ComplexPolynomial({c}); }
    static ComplexPolynomial from_real(const std::vector<double>& coefficients) {
        std::vector<Complex> c(coefficients.begin(), coefficients.end());
        return ComplexPolynomial(std::move(c));
    }
    /// (z - root)^multiplicity
    static ComplexPolynomial linear_power(Complex root, int multiplicity) {
        ComplexPolynomial p = constant(1.0);
        ComplexPolynomial lin({-root, Complex(1.0)});
        for (int i = 0; i < multiplicity; ++i) p = p * lin;
        return p;
    }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeff_; }

    Complex evaluate(Complex z) const {
        Complex acc = coeff_.back();
        for (auto it = coeff_.rbegin() + 1; it != coeff_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    ComplexPolynomial derivative() const {
        if (coeff_.size() <= 1) return ComplexPolynomial();
        std::vector<Complex> d(coeff_.size() - 1);
        for (std::size_t j = 1; j < coeff_.size(); ++j) d[j - 1] = coeff_[j] * double(j);
        return ComplexPolynomial(std::move(d));
    }

    ComplexPolynomial operator*(const ComplexPolynomial& rhs) const {
        std::vector<Complex> out(coeff_.size() + rhs.coeff_.size() - 1, Complex(0.0));
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeff_.size(); ++j)
                out[i + j] += coeff_[i] * rhs.coeff_[j];
        return ComplexPolynomial(std::move(out));
    }

    ComplexPolynomial operator+(const ComplexPolynomial& rhs) const {
        std::vector<Complex> out(std::max(coeff_.size(), rhs.coeff_.size()), Complex(0.0));
        for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
        for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) out[i] += rhs.coeff_[i];
        return ComplexPolynomial(std::move(out));
    }

    ComplexPolynomial operator-(const ComplexPolynomial& rhs) const {
        std::vector<Complex> out(std::max(coeff_.size(), rhs.coeff_.size()), Complex(0.0));
        for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
        for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) out[i] -= rhs.coeff_[i];
        return ComplexPolynomial(std::move(out));
    }

    ComplexPolynomial operator*(Complex scalar) const {
        std::vector<Complex> out = coeff_;
        for (auto& c : out) c *= scalar;
        return ComplexPolynomial(std::move(out));
    }

private:
    void trim() {
        while (coeff_.size() > 1 && coeff_.back() == Complex(0.0)) coeff_.pop_back();
        if (coeff_.empty()) coeff_.push_back(Complex(0.0));
    }
    std::vector<Complex> coeff_;
};

struct DenominatorFactor {
    Complex root;          // upper half-plane; the conjugate factor is implied
    int multiplicity = 1;
};

/// P(x) e^{i omega x} / Q(x) with Q given by its upper-half-plane roots.
struct RationalIntegrand {
    std::vector<double> numerator;  // ascending coefficients of P
    std::vector<DenominatorFactor> factors;
    double omega = 0.0;

    int numerator_degree() const {
        int d = static_cast<int>(numerator.size()) - 1;
        while (d > 0 && numerator[d] == 0.0) --d;
        return d;
    }

    int denominator_degree() const {
        int total = 0;
        for (const auto& f : factors) total += 2 * f.multiplicity;
        return total;
    }

    /// Q expanded to (real) coefficients; conjugate pairs make it real.
    ComplexPolynomial denominator_expanded() const {
        ComplexPolynomial q = ComplexPolynomial::constant(1.0);
        for (const auto& f : factors) {
            q = q * ComplexPolynomial::linear_power(f.root, f.multiplicity);
            q = q * ComplexPolynomial::linear_power(std::conj(f.root), f.multiplicity);
        }
        return q;
    }

    /// Invariant checks: roots strictly off the real axis, degree condition
    /// for the closing contour, and a residual sanity check of the expanded
    /// denominator at each root.
    void validate() const {
        if (numerator.empty()) throw InvalidIntegrand("empty numerator");
        if (factors.empty()) throw InvalidIntegrand("no denominator factors");
        if (omega < 0) throw InvalidIntegrand("omega must be non-negative");
        for (const auto& f : factors) {
            if (f.multiplicity < 1) throw InvalidIntegrand("multiplicity must be >= 1");
            if (!(f.root.imag() > 0))
                throw InvalidIntegrand("root " + std::to_string(f.root.real()) + "+" +
                                       std::to_string(f.root.imag()) +
                                       "i is not in the open upper half-plane");
        }
        int needed = numerator_degree() + (omega > 0 ? 1 : 2);
        if (denominator_degree() < needed)
            throw DegreeConditionViolated(
                "denominator degree " + std::to_string(denominator_degree()) +
                " below required " + std::to_string(needed) +
                (omega > 0 ? " (Jordan regime)" : ""));

        ComplexPolynomial q = denominator_expanded();
        for (const auto& f : factors) {
            double scale = 0.0;
            double p = 1.0;
            double r = std::abs(f.root);
            for (const auto& c : q.coefficients()) {
                scale += std::abs(c) * p;
                p *= std::max(r, 1e-30);
            }
            if (std::abs(q.evaluate(f.root)) > 1e-10 * scale)
                throw InvalidIntegrand("expanded denominator does not vanish at a listed root");
        }
    }

    /// P(x)/Q(x), evaluated through 1/x for |x| > 1 so huge samples from the
    /// double-exponential grid neither overflow nor produce inf/inf.
    double rational_value(double x) const {
        ComplexPolynomial q = denominator_expanded();
        return rational_value_cached(q, x);
    }

    double rational_value_cached(const ComplexPolynomial& q, double x) const {
        int dp = numerator_degree();
        int dq = q.degree();
        if (std::abs(x) <= 1.0) {
            double num = 0.0;
            for (int j = dp; j >= 0; --j) num = num * x + numerator[j];
            double den = 0.0;
            for (int j = dq; j >= 0; --j) den = den * x + q.coefficients()[j].real();
            return num / den;
        }
        double y = 1.0 / x;
        double num = 0.0;  // reversed numerator: sum p_j y^(dp - j)
        for (int j = 0; j <= dp; ++j) num = num * y + numerator[j];
        double den = 0.0;
        for (int j = 0; j <= dq; ++j) den = den * y + q.coefficients()[j].real();
        double scale = std::pow(y, dq - dp);
        return scale * num / den;
    }
};

/// cos(omega x) P(x)/Q(x) as a closure with the denominator expanded once;
/// the real integrand matching the cosine projection of the integral.
inline std::function<double(double)> cos_projected_integrand(const RationalIntegrand& integrand) {
    auto q = std::make_shared<ComplexPolynomial>(integrand.denominator_expanded());
    return [integrand, q](double x) {
        double v = integrand.rational_value_cached(*q, x);
        return integrand.omega > 0 ? std::cos(integrand.omega * x) * v : v;
    };
}

/// Residue of P(z) e^{i omega z} / Q(z) at one listed root. For multiplicity
/// m the function (z-z0)^m f(z) = N(z) e^{i omega z} / D(z) is differentiated
/// m-1 times symbolically (N <- (N' + i omega N) D - N D', D <- D^2) and
/// evaluated at the root.
inline Complex residue_at(const RationalIntegrand& integrand, Complex root, int multiplicity) {
    const DenominatorFactor* listed = nullptr;
    for (const auto& f : integrand.factors) {
        if (f.root == root && f.multiplicity == multiplicity) {
            listed = &f;
            break;
        }
    }
    if (!listed)
        throw RootNotListed("residue_at: root is not one of the integrand's listed poles");

    ComplexPolynomial n = ComplexPolynomial::from_real(integrand.numerator);
    ComplexPolynomial d = ComplexPolynomial::constant(1.0);
    for (const auto& f : integrand.factors) {
        if (&f != listed) d = d * ComplexPolynomial::linear_power(f.root, f.multiplicity);
        d = d * ComplexPolynomial::linear_power(std::conj(f.root), f.multiplicity);
    }

    // d/dz [N e^{iwz} / D] = [(N' + iw N) D - N D'] e^{iwz} / D^2
    const Complex i_omega(0.0, integrand.omega);
    double factorial = 1.0;
    for (int k = 1; k < multiplicity; ++k) {
        n = (n.derivative() + n * i_omega) * d - n * d.derivative();
        d = d * d;
        factorial *= k;
    }

    Complex phase = std::exp(i_omega * root);
    return n.evaluate(root) * phase / (d.evaluate(root) * factorial);
}

/// 2 pi i times the sum of the residues at the listed upper-half-plane poles.
inline Complex integrate_by_residues(const RationalIntegrand& integrand) {
    integrand.validate();
    Complex sum(0.0);
    for (const auto& f : integrand.factors) sum += residue_at(integrand, f.root, f.multiplicity);
    return Complex(0.0, 2.0 * M_PI) * sum;
}

} // namespace negdim
