#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rotor/rational.hpp"
#include "rotor/state.hpp"

namespace rotor {

/// Phase-space variables of the polynomial part, in column order.
enum class Var { x = 0, y = 1, px = 2, py = 3, ptheta = 4, theta = 5 };

/// Monomial x^a y^b px^c py^d ptheta^e * exp(i k theta).
struct FourierMonomial {
    std::array<int, 5> exp{0, 0, 0, 0, 0};
    int fourier_index = 0;

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3] + exp[4]; }

    friend bool operator==(const FourierMonomial& a, const FourierMonomial& b) {
        return a.exp == b.exp && a.fourier_index == b.fourier_index;
    }
};

/// Graded-lex on the exponent tuple, ties broken by Fourier index ascending.
struct MonomialOrder {
    bool operator()(const FourierMonomial& a, const FourierMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.exp != b.exp) return a.exp < b.exp;
        return a.fourier_index < b.fourier_index;
    }
};

/// Exact observable: finite sum of Fourier monomials with Gaussian-rational
/// coefficients. Canonical form: no zero coefficients, terms ordered by
/// MonomialOrder (the map invariant).
class Observable {
public:
    using TermMap = std::map<FourierMonomial, RationalComplex, MonomialOrder>;

    Observable() = default;

    static Observable constant(RationalComplex c) {
        Observable o;
        o.add_term(FourierMonomial{}, std::move(c));
        return o;
    }

    static Observable variable(Var v) {
        Observable o;
        FourierMonomial m;
        if (v == Var::theta) throw std::invalid_argument("theta enters observables only through exp(i k theta)");
        m.exp[static_cast<int>(v)] = 1;
        o.add_term(m, RationalComplex(1L));
        return o;
    }

    /// exp(i k theta)
    static Observable fourier(int k) {
        Observable o;
        FourierMonomial m;
        m.fourier_index = k;
        o.add_term(m, RationalComplex(1L));
        return o;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const FourierMonomial& m, const RationalComplex& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Observable operator+(const Observable& a, const Observable& b) {
        Observable r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Observable operator-(const Observable& a, const Observable& b) {
        Observable r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Observable operator-(const Observable& a) {
        Observable r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Observable operator*(const Observable& a, const Observable& b) {
        Observable r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                FourierMonomial m;
                for (int i = 0; i < 5; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
                m.fourier_index = ma.fourier_index + mb.fourier_index;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Observable operator*(const Observable& a, const RationalComplex& c) {
        Observable r;
        if (c.is_zero()) return r;
        for (const auto& [m, ac] : a.terms_) r.terms_.emplace(m, ac * c);
        return r;
    }
    friend Observable operator*(const RationalComplex& c, const Observable& a) { return a * c; }

    friend bool operator==(const Observable& a, const Observable& b) { return a.terms_ == b.terms_; }

    Observable pow(unsigned n) const {
        Observable r = constant(RationalComplex(1L));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Coefficient map c -> conj(c), Fourier index k -> -k. For real-valued
    /// observables this is the identity; for evaluations it is complex conjugation.
    Observable conjugate() const {
        Observable r;
        for (const auto& [m, c] : terms_) {
            FourierMonomial mc = m;
            mc.fourier_index = -m.fourier_index;
            r.terms_.emplace(mc, c.conj());
        }
        return r;
    }

    bool is_real_valued() const { return *this == conjugate(); }

private:
    TermMap terms_;
};

inline Observable partial_derivative(const Observable& a, Var v) {
    Observable r;
    if (v == Var::theta) {
        for (const auto& [m, c] : a.terms()) {
            if (m.fourier_index == 0) continue;
            r.add_term(m, c * RationalComplex(Rational(0), Rational(m.fourier_index)));
        }
        return r;
    }
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : a.terms()) {
        if (m.exp[vi] == 0) continue;
        FourierMonomial d = m;
        d.exp[vi] -= 1;
        r.add_term(d, c * RationalComplex(Rational(m.exp[vi])));
    }
    return r;
}

/// Canonical bracket over the pairs (x,p_x), (y,p_y), (theta,p_theta).
inline Observable poisson_bracket(const Observable& a, const Observable& b) {
    static constexpr std::array<std::pair<Var, Var>, 3> pairs{
        std::pair{Var::x, Var::px}, std::pair{Var::y, Var::py}, std::pair{Var::theta, Var::ptheta}};
    Observable r;
    for (auto [q, p] : pairs) {
        r = r + partial_derivative(a, q) * partial_derivative(b, p)
              - partial_derivative(a, p) * partial_derivative(b, q);
    }
    return r;
}

inline std::complex<double> evaluate(const Observable& a, const PhaseState& s) {
    std::complex<double> total = 0.0;
    const std::array<double, 5> v{s.x, s.y, s.px, s.py, s.ptheta};
    for (const auto& [m, c] : a.terms()) {
        double poly = 1.0;
        for (int i = 0; i < 5; ++i)
            for (int e = 0; e < m.exp[i]; ++e) poly *= v[i];
        std::complex<double> term(to_double(c.re), to_double(c.im));
        term *= poly;
        if (m.fourier_index != 0)
            term *= std::polar(1.0, m.fourier_index * s.theta);
        total += term;
    }
    return total;
}

/// Exact evaluation at a rational state. Requires theta = 0 so that every
/// exp(i k theta) factor is exactly 1.
inline RationalComplex evaluate_exact(const Observable& a, const ExactState& s) {
    if (s.theta != 0)
        throw std::domain_error("exact evaluation requires theta = 0");
    RationalComplex total;
    const std::array<Rational, 5> v{s.x, s.y, s.px, s.py, s.ptheta};
    for (const auto& [m, c] : a.terms()) {
        RationalComplex term = c;
        for (int i = 0; i < 5; ++i)
            for (int e = 0; e < m.exp[i]; ++e) term *= RationalComplex(v[i]);
        total += term;
    }
    return total;
}

// ---- deterministic text form ------------------------------------------------
// One term per line, canonical order:
//   (p/q+r/s i) * x^a y^b px^c py^d ptheta^e * exp(i k theta)
// Round-trips exactly through parse_observable.

inline std::string to_string(const Observable& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        if (!out.empty()) out += "\n";
        out += "(" + to_string(c) + ") * x^" + std::to_string(m.exp[0]) +
               " y^" + std::to_string(m.exp[1]) + " px^" + std::to_string(m.exp[2]) +
               " py^" + std::to_string(m.exp[3]) + " ptheta^" + std::to_string(m.exp[4]) +
               " * exp(i " + std::to_string(m.fourier_index) + " theta)";
    }
    return out;
}

inline RationalComplex parse_rational_complex(const std::string& text) {
    // "p/q", "p/q+r/s i", "p/q-r/s i"
    auto itail = text.rfind(" i");
    if (itail == std::string::npos || itail + 2 != text.size()) return RationalComplex(parse_rational(text));
    std::string body = text.substr(0, itail);
    // split at the sign separating re and im (skip a leading sign)
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != 'e' && body[k - 1] != 'E') {
            Rational re = parse_rational(body.substr(0, k));
            Rational im = parse_rational(body.substr(k + 1));
            if (body[k] == '-') im = -im;
            return {re, im};
        }
    }
    return {Rational(0), parse_rational(body)};
}

inline Observable parse_observable(const std::string& text) {
    if (text == "0") return {};
    Observable r;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto close = line.find(") * ");
        if (line.front() != '(' || close == std::string::npos)
            throw std::invalid_argument("malformed observable term: " + line);
        RationalComplex c = parse_rational_complex(line.substr(1, close - 1));
        FourierMonomial m;
        int k = 0;
        if (std::sscanf(line.c_str() + close + 4, "x^%d y^%d px^%d py^%d ptheta^%d * exp(i %d theta)",
                        &m.exp[0], &m.exp[1], &m.exp[2], &m.exp[3], &m.exp[4], &k) != 6)
            throw std::invalid_argument("malformed observable term: " + line);
        m.fourier_index = k;
        r.add_term(m, c);
    }
    return r;
}

}  // namespace rotor
