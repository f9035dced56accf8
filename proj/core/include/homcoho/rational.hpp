#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace homcoho {

using Integer = mpz_class;

// Input problems (bad file, arity mismatch, malformed rational, ...).
// The CLI maps these to exit code 2.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (invalid algebra fed to cohomology,
// non-morphism twist, singular structure map, ...).  CLI exit code 1.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar.  Canonical at all times: denominator > 0 and
// gcd(numerator, denominator) = 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw StructureError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p" or "p/q" with optional sign, exact.
    static Rational parse(const std::string& s);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw StructureError("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const {
        if (is_zero()) throw StructureError("inverse of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

private:
    mpq_class q_;
};

inline Rational Rational::parse(const std::string& s) {
    auto bad = [&]() -> StructureError {
        return StructureError("malformed rational literal '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](std::string t) {
        if (t.empty()) throw bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') throw bad();
        return t[0] == '+' ? t.substr(1) : t;  // mpz rejects a leading '+'
    };
    if (slash == std::string::npos) return Rational(Integer(check_int(s)));
    std::string num = check_int(s.substr(0, slash));
    std::string den = check_int(s.substr(slash + 1));
    Integer d(den);
    if (d == 0) throw bad();
    return Rational(Integer(num), d);
}

}  // namespace homcoho
