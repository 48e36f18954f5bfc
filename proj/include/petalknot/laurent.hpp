#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace petalknot {

using BigInt = boost::multiprecision::cpp_int;

// Exact single-variable Laurent polynomial with arbitrary-precision integer
// coefficients. Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);                     // constant
    Laurent(const BigInt& c);            // constant
    static Laurent monomial(BigInt c, int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int min_exp() const;                 // requires non-zero
    int max_exp() const;                 // requires non-zero
    BigInt coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    Laurent shifted(int k) const;        // multiply by t^k
    Laurent inverted() const;            // t -> 1/t
    Laurent pow(unsigned k) const;
    BigInt eval(const BigInt& x) const;  // requires min_exp() >= 0 or x = +-1

    // Exact polynomial division; throws VerificationError if not divisible.
    static Laurent div_exact(const Laurent& num, const Laurent& den);

    std::string str(const std::string& var = "t") const;

private:
    void set(int exp, BigInt c);
    std::map<int, BigInt> terms_;        // exponent -> non-zero coefficient
};

} // namespace petalknot
