#include "petalknot/laurent.hpp"

#include "petalknot/errors.hpp"

#include <sstream>

namespace petalknot {

Laurent::Laurent(long c) {
    if (c != 0) terms_[0] = c;
}

Laurent::Laurent(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

Laurent Laurent::monomial(BigInt c, int exp) {
    Laurent r;
    if (c != 0) r.terms_[exp] = std::move(c);
    return r;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw VerificationError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw VerificationError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Laurent::set(int exp, BigInt c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Laurent Laurent::inverted() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::pow(unsigned k) const {
    Laurent r(1);
    Laurent base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

BigInt Laurent::eval(const BigInt& x) const {
    if (terms_.empty()) return 0;
    if (min_exp() < 0) {
        if (x == 1 || x == -1) {
            BigInt r = 0;
            for (const auto& [e, c] : terms_) r += (x == -1 && (e % 2 != 0)) ? -c : c;
            return r;
        }
        throw VerificationError("eval with negative exponents at |x| != 1");
    }
    // Horner over the dense range [0, max_exp]
    BigInt r = 0;
    for (int e = max_exp(); e >= 0; --e) r = r * x + coeff(e);
    return r;
}

Laurent Laurent::div_exact(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw VerificationError("division by zero polynomial");
    if (num.is_zero()) return Laurent();
    Laurent rem = num;
    Laurent quot;
    const int dmax = den.max_exp();
    const BigInt& dlead = den.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dmax - den.min_exp()) {
        const int e = rem.max_exp() - dmax;
        BigInt q = rem.terms_.rbegin()->second / dlead;
        if (q * dlead != rem.terms_.rbegin()->second)
            throw VerificationError("inexact polynomial division (leading term)");
        Laurent m = Laurent::monomial(q, e);
        quot += m;
        rem -= m * den;
    }
    if (!rem.is_zero()) throw VerificationError("inexact polynomial division (remainder)");
    return quot;
}

std::string Laurent::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace petalknot
