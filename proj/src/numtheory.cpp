#include "orthochroma/numtheory.hpp"

#include <sstream>

namespace orthochroma::numtheory {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    // Miller-Rabin with the witness set covering all 64-bit composites.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw not_prime_error("p = " + std::to_string(p) + " is not prime");
    }
}

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("int_sqrt_exact: negative input");
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

int sgn(const BigInt& v) { return v.sign(); }

int sgn(const BigRational& v) { return v.sign(); }

double to_double(const BigRational& q) { return q.convert_to<double>(); }

namespace {

// Optional sign followed by at least one digit; BigInt's own string
// constructor is laxer than we want (it accepts the empty string).
bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("parse_rational: bad input '" + text + "'");
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) throw bad();
        return BigRational(BigInt(text));
    }
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) throw bad();
    BigInt num(num_text);
    BigInt den(den_text);
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

std::string rational_str(const BigRational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

const BigInt& ValExponent::exponent() const {
    if (!finite_) throw std::logic_error("ValExponent: exponent of infinity");
    return exponent_;
}

std::string ValExponent::str() const {
    if (!finite_) return "+inf";
    return exponent_.str();
}

ValExponent p_valuation_int(const BigInt& n, std::uint64_t p) {
    require_prime(p);
    if (n == 0) return ValExponent::infinity();
    BigInt rest = abs(n);
    BigInt bp(p);
    BigInt count = 0;
    BigInt q, r;
    while (true) {
        divide_qr(rest, bp, q, r);
        if (r != 0) break;
        rest = q;
        ++count;
    }
    return ValExponent(count);
}

ValExponent p_valuation(const BigRational& q, std::uint64_t p) {
    require_prime(p);
    if (q == 0) return ValExponent::infinity();
    // gcd(num, den) = 1, so at most one of the two parts carries powers of p.
    ValExponent vn = p_valuation_int(numerator(q), p);
    ValExponent vd = p_valuation_int(denominator(q), p);
    return ValExponent(vn.exponent() - vd.exponent());
}

int QSqrt2::sgn() const {
    if (rat_ == 0 && sq2_ == 0) return 0;
    // Compare a^2 with 2 b^2; equality would force a = b = 0.
    BigRational a2 = rat_ * rat_;
    BigRational b2 = 2 * sq2_ * sq2_;
    if (a2 == b2) throw std::logic_error("QSqrt2::sgn: a^2 == 2 b^2 for nonzero element");
    return a2 > b2 ? numtheory::sgn(rat_) : numtheory::sgn(sq2_);
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt2: inversion of zero");
    BigRational n = norm();
    return QSqrt2(rat_ / n, -sq2_ / n);
}

std::string QSqrt2::str() const {
    if (sq2_ == 0) return rational_str(rat_);
    std::ostringstream os;
    if (rat_ != 0) os << rational_str(rat_) << (sq2_ > 0 ? "+" : "");
    os << rational_str(sq2_) << "*sqrt2";
    return os.str();
}

}  // namespace orthochroma::numtheory
