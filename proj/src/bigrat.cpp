#include "uglmn/bigrat.hpp"

#include <limits>
#include <stdexcept>

namespace uglmn {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from(i128 x) {
    const bool neg = x < 0;
    u128 mag = neg ? -static_cast<u128>(x) : static_cast<u128>(x);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class mpq_from(std::int64_t n, std::int64_t d) {
    mpq_class q(mpz_from(n), mpz_from(d));
    q.canonicalize();
    return q;
}

}  // namespace

BigRat::BigRat(long long num, long long den) {
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    *this = from_wide(num, den);
}

BigRat::BigRat(const mpq_class& q) { *this = from_mpq(q); }

BigRat::BigRat(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("BigRat: cannot parse '" + text + "'");
    if (sgn(q.get_den()) == 0) throw std::domain_error("BigRat: zero denominator");
    q.canonicalize();
    *this = from_mpq(std::move(q));
}

BigRat BigRat::from_mpq(mpq_class q) {
    BigRat r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        r.n_ = q.get_num().get_si();
        r.d_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

BigRat BigRat::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits64(num) && fits64(den)) {
        BigRat r;
        r.n_ = static_cast<std::int64_t>(num);
        r.d_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(mpz_from(num), mpz_from(den));
    return from_mpq(std::move(q));
}

mpq_class BigRat::to_mpq() const { return big_ ? *big_ : mpq_from(n_, d_); }

std::string BigRat::get_str() const {
    if (big_) return big_->get_str();
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

int BigRat::sign() const {
    if (big_) return ::sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

BigRat BigRat::operator-() const {
    if (big_) return from_mpq(-*big_);
    return from_wide(-static_cast<i128>(n_), d_);
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    if (a.big_ || b.big_) return BigRat::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.d_ == 1 && b.d_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.n_, b.n_, &s)) return BigRat(s);
    }
    // Each product fits in 127 bits and so does their sum.
    return BigRat::from_wide(static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_,
                             static_cast<i128>(a.d_) * b.d_);
}

BigRat operator-(const BigRat& a, const BigRat& b) { return a + (-b); }

BigRat operator*(const BigRat& a, const BigRat& b) {
    if (a.big_ || b.big_) return BigRat::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.d_ == 1 && b.d_ == 1) {
        std::int64_t s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &s)) return BigRat(s);
    }
    return BigRat::from_wide(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.sign() == 0) throw std::domain_error("BigRat: division by zero");
    if (a.big_ || b.big_) return BigRat::from_mpq(a.to_mpq() / b.to_mpq());
    return BigRat::from_wide(static_cast<i128>(a.n_) * b.d_, static_cast<i128>(a.d_) * b.n_);
}

bool operator==(const BigRat& a, const BigRat& b) {
    // Small values are canonical and never stored as big, so a mixed pair differs.
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    if (a.big_ || b.big_) return false;
    return a.n_ == b.n_ && a.d_ == b.d_;
}

std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    if (a.big_ || b.big_) {
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return static_cast<i128>(a.n_) * b.d_ <=> static_cast<i128>(b.n_) * a.d_;
}

}  // namespace uglmn
