#pragma once

// Exact rationals. Values whose numerator and denominator fit in 64 bits are
// stored inline; anything larger lives in a shared immutable GMP rational.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace uglmn {

class BigRat {
public:
    BigRat() = default;
    BigRat(int v) : n_(v) {}        // NOLINT(google-explicit-constructor)
    BigRat(long v) : n_(v) {}       // NOLINT(google-explicit-constructor)
    BigRat(long long v) : n_(v) {}  // NOLINT(google-explicit-constructor)
    /// num/den; throws std::domain_error on a zero denominator.
    BigRat(long long num, long long den);
    explicit BigRat(const mpq_class& q);
    /// Parses "a" or "a/b" with arbitrary-size integers.
    explicit BigRat(const std::string& text);

    mpq_class to_mpq() const;
    /// "a" or "a/b" in lowest terms.
    std::string get_str() const;

    int sign() const;
    bool is_small() const { return !big_; }

    BigRat operator-() const;
    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);
    BigRat& operator+=(const BigRat& b) { return *this = *this + b; }
    BigRat& operator-=(const BigRat& b) { return *this = *this - b; }
    BigRat& operator*=(const BigRat& b) { return *this = *this * b; }
    BigRat& operator/=(const BigRat& b) { return *this = *this / b; }

    friend bool operator==(const BigRat& a, const BigRat& b);
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b);

private:
    static BigRat from_mpq(mpq_class q);
    static BigRat from_wide(__int128 num, __int128 den);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;  // > 0, coprime with n_
    std::shared_ptr<const mpq_class> big_;
};

inline int sgn(const BigRat& q) { return q.sign(); }
inline BigRat abs(const BigRat& q) { return q.sign() < 0 ? -q : q; }

}  // namespace uglmn
