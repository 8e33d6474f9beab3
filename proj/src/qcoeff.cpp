#include "uglmn/qcoeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uglmn {

namespace {

const BigRat kZero(0);

// Formats a single term for the human-readable forms. `first` controls whether
// a leading "+" is emitted.
void append_term(std::ostringstream& os, const BigRat& c, int e, bool first, bool spaced) {
    BigRat mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
        if (negative) os << '-';
    } else if (spaced) {
        os << (negative ? " - " : " + ");
    } else {
        os << (negative ? '-' : '+');
    }
    if (e == 0) {
        os << mag.get_str();
        return;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
}

}  // namespace

// ---------------------------------------------------------------- VPoly

VPoly::VPoly(BigRat constant) {
    if (sgn(constant) != 0) terms_.emplace_back(0, std::move(constant));
}

VPoly::VPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

VPoly::VPoly(std::initializer_list<Term> terms) : terms_(terms) { canonicalize(); }

VPoly VPoly::monomial(int exponent, BigRat coeff) {
    if (exponent < 0) throw std::invalid_argument("VPoly: negative exponent");
    VPoly p;
    if (sgn(coeff) != 0) p.terms_.emplace_back(exponent, std::move(coeff));
    return p;
}

void VPoly::canonicalize() {
    for (const auto& [e, c] : terms_) {
        if (e < 0) throw std::invalid_argument("VPoly: negative exponent");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return sgn(t.second) == 0; });
    terms_ = std::move(merged);
}

bool VPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int VPoly::degree() const { return terms_.empty() ? -1 : terms_.back().first; }

int VPoly::valuation() const { return terms_.empty() ? 0 : terms_.front().first; }

const BigRat& VPoly::leading_coeff() const {
    return terms_.empty() ? kZero : terms_.back().second;
}

BigRat VPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

VPoly VPoly::shifted(int k) const {
    if (k == 0) return *this;
    if (!terms_.empty() && terms_.front().first + k < 0) {
        throw std::invalid_argument("VPoly::shifted: exponent below zero");
    }
    VPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

VPoly VPoly::scaled(const BigRat& c) const {
    if (sgn(c) == 0) return {};
    VPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

VPoly VPoly::monic() const {
    if (terms_.empty() || leading_coeff() == 1) return *this;
    return scaled(BigRat(1) / leading_coeff());
}

BigRat VPoly::evaluate(const BigRat& q) const {
    // Horner from the top degree down.
    BigRat acc = 0;
    int cur = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (; cur > it->first; --cur) acc *= q;
        acc += it->second;
    }
    for (; cur > 0; --cur) acc *= q;
    return acc;
}

VPoly VPoly::operator-() const {
    VPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

VPoly operator+(const VPoly& a, const VPoly& b) {
    VPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            BigRat s = i->second + j->second;
            if (sgn(s) != 0) r.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

VPoly operator-(const VPoly& a, const VPoly& b) { return a + (-b); }

VPoly operator*(const VPoly& a, const VPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
    if (a.is_monomial()) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
    std::vector<VPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
    }
    return VPoly(std::move(out));
}

std::pair<VPoly, VPoly> VPoly::divmod(const VPoly& a, const VPoly& b) {
    if (b.is_zero()) throw std::domain_error("VPoly::divmod: division by zero");
    VPoly quot;
    VPoly rem = a;
    const int db = b.degree();
    const BigRat& lb = b.leading_coeff();
    std::vector<Term> qterms;
    while (!rem.is_zero() && rem.degree() >= db) {
        int e = rem.degree() - db;
        BigRat c = rem.leading_coeff() / lb;
        qterms.emplace_back(e, c);
        rem = rem - b.shifted(e).scaled(c);
    }
    quot = VPoly(std::move(qterms));
    return {std::move(quot), std::move(rem)};
}

VPoly VPoly::gcd(VPoly a, VPoly b) {
    while (!b.is_zero()) {
        VPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::string VPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, it->second, it->first, first, false);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- VFunc

VFunc::VFunc(BigRat c) : num_(std::move(c)), den_(BigRat(1)) {}

VFunc::VFunc(VPoly num, VPoly den) {
    if (den.is_zero()) throw std::domain_error("VFunc: zero denominator");
    if (num.is_zero()) {
        den_ = VPoly(BigRat(1));
        return;
    }
    // Strip powers of v first so the gcd only sees polynomials with a
    // nonzero constant term.
    const int shift = num.valuation() - den.valuation();
    VPoly n = num.shifted(-num.valuation());
    VPoly d = den.shifted(-den.valuation());
    if (d.degree() > 0 && n.degree() > 0) {
        VPoly g = VPoly::gcd(n, d);
        if (g.degree() > 0) {
            n = VPoly::divmod(n, g).first;
            d = VPoly::divmod(d, g).first;
        }
    }
    if (d.leading_coeff() != 1) {
        BigRat s = BigRat(1) / d.leading_coeff();
        n = n.scaled(s);
        d = d.scaled(s);
    }
    if (shift >= 0) {
        num_ = n.shifted(shift);
        den_ = std::move(d);
    } else {
        num_ = std::move(n);
        den_ = d.shifted(-shift);
    }
}

VFunc VFunc::from_laurent(VPoly num, int shift) {
    VFunc r;
    if (num.is_zero()) return r;
    shift -= num.valuation();
    if (shift > 0) {
        r.num_ = num.valuation() == 0 ? std::move(num) : num.shifted(-num.valuation());
        r.den_ = VPoly::monomial(shift);
    } else {
        r.num_ = num.shifted(-num.valuation() - shift);
    }
    return r;
}

VFunc VFunc::v_power(int k, BigRat c) {
    VFunc r;
    if (sgn(c) == 0) return r;
    if (k >= 0) {
        r.num_ = VPoly::monomial(k, std::move(c));
    } else {
        r.num_ = VPoly(std::move(c));
        r.den_ = VPoly::monomial(-k);
    }
    return r;
}

VFunc VFunc::laurent(const std::vector<std::pair<int, BigRat>>& terms) {
    if (terms.empty()) return {};
    int low = 0;
    for (const auto& t : terms) low = std::min(low, t.first);
    std::vector<VPoly::Term> shifted;
    shifted.reserve(terms.size());
    for (const auto& [e, c] : terms) shifted.emplace_back(e - low, c);
    return VFunc(VPoly(std::move(shifted)), VPoly::monomial(-low));
}

VFunc VFunc::operator-() const {
    VFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

VFunc operator+(const VFunc& a, const VFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) {
            VFunc r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        if (a.is_laurent()) return VFunc::from_laurent(a.num_ + b.num_, a.den_.degree());
        return VFunc(a.num_ + b.num_, a.den_);
    }
    if (a.is_laurent() && b.is_laurent()) {
        // Common denominator v^max without a gcd.
        int da = a.den_.degree();
        int db = b.den_.degree();
        int dm = std::max(da, db);
        return VFunc::from_laurent(a.num_.shifted(dm - da) + b.num_.shifted(dm - db), dm);
    }
    return VFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

VFunc operator-(const VFunc& a, const VFunc& b) { return a + (-b); }

VFunc operator*(const VFunc& a, const VFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) {
        VFunc r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    if (a.is_laurent() && b.is_laurent()) return VFunc::from_laurent(a.num_ * b.num_, a.den_.degree() + b.den_.degree());
    return VFunc(a.num_ * b.num_, a.den_ * b.den_);
}

VFunc VFunc::inv() const {
    if (is_zero()) throw std::domain_error("VFunc::inv: division by zero");
    return VFunc(den_, num_);
}

VFunc VFunc::times_power(int k, int sign) const {
    if (is_zero()) return {};
    // num and den are coprime, so dropping their v-factors keeps them coprime.
    const int shift = k + num_.valuation() - den_.valuation();
    VPoly n = num_.shifted(-num_.valuation());
    VPoly d = den_.shifted(-den_.valuation());
    if (sign < 0) n = -n;
    VFunc r;
    if (shift >= 0) {
        r.num_ = n.shifted(shift);
        r.den_ = std::move(d);
    } else {
        r.num_ = std::move(n);
        r.den_ = d.shifted(-shift);
    }
    return r;
}

VFunc operator/(const VFunc& a, const VFunc& b) { return a * b.inv(); }

VFunc VFunc::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    VFunc result(1);
    VFunc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

BigRat VFunc::evaluate(const BigRat& q) const {
    BigRat d = den_.evaluate(q);
    if (sgn(d) == 0) throw std::domain_error("VFunc::evaluate: pole at v = " + q.get_str());
    return num_.evaluate(q) / d;
}

bool VFunc::as_signed_power(SignedPower& out) const {
    if (!num_.is_monomial() || !den_.is_monomial()) return false;
    const auto& [en, cn] = num_.terms().front();
    if (cn != 1 && cn != -1) return false;
    out.sign = sgn(cn);
    out.exponent = en - den_.terms().front().first;
    return true;
}

std::string VFunc::to_string() const {
    if (is_zero()) return "0";
    if (is_laurent()) {
        const int shift = den_.degree();
        std::ostringstream os;
        bool first = true;
        const auto& ts = num_.terms();
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
            append_term(os, it->second, it->first - shift, first, true);
            first = false;
        }
        return os.str();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- quantum numbers

namespace {

VFunc build_quantum_integer(int i) {
    if (i == 0) return {};
    std::vector<std::pair<int, BigRat>> terms;
    terms.reserve(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) terms.emplace_back(i - 1 - 2 * k, BigRat(1));
    return VFunc::laurent(terms);
}

}  // namespace

VFunc quantum_integer(int i) {
    if (i < 0) throw std::invalid_argument("quantum_integer: negative argument");
    constexpr int kTable = 32;
    static const std::vector<VFunc> table = [] {
        std::vector<VFunc> t;
        for (int k = 0; k < kTable; ++k) t.push_back(build_quantum_integer(k));
        return t;
    }();
    return i < kTable ? table[static_cast<std::size_t>(i)] : build_quantum_integer(i);
}

VFunc quantum_factorial(int a) {
    if (a < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    VFunc r(1);
    for (int i = 2; i <= a; ++i) r *= quantum_integer(i);
    return r;
}

}  // namespace uglmn
