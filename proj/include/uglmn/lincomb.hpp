#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "uglmn/qcoeff.hpp"

namespace uglmn {

/// Finite linear combination of basis keys with Q(v) coefficients.
///
/// Stored in a std::map so iteration follows the key order; zero
/// coefficients are never kept.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, VFunc>;

    LinComb() = default;
    LinComb(const Key& k, VFunc c = VFunc(1)) { add(k, std::move(c)); }  // NOLINT

    void add(const Key& k, const VFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const VFunc& scale = VFunc(1)) {
        if (scale.is_zero()) return;
        const bool unit = scale.is_one();
        for (const auto& [k, c] : other.terms_) add(k, unit ? c : c * scale);
    }

    LinComb scaled(const VFunc& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, x * c);
        return r;
    }

    VFunc coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? VFunc() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        add(o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add(o, VFunc(-1));
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend bool operator==(const LinComb& a, const LinComb& b) = default;

private:
    Map terms_;
};

/// Extends a basis-level action linearly: sum_k c_k act(k).
template <class Key, class BasisAction>
LinComb<Key> apply_linear(const LinComb<Key>& x, BasisAction&& act) {
    LinComb<Key> out;
    for (const auto& [k, c] : x) out.add(act(k), c);
    return out;
}

}  // namespace uglmn
