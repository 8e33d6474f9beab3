#pragma once

// Chevalley generators of U_v(gl(m|n)) and formal words in them.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "uglmn/lincomb.hpp"
#include "uglmn/profile.hpp"

namespace uglmn {

enum class GenKind { E, F, K };

/// One of E_h, F_h (1 <= h < m+n) or K_i^{+-1} (1 <= i <= m+n).
struct Generator {
    GenKind kind = GenKind::K;
    int index = 1;
    int sign = 1;  ///< +1 or -1; only meaningful for K.

    static Generator E(int h) { return {GenKind::E, h, 1}; }
    static Generator F(int h) { return {GenKind::F, h, 1}; }
    static Generator K(int i, int sign = 1) { return {GenKind::K, i, sign}; }

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;

    /// "E1", "F2", "K3", "K3^-1".
    std::string to_string() const;
    static Generator parse(const std::string& token);
};

/// Throws std::out_of_range if the generator does not exist for the profile.
void validate_generator(const Generator& g, const Profile& p);

/// Z2 degree: 1 for E_m and F_m, 0 otherwise.
int generator_parity(const Generator& g, const Profile& p);

/// Every generator of the profile: E_h, F_h, K_i, K_i^{-1}.
std::vector<Generator> all_generators(const Profile& p);

/// A word letter: E_h^{(a)} / F_h^{(a)} with divided-power exponent a >= 1,
/// or K_i^p with p != 0.
struct Letter {
    GenKind kind = GenKind::K;
    int index = 1;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Formal product of letters, stored in written (left-to-right) order. When a
/// word acts on a vector the rightmost letter is applied first.
class GenWord {
public:
    GenWord() = default;
    explicit GenWord(std::vector<Letter> letters);
    GenWord(std::initializer_list<Generator> gens);

    /// Appends on the right; zero exponents are dropped.
    GenWord& append(Letter l);
    GenWord& append(const Generator& g);
    GenWord& append(const GenWord& w);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const GenWord&, const GenWord&) = default;
    friend auto operator<=>(const GenWord&, const GenWord&) = default;
    friend GenWord operator*(GenWord a, const GenWord& b) { return a.append(b); }

    /// "F1^(2) K1^3 K2^-1 E2 E1"; the empty word prints as "".
    std::string to_string() const;
    static GenWord parse(const std::string& text);

private:
    std::vector<Letter> letters_;
};

/// Linear combination of words, e.g. a relation written as an operator.
using WordComb = LinComb<GenWord>;

std::string to_string(const WordComb& w);

/// Applies a word to a vector using a generator-level action on basis keys.
/// Divided powers E^{(a)} apply E a times and divide by [a]!; K^p applies
/// K^{sign p} |p| times.
template <class Key, class GenAction>
LinComb<Key> apply_word(const GenWord& w, LinComb<Key> x, GenAction&& act) {
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        const Letter& l = *it;
        if (l.kind == GenKind::K) {
            const Generator g = Generator::K(l.index, l.exponent > 0 ? 1 : -1);
            const int reps = l.exponent > 0 ? l.exponent : -l.exponent;
            for (int r = 0; r < reps; ++r) {
                x = apply_linear(x, [&](const Key& k) { return act(g, k); });
            }
            continue;
        }
        const Generator g{l.kind, l.index, 1};
        for (int r = 0; r < l.exponent; ++r) {
            x = apply_linear(x, [&](const Key& k) { return act(g, k); });
        }
        if (l.exponent > 1) x = x.scaled(quantum_factorial(l.exponent).inv());
        if (x.is_zero()) break;
    }
    return x;
}

/// Applies sum_w c_w w to a vector.
template <class Key, class GenAction>
LinComb<Key> apply_word_comb(const WordComb& op, const LinComb<Key>& x, GenAction&& act) {
    LinComb<Key> out;
    for (const auto& [w, c] : op) out.add(apply_word(w, x, act), c);
    return out;
}

}  // namespace uglmn
