#include "uglmn/blm.hpp"

#include <algorithm>
#include <stdexcept>

namespace uglmn {

BlmBasis::BlmBasis(SuperMatrix a_, IntVector j_) : a(std::move(a_)), j(std::move(j_)) {
    if (!a.is_off_diagonal()) throw std::invalid_argument("A(j) requires a diagonal-free matrix");
    if (static_cast<int>(j.size()) != a.size()) throw std::invalid_argument("A(j): j has the wrong length");
}

std::strong_ordering operator<=>(const BlmBasis& x, const BlmBasis& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.j <=> y.j;
}

BlmBasis identity_basis(const Profile& p) {
    return BlmBasis(SuperMatrix(p), IntVector(static_cast<std::size_t>(p.size()), 0));
}

// ---------------------------------------------------------------- actions

BlmElement act_K(int i, int sign, const BlmBasis& b) {
    const Profile& p = b.profile();
    validate_generator(Generator::K(i, sign), p);
    IntVector j = b.j;
    j[static_cast<std::size_t>(i - 1)] += sign;
    return BlmElement(BlmBasis(b.a, std::move(j)), v_sub(i, sign * static_cast<int>(b.a.row_sum(i)), p));
}

namespace {

VFunc term_sign(int h, int i, const SuperMatrix& a, const ActionOptions& opts) {
    return sign_power(opts.signs == SignConvention::Signed ? s_sign(h, i, a) : sigma_hm(h, i, a));
}

// 1 / (v_h - v_h^{-1})
VFunc inverse_quantum_gap(int h, const Profile& p) { return (v_sub(h, 1, p) - v_sub(h, -1, p)).inv(); }

// A + delta_top E_{top,col} + delta_bottom E_{bottom,col}; nullopt if it leaves M(m|n).
std::optional<SuperMatrix> move_entry(const SuperMatrix& a, int top, int bottom, int col, int delta_top) {
    auto t = a.shifted(top, col, delta_top);
    if (!t) return std::nullopt;
    return t->shifted(bottom, col, -delta_top);
}

}  // namespace

BlmElement act_E(int h, const BlmBasis& b, const ActionOptions& opts) {
    const Profile& p = b.profile();
    validate_generator(Generator::E(h), p);
    const SuperMatrix& a = b.a;
    const int n = p.size();
    const bool odd = h == p.m;
    BlmElement out;

    // Entries of row h+1 away from the diagonal block move up one row.
    for (int i = 1; i <= n; ++i) {
        if (i == h || i == h + 1 || a(h + 1, i) < 1) continue;
        auto target = move_entry(a, h, h + 1, i, 1);
        if (!target) continue;  // Z2 slot (h, i) already occupied
        VFunc c = term_sign(h, i, a, opts) * v_sub(h, static_cast<int>(f_stat(h, i, a)), p) *
                  quantum_integer(a(h, i) + 1);
        IntVector j = i > h + 1 ? b.j : b.j + alpha(h, p);
        out.add(BlmBasis(*target, std::move(j)), c);
    }

    if (a(h + 1, h) >= 1) {
        SuperMatrix reduced = *a.shifted(h + 1, h, -1);
        VFunc c = term_sign(h, h, a, opts) *
                  v_sub(h, static_cast<int>(f_stat(h, h, a)) - b.j[static_cast<std::size_t>(h - 1)], p) *
                  inverse_quantum_gap(h, p);
        out.add(BlmBasis(reduced, b.j + alpha(h, p)), c);
        out.add(BlmBasis(reduced, b.j - beta(h, p)), -c);
    }

    if (auto target = a.shifted(h, h + 1, 1)) {
        const int jn = b.j[static_cast<std::size_t>(h)];
        VFunc c = term_sign(h, h + 1, a, opts) *
                  v_sub(h, static_cast<int>(f_stat(h, h + 1, a)) + (odd ? -jn : jn), p) *
                  quantum_integer(a(h, h + 1) + 1);
        if (opts.mutate_odd_sign && odd) c = -c;
        out.add(BlmBasis(*target, b.j), c);
    }
    return out;
}

BlmElement act_F(int h, const BlmBasis& b, const ActionOptions& opts) {
    const Profile& p = b.profile();
    validate_generator(Generator::F(h), p);
    const SuperMatrix& a = b.a;
    const int n = p.size();
    const bool odd = h == p.m;
    BlmElement out;

    for (int i = 1; i <= n; ++i) {
        if (i == h || i == h + 1 || a(h, i) < 1) continue;
        auto target = move_entry(a, h + 1, h, i, 1);
        if (!target) continue;
        VFunc c = term_sign(h, i, a, opts) * v_sub(h + 1, static_cast<int>(g_stat(h, i, a)), p) *
                  quantum_integer(a(h + 1, i) + 1);
        IntVector j = i < h ? b.j : b.j - alpha(h, p);
        out.add(BlmBasis(*target, std::move(j)), c);
    }

    if (auto target = a.shifted(h + 1, h, 1)) {
        const int jh = b.j[static_cast<std::size_t>(h - 1)];
        VFunc c = term_sign(h, h, a, opts) *
                  v_sub(h + 1, static_cast<int>(g_stat(h, h, a)) + (odd ? -jh : jh), p) *
                  quantum_integer(a(h + 1, h) + 1);
        out.add(BlmBasis(*target, b.j), c);
    }

    if (a(h, h + 1) >= 1) {
        SuperMatrix reduced = *a.shifted(h, h + 1, -1);
        VFunc c = term_sign(h, h + 1, a, opts) *
                  v_sub(h + 1, static_cast<int>(g_stat(h, h + 1, a)) - b.j[static_cast<std::size_t>(h)], p) *
                  inverse_quantum_gap(h + 1, p);
        out.add(BlmBasis(reduced, b.j - alpha(h, p)), c);
        out.add(BlmBasis(reduced, b.j - beta(h, p)), -c);
    }
    return out;
}

BlmElement act_blm(const Generator& g, const BlmBasis& b, const ActionOptions& opts) {
    switch (g.kind) {
        case GenKind::E: return act_E(g.index, b, opts);
        case GenKind::F: return act_F(g.index, b, opts);
        case GenKind::K: return act_K(g.index, g.sign, b);
    }
    throw std::logic_error("act_blm: unknown generator kind");
}

BlmElement act_element(const Generator& g, const BlmElement& x, const ActionOptions& opts) {
    return apply_linear(x, [&](const BlmBasis& b) { return act_blm(g, b, opts); });
}

BlmElement act_word_blm(const GenWord& w, const BlmElement& x, const ActionOptions& opts) {
    return apply_word(w, x, [&](const Generator& g, const BlmBasis& b) { return act_blm(g, b, opts); });
}

// ---------------------------------------------------------------- truncation oracle

namespace {

template <class Visit>
void for_each_lambda(int size, int level, Visit&& visit) {
    IntVector lambda(static_cast<std::size_t>(size), 0);
    auto rec = [&](auto&& self, int k, int budget) -> void {
        if (k == size) {
            visit(lambda);
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            lambda[static_cast<std::size_t>(k)] = x;
            self(self, k + 1, budget - x);
        }
        lambda[static_cast<std::size_t>(k)] = 0;
    };
    rec(rec, 0, level);
}

long diagonal_excess(const SuperMatrix& m) {
    long s = 0;
    for (int i = 1; i <= m.size(); ++i) s += m(i, i);
    return s;
}

}  // namespace

TruncatedSeries truncate(const BlmBasis& b, int level) {
    if (level < 0) throw std::invalid_argument("truncate: negative level");
    const Profile& p = b.profile();
    TruncatedSeries out{{}, level};
    for_each_lambda(p.size(), level, [&](const IntVector& lambda) {
        out.series.add(b.a.plus_diagonal(lambda), VFunc::v_power(static_cast<int>(super_dot(lambda, b.j, p))));
    });
    return out;
}

TensorElement truncate_element(const BlmElement& x, int level) {
    TensorElement out;
    for (const auto& [b, c] : x) out.add(truncate(b, level).series, c);
    return out;
}

TensorElement truncation_mismatch(const Generator& g, const BlmBasis& b, int level) {
    if (level < 1) throw std::invalid_argument("compare_truncated: level must be >= 1");
    validate_generator(g, b.profile());
    const TensorElement lhs = act_tensor_element(g, truncate(b, level).series);
    const TensorElement rhs = truncate_element(act_blm(g, b), level);
    TensorElement diff;
    for (const auto& [m, c] : lhs - rhs) {
        if (diagonal_excess(m) <= level - 1) diff.add(m, c);
    }
    return diff;
}

bool compare_truncated(const Generator& g, const BlmBasis& b, int level) {
    return truncation_mismatch(g, b, level).is_zero();
}

// ---------------------------------------------------------------- triangular words

GenWord monomial_word(const SuperMatrix& a, const IntVector& j) {
    const Profile& p = a.profile();
    const int n = p.size();
    if (static_cast<int>(j.size()) != n) throw std::invalid_argument("monomial_word: j has the wrong length");
    GenWord w;
    // m^-_k = F_k^{(a_{k+1,k})} (F_{k+1}^{(a_{k+2,k})} F_k^{(a_{k+2,k})}) ... (F_{N-1}^{(a_{N,k})} ... F_k^{(a_{N,k})})
    for (int k = 1; k <= n - 1; ++k) {
        for (int r = k + 1; r <= n; ++r) {
            for (int h = r - 1; h >= k; --h) w.append(Letter{GenKind::F, h, a(r, k)});
        }
    }
    for (int i = 1; i <= n; ++i) w.append(Letter{GenKind::K, i, j[static_cast<std::size_t>(i - 1)]});
    // m^+_c = E_{c-1}^{(a_{c-1,c})} (E_{c-2}^{(a_{c-2,c})} E_{c-1}^{(a_{c-2,c})}) ... (E_1^{(a_{1,c})} ... E_{c-1}^{(a_{1,c})})
    for (int c = n; c >= 2; --c) {
        for (int r = c - 1; r >= 1; --r) {
            for (int h = r; h <= c - 1; ++h) w.append(Letter{GenKind::E, h, a(r, c)});
        }
    }
    return w;
}

VFunc LeadingSplit::coefficient() const {
    VFunc s;
    for (const auto& [b, c] : leading) s += c;
    return s;
}

LeadingSplit leading_decompose(const BlmElement& x, const SuperMatrix& a) {
    LeadingSplit out;
    for (const auto& [b, c] : x) {
        if (b.a == a) {
            out.leading.add(b, c);
        } else if (preceq(b.a, a)) {
            out.lower.add(b, c);
        } else {
            throw std::domain_error("leading_decompose: term " + b.a.to_string() + " is not below " + a.to_string());
        }
    }
    return out;
}

Expander::Expander(Profile p, ActionOptions opts) : profile_(p), opts_(opts) { validate_profile(p); }

const BlmElement& Expander::word_image(const BlmBasis& b) {
    auto it = images_.find(b);
    if (it != images_.end()) return it->second;
    BlmElement img = act_word_blm(monomial_word(b.a, b.j), BlmElement(identity_basis(profile_)), opts_);
    return images_.emplace(b, std::move(img)).first->second;
}

const std::vector<WordTerm>& Expander::expand(const BlmBasis& target) {
    if (target.profile() != profile_) throw std::invalid_argument("Expander: profile mismatch");
    auto cached = expansions_.find(target);
    if (cached != expansions_.end()) return cached->second;

    WordComb words;
    BlmElement residual(target);
    // Each step removes a maximal term; the loop is finite because every
    // matrix that can appear lies in downset(target.a).
    constexpr int kStepLimit = 1 << 20;
    for (int step = 0; !residual.is_zero(); ++step) {
        if (step == kStepLimit) throw std::logic_error("expand_as_words: elimination did not terminate");

        // Pivot: a matrix with nothing above it in the residual. Among those,
        // the largest entry sum wins, then row-major lex order.
        std::vector<SuperMatrix> mats;
        for (const auto& [b, c] : residual) {
            if (mats.empty() || mats.back() != b.a) mats.push_back(b.a);
        }
        std::stable_sort(mats.begin(), mats.end(), [](const SuperMatrix& x, const SuperMatrix& y) {
            return x.total() > y.total();
        });
        const SuperMatrix* pivot = nullptr;
        for (const auto& cand : mats) {
            bool dominated = std::any_of(mats.begin(), mats.end(),
                                         [&](const SuperMatrix& other) { return precedes(cand, other); });
            if (!dominated) {
                pivot = &cand;
                break;
            }
        }
        if (pivot == nullptr) throw std::logic_error("expand_as_words: no maximal term (order is not partial)");

        auto key_it = std::find_if(residual.begin(), residual.end(),
                                   [&](const auto& kv) { return kv.first.a == *pivot; });
        const BlmBasis key = key_it->first;
        const VFunc coeff = key_it->second;

        const BlmElement& image = word_image(key);
        LeadingSplit split = leading_decompose(image, key.a);
        VFunc::SignedPower unit{};
        if (split.leading.size() != 1 || split.leading.begin()->first != key ||
            !split.leading.begin()->second.as_signed_power(unit)) {
            throw std::logic_error("expand_as_words: leading term of m^{A,j}.O(0) is not +-v^c A(j) for " +
                                   key.a.to_string());
        }
        const VFunc t = coeff / split.leading.begin()->second;
        words.add(monomial_word(key.a, key.j), t);
        residual.add(image, -t);
    }

    std::vector<WordTerm> out;
    out.reserve(words.size());
    for (const auto& [w, c] : words) out.push_back({c, w});
    return expansions_.emplace(target, std::move(out)).first->second;
}

BlmElement Expander::multiply(const BlmElement& x, const BlmElement& y) {
    BlmElement out;
    for (const auto& [b, c] : x) {
        if (b.profile() != profile_) throw std::invalid_argument("multiply: profile mismatch");
        for (const auto& term : expand(b)) out.add(act_word_blm(term.word, y, opts_), c * term.coeff);
    }
    return out;
}

std::vector<WordTerm> expand_as_words(const SuperMatrix& a, const IntVector& j) {
    Expander ex(a.profile());
    return ex.expand(BlmBasis(a, j));
}

BlmElement evaluate_words(const std::vector<WordTerm>& terms, const Profile& p) {
    const BlmElement one(identity_basis(p));
    BlmElement out;
    for (const auto& t : terms) out.add(act_word_blm(t.word, one), t.coeff);
    return out;
}

BlmElement multiply(const BlmElement& x, const BlmElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    const Profile p = x.begin()->first.profile();
    if (y.begin()->first.profile() != p) throw std::invalid_argument("multiply: profile mismatch");
    Expander ex(p);
    return ex.multiply(x, y);
}

BlmElement to_signed(const BlmElement& x) {
    BlmElement out;
    for (const auto& [b, c] : x) out.add(b, a_bar(b.a) % 2 == 0 ? c : -c);
    return out;
}

BlmElement from_signed(const BlmElement& x) { return to_signed(x); }

std::vector<BlmBasis> enumerate_blm_basis(Profile p, int bound, int jlo, int jhi) {
    std::vector<BlmBasis> out;
    const auto js = enumerate_vectors(p, jlo, jhi);
    for (const auto& a : enumerate_matrices(p, bound, true)) {
        for (const auto& j : js) out.emplace_back(a, j);
    }
    return out;
}

}  // namespace uglmn
