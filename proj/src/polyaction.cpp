#include "uglmn/polyaction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uglmn {

std::string to_string(Flavor f) { return f == Flavor::ZeroOne ? "0|1" : "1|0"; }

Flavor parse_flavor(const std::string& s) {
    if (s == "0|1" || s == "01" || s == "ZeroOne") return Flavor::ZeroOne;
    if (s == "1|0" || s == "10" || s == "OneZero") return Flavor::OneZero;
    throw std::invalid_argument("unknown flavor '" + s + "' (expected 0|1 or 1|0)");
}

// ---------------------------------------------------------------- DividedMonomial

DividedMonomial::DividedMonomial(Profile p, Flavor f, IntVector exponents)
    : profile_(p), flavor_(f), exps_(std::move(exponents)) {
    validate_profile(p);
    if (static_cast<int>(exps_.size()) != p.size()) {
        throw std::invalid_argument("DividedMonomial: exponent vector has wrong length");
    }
    for (int i = 1; i <= p.size(); ++i) {
        int x = (*this)[i];
        if (x < 0) throw std::invalid_argument("DividedMonomial: negative exponent");
        if (x > 1 && is_z2_slot(i)) {
            throw std::invalid_argument("DividedMonomial: exponent " + std::to_string(i) + " must be 0 or 1");
        }
    }
}

bool DividedMonomial::is_z2_slot(int i) const {
    const bool even_index = i <= profile_.m;
    return flavor_ == Flavor::ZeroOne ? !even_index : even_index;
}

int DividedMonomial::degree() const {
    int s = 0;
    for (int x : exps_) s += x;
    return s;
}

int DividedMonomial::parity() const {
    int s = 0;
    for (int i = 1; i <= profile_.size(); ++i) {
        if (is_z2_slot(i)) s += (*this)[i];
    }
    return s % 2;
}

std::strong_ordering operator<=>(const DividedMonomial& a, const DividedMonomial& b) {
    if (auto c = a.profile_ <=> b.profile_; c != 0) return c;
    if (a.flavor_ != b.flavor_) return a.flavor_ == Flavor::ZeroOne ? std::strong_ordering::less
                                                                    : std::strong_ordering::greater;
    return a.exps_ <=> b.exps_;
}

std::vector<DividedMonomial> enumerate_monomials_exact(Profile p, Flavor f, int degree) {
    std::vector<DividedMonomial> out;
    for (auto& m : enumerate_monomials(p, f, degree)) {
        if (m.degree() == degree) out.push_back(std::move(m));
    }
    return out;
}

std::vector<DividedMonomial> enumerate_monomials(Profile p, Flavor f, int max_degree) {
    validate_profile(p);
    const DividedMonomial probe(p, f, IntVector(static_cast<std::size_t>(p.size()), 0));
    std::vector<DividedMonomial> out;
    IntVector cur(static_cast<std::size_t>(p.size()), 0);
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i > p.size()) {
            out.emplace_back(p, f, cur);
            return;
        }
        const int hi = probe.is_z2_slot(i) ? std::min(budget, 1) : budget;
        for (int x = 0; x <= hi; ++x) {
            cur[static_cast<std::size_t>(i - 1)] = x;
            self(self, i + 1, budget - x);
        }
        cur[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(rec, 1, max_degree);
    return out;
}

// ---------------------------------------------------------------- factor action

FactorElement act_factor(const Generator& g, const DividedMonomial& x, const ActionOptions& opts) {
    const Profile& p = x.profile();
    validate_generator(g, p);
    FactorElement out;
    const int h = g.index;
    switch (g.kind) {
        case GenKind::K:
            out.add(x, v_sub(h, g.sign * x[h], p));
            break;
        case GenKind::E: {
            if (x[h + 1] == 0) break;
            // X_h^{(2)} vanishes on an odd variable.
            if (x.is_z2_slot(h) && x[h] >= 1) break;
            IntVector e = x.exponents();
            e[h - 1] += 1;
            e[h] -= 1;
            VFunc c = quantum_integer(x[h] + 1);
            if (opts.mutate_odd_sign && h == p.m) c = -c;
            out.add(DividedMonomial(p, x.flavor(), std::move(e)), c);
            break;
        }
        case GenKind::F: {
            if (x[h] == 0) break;
            if (x.is_z2_slot(h + 1) && x[h + 1] >= 1) break;
            IntVector e = x.exponents();
            e[h - 1] -= 1;
            e[h] += 1;
            out.add(DividedMonomial(p, x.flavor(), std::move(e)), quantum_integer(x[h + 1] + 1));
            break;
        }
    }
    return out;
}

FactorElement act_word_factor(const GenWord& w, const FactorElement& x, const ActionOptions& opts) {
    return apply_word(w, x, [&](const Generator& g, const DividedMonomial& k) { return act_factor(g, k, opts); });
}

// ---------------------------------------------------------------- tensor action

Flavor column_flavor(int j, const Profile& p) { return j <= p.m ? Flavor::ZeroOne : Flavor::OneZero; }

DividedMonomial column_monomial(const SuperMatrix& a, int j) {
    IntVector c(static_cast<std::size_t>(a.size()));
    for (int s = 1; s <= a.size(); ++s) c[static_cast<std::size_t>(s - 1)] = a(s, j);
    return DividedMonomial(a.profile(), column_flavor(j, a.profile()), std::move(c));
}

TensorElement act_tensor_closed(const Generator& g, const SuperMatrix& a, const ActionOptions& opts) {
    const Profile& p = a.profile();
    validate_generator(g, p);
    TensorElement out;
    const int n = p.size();
    const int h = g.index;
    switch (g.kind) {
        case GenKind::K:
            out.add(a, v_sub(h, g.sign * static_cast<int>(a.row_sum(h)), p));
            break;
        case GenKind::E: {
            bool mutated = false;
            for (int i = 1; i <= n; ++i) {
                if (a(h + 1, i) < 1) continue;
                auto up = a.shifted(h, i, 1);
                if (!up) continue;  // Z2 slot would reach 2
                auto target = up->shifted(h + 1, i, -1);
                if (!target) throw std::logic_error("act_tensor_closed: guard violated");
                VFunc c = quantum_integer(a(h, i) + 1)
                              .times_power(v_exponent(h, static_cast<int>(f_stat(h, i, a)), p), sign_of(sigma_hm(h, i, a)));
                if (opts.mutate_odd_sign && h == p.m && !mutated) {
                    c = -c;
                    mutated = true;
                }
                out.add(*target, c);
            }
            break;
        }
        case GenKind::F: {
            for (int i = 1; i <= n; ++i) {
                if (a(h, i) < 1) continue;
                auto up = a.shifted(h + 1, i, 1);
                if (!up) continue;
                auto target = up->shifted(h, i, -1);
                if (!target) throw std::logic_error("act_tensor_closed: guard violated");
                VFunc c = quantum_integer(a(h + 1, i) + 1)
                              .times_power(v_exponent(h + 1, static_cast<int>(g_stat(h, i, a)), p), sign_of(sigma_hm(h, i, a)));
                out.add(*target, c);
            }
            break;
        }
    }
    return out;
}

namespace {

// A factor operator is a short word of generators applied to one column.
using FactorOp = std::vector<Generator>;

// Each generator sends a divided monomial to a multiple of at most one
// monomial, so the image of a factor operator is empty or a single term. Unit
// coefficients +-v^k are kept as integers so products over the columns stay
// cheap.
struct FactorImage {
    bool zero = true;
    IntVector exps;
    bool unit = false;
    VFunc::SignedPower power{1, 0};
    VFunc coeff;
};

FactorImage apply_factor_op(const FactorOp& op, const DividedMonomial& x) {
    FactorElement cur(x);
    for (auto it = op.rbegin(); it != op.rend(); ++it) {
        cur = apply_linear(cur, [&](const DividedMonomial& k) { return act_factor(*it, k); });
    }
    if (cur.size() > 1) throw std::logic_error("factor operator produced more than one monomial");
    FactorImage out;
    if (cur.is_zero()) return out;
    const auto& [mono, c] = *cur.begin();
    out.zero = false;
    out.exps = mono.exponents();
    out.coeff = c;
    out.unit = c.as_signed_power(out.power);
    return out;
}

// A column only takes a handful of values across a sweep over matrices, so
// the factor images are memoized per thread.
const FactorImage& cached_factor_op(const FactorOp& op, const DividedMonomial& x) {
    thread_local std::map<FactorOp, std::map<DividedMonomial, FactorImage>> cache;
    auto& inner = cache[op];
    if (inner.size() > (1u << 14)) inner.clear();
    auto it = inner.find(x);
    if (it == inner.end()) it = inner.emplace(x, apply_factor_op(op, x)).first;
    return it->second;
}

// Applies op_1 (x) ... (x) op_N to the columns of A and reassembles the matrix.
void apply_tensor_op(const std::vector<const FactorOp*>& ops, const std::vector<DividedMonomial>& cols,
                     int sign, TensorElement& out) {
    const Profile& p = cols.front().profile();
    const int n = p.size();
    int exponent = 0;
    const VFunc* rest = nullptr;
    VFunc product;
    std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
    for (int j = 1; j <= n; ++j) {
        const FactorImage& col = cached_factor_op(*ops[static_cast<std::size_t>(j - 1)], cols[static_cast<std::size_t>(j - 1)]);
        if (col.zero) return;
        if (col.unit) {
            sign *= col.power.sign;
            exponent += col.power.exponent;
        } else if (rest == nullptr) {
            rest = &col.coeff;
        } else {
            product = *rest * col.coeff;
            rest = &product;
        }
        for (int s = 1; s <= n; ++s) {
            entries[static_cast<std::size_t>((s - 1) * n + (j - 1))] = col.exps[static_cast<std::size_t>(s - 1)];
        }
    }
    out.add(SuperMatrix(p, std::move(entries)), (rest ? *rest : VFunc(1)).times_power(exponent, sign));
}

}  // namespace

TensorElement act_tensor_oracle(const Generator& g, const SuperMatrix& a) {
    const Profile& p = a.profile();
    validate_generator(g, p);
    const int n = p.size();
    std::vector<DividedMonomial> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) cols.push_back(column_monomial(a, j));

    TensorElement out;
    const FactorOp self{g};
    if (g.kind == GenKind::K) {
        apply_tensor_op(std::vector<const FactorOp*>(static_cast<std::size_t>(n), &self), cols, 1, out);
        return out;
    }
    const int h = g.index;
    const int gp = generator_parity(g, p);
    // K~_h = K_h K_{h+1}^{-1} and its inverse.
    const FactorOp ktilde{Generator::K(h, 1), Generator::K(h + 1, -1)};
    const FactorOp ktilde_inv{Generator::K(h, -1), Generator::K(h + 1, 1)};
    const FactorOp identity{};
    int parity_before = 0;
    std::vector<const FactorOp*> ops(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const FactorOp* op = &identity;
            if (j == i) {
                op = &self;
            } else if (g.kind == GenKind::E && j > i) {
                op = &ktilde;
            } else if (g.kind == GenKind::F && j < i) {
                op = &ktilde_inv;
            }
            ops[static_cast<std::size_t>(j - 1)] = op;
        }
        apply_tensor_op(ops, cols, (gp * parity_before) % 2 == 0 ? 1 : -1, out);
        parity_before += cols[static_cast<std::size_t>(i - 1)].parity();
    }
    return out;
}

TensorElement act_tensor_element(const Generator& g, const TensorElement& x, const ActionOptions& opts) {
    return apply_linear(x, [&](const SuperMatrix& k) { return act_tensor_closed(g, k, opts); });
}

TensorElement act_word_tensor(const GenWord& w, const TensorElement& x, const ActionOptions& opts) {
    return apply_word(w, x, [&](const Generator& g, const SuperMatrix& k) { return act_tensor_closed(g, k, opts); });
}

// ---------------------------------------------------------------- highest weight

GenWord highest_weight_word(int r, const IntVector& a, const Profile& p) {
    const DividedMonomial target(p, Flavor::ZeroOne, a);
    if (r < 1) throw std::invalid_argument("highest_weight_word: r must be positive");
    if (target.degree() != r) {
        throw std::invalid_argument("highest_weight_word: weight mismatch, |a| = " + std::to_string(target.degree()) +
                                    " but r = " + std::to_string(r));
    }
    IntVector top(static_cast<std::size_t>(p.size()), 0);
    top[0] = r;
    const DividedMonomial source(p, Flavor::ZeroOne, top);  // rejects r > 1 on an odd first slot
    GenWord w;
    for (int k = 2; k <= p.size(); ++k) {
        const int ak = a[static_cast<std::size_t>(k - 1)];
        for (int h = k - 1; h >= 1; --h) w.append(Letter{GenKind::F, h, ak});
    }
    return w;
}

GenWord reversed_e_word(const GenWord& w) {
    std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
    for (auto& l : ls) {
        if (l.kind == GenKind::F) {
            l.kind = GenKind::E;
        } else if (l.kind == GenKind::E) {
            l.kind = GenKind::F;
        }
    }
    return GenWord(std::move(ls));
}

}  // namespace uglmn
