#include "uglmn/relcheck.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace uglmn {

namespace {

const char* tag_name(RelTag t) {
    switch (t) {
        case RelTag::QG1: return "QG1";
        case RelTag::QG2: return "QG2";
        case RelTag::QG3: return "QG3";
        case RelTag::QG4: return "QG4";
        case RelTag::QG5: return "QG5";
        case RelTag::QG6Square: return "QG6-square";
        case RelTag::QG6Serre: return "QG6-serre";
    }
    return "?";
}

GenWord word(std::initializer_list<Generator> gens) { return GenWord(gens); }

void require(bool ok, const RelationId& r) {
    if (!ok) throw std::out_of_range("relation " + r.to_string() + " does not exist for this profile");
}

// Super bracket [X, Y] of homogeneous operators with parities px, py.
WordComb bracket(const WordComb& x, int px, const WordComb& y, int py) {
    WordComb out;
    for (const auto& [wx, cx] : x) {
        for (const auto& [wy, cy] : y) {
            out.add(wx * wy, cx * cy);
            out.add(wy * wx, (px * py) % 2 == 0 ? -(cx * cy) : cx * cy);
        }
    }
    return out;
}

int threads_from_env() {
    const char* env = std::getenv("UGLMN_THREADS");
    if (env == nullptr) return 1;
    const int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

Json element_json(const Profile& p, const LinComb<DividedMonomial>& x) {
    const Flavor f = x.is_zero() ? Flavor::ZeroOne : x.begin()->first.flavor();
    return factor_to_json(p, f, x);
}
Json element_json(const Profile& p, const TensorElement& x) { return tensor_to_json(p, x); }
Json element_json(const Profile& p, const BlmElement& x) { return blm_to_json(p, x); }

// Generator actions memoized per (generator, basis key); relation words hit
// the same keys over and over.
template <class Key>
class MemoAction {
public:
    explicit MemoAction(const ActionHandle<Key>& h) : h_(h) {}

    const LinComb<Key>& operator()(const Generator& g, const Key& k) {
        auto key = std::make_pair(g, k);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(std::move(key), h_.act(g, k)).first;
        return it->second;
    }

private:
    const ActionHandle<Key>& h_;
    std::map<std::pair<Generator, Key>, LinComb<Key>> cache_;
};

template <class Key>
RelationResult check_with(const RelationId& r, const ActionHandle<Key>& h, MemoAction<Key>& act) {
    RelationResult res;
    res.relation = r.to_string();
    if (!relation_applicable(r, h.profile)) {
        res.status = RelStatus::NotApplicable;
        return res;
    }
    const auto ops = relation_operators(r, h.profile);
    for (const auto& k : h.basis) {
        ++res.checked;
        for (const auto& op : ops) {
            LinComb<Key> residual = apply_word_comb(op, LinComb<Key>(k), act);
            if (residual.is_zero()) continue;
            res.status = RelStatus::Fail;
            res.counterexample = Json{{"basis", basis_to_json(k)},
                                      {"identity", to_string(op)},
                                      {"residual", element_json(h.profile, residual)}};
            return res;
        }
    }
    return res;
}

template <class Key>
RelationResult check_one(const RelationId& r, const ActionHandle<Key>& h) {
    MemoAction<Key> act(h);
    return check_with(r, h, act);
}

template <class Key>
Report run_suite(const ActionHandle<Key>& h) {
    Report rep;
    rep.space = h.space;
    rep.profile = h.profile;
    const auto rels = enumerate_relations(h.profile);
    rep.results.resize(rels.size());
    const int threads = std::min<int>(threads_from_env(), static_cast<int>(rels.size()));
    auto worker = [&](int t) {
        MemoAction<Key> act(h);
        for (std::size_t i = static_cast<std::size_t>(t); i < rels.size(); i += static_cast<std::size_t>(threads)) {
            rep.results[i] = check_with(rels[i], h, act);
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    return rep;
}

}  // namespace

std::string RelationId::to_string() const {
    std::string s = tag_name(tag);
    switch (tag) {
        case RelTag::QG1:
        case RelTag::QG2:
        case RelTag::QG3:
            return s + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case RelTag::QG4:
        case RelTag::QG5:
            return s + "(" + std::to_string(a) + "," + std::to_string(b) + "," + (f_side ? "F" : "E") + ")";
        case RelTag::QG6Square:
        case RelTag::QG6Serre:
            return s + "(" + (f_side ? "F" : "E") + ")";
    }
    return s;
}

std::pair<WordComb, WordComb> compound_serre_words(const Profile& p) {
    validate_profile(p);
    if (p.m < 2 || p.n < 2) {
        throw std::invalid_argument("compound Serre words need m >= 2 and n >= 2 (E_{m-1} and E_{m+1} must exist)");
    }
    const int m = p.m;
    const VFunc v = VFunc::v_power(1);
    const VFunc vinv = VFunc::v_power(-1);
    const auto E = [](int h) { return Generator::E(h); };
    const auto F = [](int h) { return Generator::F(h); };
    WordComb up;
    up.add(word({E(m - 1), E(m), E(m + 1)}), 1);
    up.add(word({E(m - 1), E(m + 1), E(m)}), -v);
    up.add(word({E(m), E(m + 1), E(m - 1)}), -vinv);
    up.add(word({E(m + 1), E(m), E(m - 1)}), 1);
    WordComb down;
    down.add(word({F(m + 1), F(m), F(m - 1)}), 1);
    down.add(word({F(m), F(m + 1), F(m - 1)}), -vinv);
    down.add(word({F(m - 1), F(m + 1), F(m)}), -v);
    down.add(word({F(m - 1), F(m), F(m + 1)}), 1);
    return {up, down};
}

bool relation_applicable(const RelationId& r, const Profile& p) {
    switch (r.tag) {
        case RelTag::QG6Square: return p.m >= 1 && p.n >= 1;
        case RelTag::QG6Serre: return p.m >= 2 && p.n >= 2;
        default: return true;
    }
}

std::vector<WordComb> relation_operators(const RelationId& r, const Profile& p) {
    validate_profile(p);
    const int nn = p.size();
    const auto in_k = [&](int i) { return i >= 1 && i <= nn; };
    const auto in_h = [&](int h) { return h >= 1 && h < nn; };
    std::vector<WordComb> ops;
    switch (r.tag) {
        case RelTag::QG1: {
            require(in_k(r.a) && in_k(r.b) && r.a <= r.b, r);
            WordComb comm;
            comm.add(word({Generator::K(r.a), Generator::K(r.b)}), 1);
            comm.add(word({Generator::K(r.b), Generator::K(r.a)}), -1);
            ops.push_back(comm);
            if (r.a == r.b) {
                WordComb right;
                right.add(word({Generator::K(r.a), Generator::K(r.a, -1)}), 1);
                right.add(GenWord(), -1);
                WordComb left;
                left.add(word({Generator::K(r.a, -1), Generator::K(r.a)}), 1);
                left.add(GenWord(), -1);
                ops.push_back(right);
                ops.push_back(left);
            }
            break;
        }
        case RelTag::QG2: {
            require(in_k(r.a) && in_h(r.b), r);
            const IntVector ea = unit_vector(r.a, p);
            const IntVector ab = alpha(r.b, p);
            const long up = super_dot(ea, ab, p);
            WordComb e;
            e.add(word({Generator::K(r.a), Generator::E(r.b)}), 1);
            e.add(word({Generator::E(r.b), Generator::K(r.a)}), -VFunc::v_power(static_cast<int>(up)));
            WordComb f;
            f.add(word({Generator::K(r.a), Generator::F(r.b)}), 1);
            f.add(word({Generator::F(r.b), Generator::K(r.a)}), -VFunc::v_power(static_cast<int>(-up)));
            ops.push_back(e);
            ops.push_back(f);
            break;
        }
        case RelTag::QG3: {
            require(in_h(r.a) && in_h(r.b), r);
            const int pe = generator_parity(Generator::E(r.a), p);
            const int pf = generator_parity(Generator::F(r.b), p);
            WordComb op = bracket(WordComb(word({Generator::E(r.a)})), pe, WordComb(word({Generator::F(r.b)})), pf);
            if (r.a == r.b) {
                const VFunc scale = (v_sub(r.a, 1, p) - v_sub(r.a, -1, p)).inv();
                op.add(word({Generator::K(r.a), Generator::K(r.a + 1, -1)}), -scale);
                op.add(word({Generator::K(r.a, -1), Generator::K(r.a + 1)}), scale);
            }
            ops.push_back(op);
            break;
        }
        case RelTag::QG4: {
            require(in_h(r.a) && in_h(r.b) && r.b - r.a > 1, r);
            const auto G = [&](int h) { return r.f_side ? Generator::F(h) : Generator::E(h); };
            WordComb op;
            op.add(word({G(r.a), G(r.b)}), 1);
            op.add(word({G(r.b), G(r.a)}), -1);
            ops.push_back(op);
            break;
        }
        case RelTag::QG5: {
            require(in_h(r.a) && in_h(r.b) && r.a != p.m && (r.a - r.b == 1 || r.b - r.a == 1), r);
            const auto G = [&](int h) { return r.f_side ? Generator::F(h) : Generator::E(h); };
            WordComb op;
            op.add(word({G(r.a), G(r.a), G(r.b)}), 1);
            op.add(word({G(r.a), G(r.b), G(r.a)}), -(v_sub(r.a, 1, p) + v_sub(r.a, -1, p)));
            op.add(word({G(r.b), G(r.a), G(r.a)}), 1);
            ops.push_back(op);
            break;
        }
        case RelTag::QG6Square: {
            require(relation_applicable(r, p), r);
            const Generator g = r.f_side ? Generator::F(p.m) : Generator::E(p.m);
            ops.push_back(WordComb(word({g, g})));
            break;
        }
        case RelTag::QG6Serre: {
            require(relation_applicable(r, p), r);
            const auto [up, down] = compound_serre_words(p);
            const Generator g = r.f_side ? Generator::F(p.m) : Generator::E(p.m);
            // Both sides are odd, so the bracket is an anticommutator.
            ops.push_back(bracket(WordComb(word({g})), 1, r.f_side ? down : up, 1));
            break;
        }
    }
    return ops;
}

std::vector<RelationId> enumerate_relations(const Profile& p) {
    validate_profile(p);
    const int nn = p.size();
    std::vector<RelationId> out;
    for (int a = 1; a <= nn; ++a) {
        for (int b = a; b <= nn; ++b) out.push_back({RelTag::QG1, a, b, false});
    }
    for (int a = 1; a <= nn; ++a) {
        for (int b = 1; b < nn; ++b) out.push_back({RelTag::QG2, a, b, false});
    }
    for (int a = 1; a < nn; ++a) {
        for (int b = 1; b < nn; ++b) out.push_back({RelTag::QG3, a, b, false});
    }
    for (bool f : {false, true}) {
        for (int a = 1; a < nn; ++a) {
            for (int b = a + 2; b < nn; ++b) out.push_back({RelTag::QG4, a, b, f});
        }
    }
    for (bool f : {false, true}) {
        for (int a = 1; a < nn; ++a) {
            if (a == p.m) continue;
            for (int b : {a - 1, a + 1}) {
                if (b >= 1 && b < nn) out.push_back({RelTag::QG5, a, b, f});
            }
        }
    }
    for (bool f : {false, true}) out.push_back({RelTag::QG6Square, 0, 0, f});
    for (bool f : {false, true}) out.push_back({RelTag::QG6Serre, 0, 0, f});
    return out;
}

std::string to_string(RelStatus s) {
    switch (s) {
        case RelStatus::Pass: return "pass";
        case RelStatus::Fail: return "fail";
        case RelStatus::NotApplicable: return "not_applicable";
    }
    return "?";
}

Json RelationResult::to_json() const {
    Json out{{"relation", relation}, {"status", uglmn::to_string(status)}, {"checked", checked}};
    if (counterexample) out["counterexample"] = *counterexample;
    return out;
}

bool Report::all_pass() const { return failures() == 0; }

long Report::failures() const {
    long f = 0;
    for (const auto& r : results) f += r.status == RelStatus::Fail ? 1 : 0;
    return f;
}

Json Report::to_json() const {
    Json rels = Json::array();
    for (const auto& r : results) rels.push_back(r.to_json());
    return Json{{"space", space}, {"m", profile.m}, {"n", profile.n}, {"pass", all_pass()}, {"relations", rels}};
}

RelationResult check_relation(const RelationId& r, const ActionHandle<DividedMonomial>& h) { return check_one(r, h); }
RelationResult check_relation(const RelationId& r, const ActionHandle<SuperMatrix>& h) { return check_one(r, h); }
RelationResult check_relation(const RelationId& r, const ActionHandle<BlmBasis>& h) { return check_one(r, h); }

Report full_suite(const ActionHandle<DividedMonomial>& h) { return run_suite(h); }
Report full_suite(const ActionHandle<SuperMatrix>& h) { return run_suite(h); }
Report full_suite(const ActionHandle<BlmBasis>& h) { return run_suite(h); }

ActionHandle<DividedMonomial> factor_handle(Profile p, Flavor f, int max_degree, ActionOptions opts) {
    return {std::string("factor ") + to_string(f), p, enumerate_monomials(p, f, max_degree),
            [opts](const Generator& g, const DividedMonomial& x) { return act_factor(g, x, opts); }};
}

ActionHandle<SuperMatrix> tensor_handle(Profile p, int bound, ActionOptions opts) {
    return {"tensor", p, enumerate_matrices(p, bound, false),
            [opts](const Generator& g, const SuperMatrix& a) { return act_tensor_closed(g, a, opts); }};
}

ActionHandle<BlmBasis> blm_handle(Profile p, int bound, int jlo, int jhi, ActionOptions opts) {
    return {"blm", p, enumerate_blm_basis(p, bound, jlo, jhi),
            [opts](const Generator& g, const BlmBasis& b) { return act_blm(g, b, opts); }};
}

}  // namespace uglmn
