// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every comparison is exact equality in Q(v).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "uglmn/blm.hpp"
#include "uglmn/relcheck.hpp"

using namespace uglmn;

namespace {

const Profile P11{1, 1}, P21{2, 1}, P12{1, 2}, P22{2, 2};

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string name(Profile p) { return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")"; }

// 1. QG1-QG6 on both factor modules, degree <= 4.
Outcome factor_suites() {
    Outcome out;
    long relations = 0;
    for (Profile p : {P11, P21, P12, P22})
        for (Flavor f : {Flavor::ZeroOne, Flavor::OneZero}) {
            const Report rep = full_suite(factor_handle(p, f, 4));
            relations += static_cast<long>(rep.results.size());
            if (!rep.all_pass()) out.fail(to_string(f) + " " + name(p) + ": " + rep.to_json().dump());
        }
    if (out.pass) out.detail = std::to_string(relations) + " relation reports";
    return out;
}

// 2. Closed tensor formulas against the coproduct expansion, entries <= 2.
Outcome tensor_oracle() {
    Outcome out;
    long actions = 0;
    for (Profile p : {P11, P21, P12, P22}) {
        const auto gens = all_generators(p);
        for_each_matrix(p, 2, false, [&](const SuperMatrix& a) {
            for (const auto& g : gens) {
                ++actions;
                if (act_tensor_closed(g, a) != act_tensor_oracle(g, a)) out.fail(g.to_string() + " on " + a.to_string());
            }
        });
    }
    if (out.pass) out.detail = std::to_string(actions) + " actions compared";
    return out;
}

// 3. A(j) actions against their truncated series in S^{m|n}.
Outcome truncation_oracle() {
    Outcome out;
    long checks = 0;
    for (Profile p : {P11, P21}) {
        const auto gens = all_generators(p);
        for (const auto& b : enumerate_blm_basis(p, 1, -1, 1))
            for (const auto& g : gens) {
                ++checks;
                if (!compare_truncated(g, b, 3)) out.fail(g.to_string() + " on " + b.a.to_string() + " " + name(p));
            }
    }
    const BlmBasis e21(SuperMatrix::unit(P11, 2, 1), {0, 0}), e12(SuperMatrix::unit(P11, 1, 2), {0, 0});
    if (!compare_truncated(Generator::E(1), e21, 4)) out.fail("E1 on E21(0) at L=4");
    if (!compare_truncated(Generator::F(1), e12, 4)) out.fail("F1 on E12(0) at L=4");
    if (out.pass) out.detail = std::to_string(checks + 2) + " comparisons";
    return out;
}

// 4. QG1-QG6 on the A(j) module.
Outcome blm_suites() {
    Outcome out;
    for (const auto& h : {blm_handle(P11, 1, -1, 1), blm_handle(P21, 1, 0, 1)}) {
        const Report rep = full_suite(h);
        if (!rep.all_pass()) out.fail(name(h.profile) + ": " + rep.to_json().dump());
    }
    if (out.pass) out.detail = "(1,1) j in {-1,0,1}^2, (2,1) j in {0,1}^3";
    return out;
}

// 5. Leading term of m^{A,j}.O(0) and the expansion round trip.
Outcome triangularity() {
    Outcome out;
    long bases = 0;
    for (Profile p : {P11, P21}) {
        Expander ex(p);
        for (const auto& b : enumerate_blm_basis(p, 1, -1, 1)) {
            ++bases;
            const LeadingSplit s = leading_decompose(ex.word_image(b), b.a);
            VFunc::SignedPower sp{};
            if (s.leading.size() != 1 || !(s.leading.begin()->first == b) || !s.coefficient().as_signed_power(sp)) {
                out.fail("leading term of " + b.a.to_string());
            }
            for (const auto& [k, c] : s.lower)
                if (!precedes(k.a, b.a)) out.fail(k.a.to_string() + " not below " + b.a.to_string());
            if (evaluate_words(ex.expand(b), p) != BlmElement(b)) out.fail("round trip of " + b.a.to_string());
        }
    }
    if (out.pass) out.detail = std::to_string(bases) + " basis elements";
    return out;
}

// 6. Basis elements E_{h,h+1}(0), E_{h+1,h}(0), O(e_i), O(0) act as E_h, F_h, K_i, 1.
Outcome generator_identification() {
    Outcome out;
    std::mt19937 rng(20240601);
    for (Profile p : {P11, P21}) {
        Expander ex(p);
        const auto pool = enumerate_blm_basis(p, 1, -1, 1);
        std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), power(-2, 2);
        const IntVector zero(p.size(), 0);
        for (int t = 0; t < 50; ++t) {
            BlmElement y;
            for (int k = terms(rng); k > 0; --k) {
                const int c = coef(rng);
                y.add(pool[rng() % pool.size()], VFunc::v_power(power(rng), c == 0 ? 1 : c));
            }
            if (ex.multiply(BlmElement(identity_basis(p)), y) != y) out.fail("O(0) * y");
            for (int h = 1; h < p.size(); ++h) {
                if (ex.multiply(BlmElement(BlmBasis(SuperMatrix::unit(p, h, h + 1), zero)), y) !=
                    act_element(Generator::E(h), y))
                    out.fail("E" + std::to_string(h) + " " + name(p));
                if (ex.multiply(BlmElement(BlmBasis(SuperMatrix::unit(p, h + 1, h), zero)), y) !=
                    act_element(Generator::F(h), y))
                    out.fail("F" + std::to_string(h) + " " + name(p));
            }
            for (int i = 1; i <= p.size(); ++i) {
                if (ex.multiply(BlmElement(BlmBasis(SuperMatrix(p), unit_vector(i, p))), y) !=
                    act_element(Generator::K(i), y))
                    out.fail("K" + std::to_string(i) + " " + name(p));
            }
        }
    }
    if (out.pass) out.detail = "50 random y per profile";
    return out;
}

// 7. a_bar under diagonal shifts and row moves; signed-basis action signs.
Outcome sign_modified_basis() {
    Outcome out;
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> lam(0, 3);
    const std::vector<Profile> profiles{P11, P21, P12, P22};
    for (int t = 0; t < 200; ++t) {
        const Profile p = profiles[static_cast<std::size_t>(t) % profiles.size()];
        const auto all = enumerate_matrices(p, 1, true);
        const SuperMatrix& a = all[rng() % all.size()];
        IntVector l(p.size());
        for (int& x : l) x = lam(rng);
        if (a_bar(a.plus_diagonal(l)) != a_bar(a)) out.fail("a_bar shift on " + a.to_string());
    }
    ActionOptions signed_opts;
    signed_opts.signs = SignConvention::Signed;
    long cases = 0;
    for (Profile p : {P12, P22}) {
        const int m = p.m, n = p.size();
        auto sum_where = [](const SuperMatrix& a, auto pred) {
            long s = 0;
            for (int i = 1; i <= a.size(); ++i)
                for (int j = 1; j <= a.size(); ++j)
                    if (pred(i, j)) s += a(i, j);
            return s;
        };
        for (const auto& a : enumerate_matrices(p, 1, true)) {
            for (int h = 1; h < n; ++h) {
                for (int k = 1; k <= n; ++k) {
                    if (a(h + 1, k) < 1) continue;
                    const auto up = a.shifted(h, k, 1);
                    if (!up) continue;
                    const SuperMatrix b = *up->shifted(h + 1, k, -1);
                    const long d = h == m;
                    const long lower = sum_where(a, [&](int i, int j) { return i > m && j <= std::min(k - 1, m); });
                    const long upper = k > m ? sum_where(a, [&](int i, int j) { return i <= m && j > k; }) : 0;
                    ++cases;
                    if (a_bar(a) + d * sigma(k, a) != a_bar(b) + d * (lower - upper)) out.fail("row move on " + a.to_string());
                }
                const BlmBasis base(a, IntVector(n, 0));
                const VFunc sign = sign_power(a_bar(a));
                for (const auto& g : {Generator::E(h), Generator::F(h)}) {
                    ++cases;
                    if (act_blm(g, base, signed_opts) != to_signed(act_blm(g, base)).scaled(sign))
                        out.fail("signed " + g.to_string() + " on " + a.to_string());
                }
            }
        }
    }
    if (out.pass) out.detail = "200 shifts, " + std::to_string(cases) + " exhaustive cases";
    return out;
}

// 8. F-words reach every X^(a) of degree r from X^(r e_1) with coefficient 1.
Outcome cyclicity() {
    Outcome out;
    long targets = 0;
    for (Profile p : {P11, P21}) {
        for (int r = 1; r <= 4; ++r) {
            IntVector top(p.size(), 0);
            top[0] = r;
            const DividedMonomial source(p, Flavor::ZeroOne, top);
            for (const auto& target : enumerate_monomials_exact(p, Flavor::ZeroOne, r)) {
                ++targets;
                const GenWord w = highest_weight_word(r, target.exponents(), p);
                if (act_word_factor(w, FactorElement(source)) != FactorElement(target)) out.fail(w.to_string());
                const FactorElement back = act_word_factor(reversed_e_word(w), FactorElement(target));
                if (back.size() != 1 || !(back.begin()->first == source)) out.fail("reverse of " + w.to_string());
            }
        }
    }
    if (out.pass) out.detail = std::to_string(targets) + " targets";
    return out;
}

// 9. The deliberate E_m sign flip must break some relation of criterion 1.
Outcome mutation() {
    Outcome out;
    ActionOptions bad;
    bad.mutate_odd_sign = true;
    long failures = 0;
    for (Profile p : {P11, P21, P12, P22})
        for (Flavor f : {Flavor::ZeroOne, Flavor::OneZero}) failures += full_suite(factor_handle(p, f, 4, bad)).failures();
    if (failures == 0) out.fail("no relation failed under mutation");
    else out.detail = std::to_string(failures) + " failing relation reports";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"relation suite, factor modules", factor_suites},
        {"tensor closed formulas = coproduct oracle", tensor_oracle},
        {"A(j) actions = truncated series", truncation_oracle},
        {"relation suite, A(j) module", blm_suites},
        {"triangularity and expansion round trip", triangularity},
        {"generator identification under multiply", generator_identification},
        {"sign-modified basis", sign_modified_basis},
        {"cyclicity of S_0|1(r)", cyclicity},
        {"mutation sensitivity", mutation},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
