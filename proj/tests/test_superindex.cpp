#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "printing.hpp"
#include "uglmn/superindex.hpp"

using namespace uglmn;

namespace {

const Profile P11{1, 1}, P21{2, 1}, P12{1, 2}, P22{2, 2};

// Sum of a_{s,t} over the (s, t) accepted by pred, written straight from the
// index-set definitions.
long sum_where(const SuperMatrix& a, const std::function<bool(int, int)>& pred) {
    long s = 0;
    for (int r = 1; r <= a.size(); ++r)
        for (int c = 1; c <= a.size(); ++c)
            if (pred(r, c)) s += a(r, c);
    return s;
}

long naive_sigma(int i, const SuperMatrix& a) {
    const int m = a.profile().m;
    if (i <= m) return sum_where(a, [&](int s, int t) { return s > m && t < i; });
    return sum_where(a, [&](int s, int t) { return (s > m && t <= m) || (s <= m && t > m && t < i); });
}

long naive_f(int h, int i, const SuperMatrix& a) {
    const long row_h = sum_where(a, [&](int s, int t) { return s == h && t > i; });
    const long row_h1 = sum_where(a, [&](int s, int t) { return s == h + 1 && t > i; });
    return h == a.profile().m ? row_h + row_h1 : row_h - row_h1;
}

long naive_g(int h, int i, const SuperMatrix& a) {
    const long row_h1 = sum_where(a, [&](int s, int t) { return s == h + 1 && t < i; });
    const long row_h = sum_where(a, [&](int s, int t) { return s == h && t < i; });
    return h == a.profile().m ? row_h1 + row_h : row_h1 - row_h;
}

long naive_a_bar(const SuperMatrix& a) {
    const int m = a.profile().m, n = a.size();
    long s = 0;
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= m; ++k)
            for (int j = m + 1; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l) s += static_cast<long>(a(i, j)) * a(k, l);
    return s;
}

SuperMatrix random_matrix(Profile p, std::mt19937& rng, int bound, bool off_diag) {
    std::uniform_int_distribution<int> d(0, bound);
    std::vector<int> e(static_cast<std::size_t>(p.size() * p.size()));
    for (int i = 1; i <= p.size(); ++i)
        for (int k = 1; k <= p.size(); ++k) {
            int x = d(rng);
            if ((i <= p.m) != (k <= p.m)) x = std::min(x, 1);
            if (off_diag && i == k) x = 0;
            e[static_cast<std::size_t>((i - 1) * p.size() + k - 1)] = x;
        }
    return SuperMatrix(p, e);
}

}  // namespace

TEST(Parity, Hat) {
    EXPECT_EQ(parity_hat(1, P21), 0);
    EXPECT_EQ(parity_hat(2, P21), 0);
    EXPECT_EQ(parity_hat(3, P21), 1);
    EXPECT_THROW(parity_hat(4, P21), std::out_of_range);
    EXPECT_THROW(parity_hat(0, P21), std::out_of_range);
}

TEST(Parity, VSub) {
    EXPECT_EQ(v_sub(1, 3, P21), VFunc::v_power(3));
    EXPECT_EQ(v_sub(3, 3, P21), VFunc::v_power(-3));
    EXPECT_EQ(v_sub(1, 1, P11), VFunc::v_power(1));
    EXPECT_EQ(v_sub(2, 1, P11), VFunc::v_power(-1));
}

TEST(SuperDot, Examples) {
    EXPECT_EQ(super_dot(unit_vector(1, P21), unit_vector(1, P21), P21), 1);
    EXPECT_EQ(super_dot(unit_vector(3, P21), unit_vector(3, P21), P21), -1);
    EXPECT_EQ(super_dot(unit_vector(1, P21), unit_vector(2, P21), P21), 0);
    EXPECT_EQ(super_dot(unit_vector(2, P21), alpha(2, P21), P21), 1);
    EXPECT_THROW(super_dot(IntVector{1, 2}, IntVector{1, 2, 3}, P21), std::invalid_argument);
}

TEST(SuperDot, BilinearAndSymmetric) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (Profile p : {P11, P21, P22}) {
        for (int t = 0; t < 100; ++t) {
            IntVector a(p.size()), b(p.size()), c(p.size());
            for (auto* v : {&a, &b, &c})
                for (int& x : *v) x = d(rng);
            EXPECT_EQ(super_dot(a, b, p), super_dot(b, a, p));
            EXPECT_EQ(super_dot(a, b + c, p), super_dot(a, b, p) + super_dot(a, c, p));
        }
    }
}

TEST(Roots, AlphaBeta) {
    EXPECT_EQ(alpha(1, P11), (IntVector{1, -1}));
    EXPECT_EQ(beta(1, P11), (IntVector{1, 1}));
    EXPECT_EQ(alpha(2, P22), (IntVector{0, 1, -1, 0}));
    EXPECT_THROW(alpha(2, P11), std::out_of_range);
}

TEST(SuperMatrix, BlockConstraint) {
    EXPECT_NO_THROW(SuperMatrix(P11, {2, 1, 1, 5}));
    EXPECT_THROW(SuperMatrix(P11, {0, 2, 0, 0}), std::invalid_argument);
    EXPECT_THROW(SuperMatrix(P11, {0, -1, 0, 0}), std::invalid_argument);
    EXPECT_FALSE(SuperMatrix::unit(P11, 1, 2).shifted(1, 2, 1).has_value());
    EXPECT_EQ(SuperMatrix::parse(P11, "0,1;1,0"), SuperMatrix(P11, {0, 1, 1, 0}));
    EXPECT_EQ(SuperMatrix(P11, {0, 1, 1, 3}).to_string(), "0,1;1,3");
}

TEST(Statistics, SigmaExamples) {
    const SuperMatrix a(P11, {0, 1, 1, 0});
    EXPECT_EQ(sigma(2, a), 1);
    EXPECT_EQ(sigma(1, a), 0);
    EXPECT_EQ(sigma(2, SuperMatrix(P11)), 0);
    EXPECT_THROW(sigma(3, a), std::out_of_range);
}

TEST(Statistics, FAndGExamples) {
    const SuperMatrix a(P11, {0, 1, 0, 0});
    EXPECT_EQ(f_stat(1, 1, a), 1);
    EXPECT_EQ(f_stat(1, 2, a), 0);
    EXPECT_EQ(g_stat(1, 1, a), 0);
    EXPECT_EQ(sigma_hm(1, 2, SuperMatrix(P11, {0, 1, 1, 0})), 1);
    EXPECT_EQ(sigma_hm(1, 2, SuperMatrix(P21, {0, 0, 0, 0, 0, 0, 1, 0, 0})), 0);
}

TEST(Statistics, ABarExamples) {
    EXPECT_EQ(a_bar(SuperMatrix(P12, {0, 1, 1, 0, 0, 0, 0, 0, 0})), 1);
    EXPECT_EQ(a_bar(SuperMatrix(P11, {0, 1, 1, 0})), 0);
    EXPECT_EQ(a_bar(SuperMatrix(P21, {0, 0, 1, 0, 0, 1, 1, 1, 0})), 0);
}

TEST(Statistics, SSignExamples) {
    EXPECT_EQ(s_sign(1, 2, SuperMatrix(P11, {0, 1, 1, 0})), 1);
    EXPECT_EQ(s_sign(1, 1, SuperMatrix(P11, {0, 1, 1, 0})), 0);
    EXPECT_EQ(s_sign(1, 3, SuperMatrix(P12, {0, 1, 1, 1, 0, 0, 1, 0, 0})), 2);
    EXPECT_EQ(s_sign(2, 3, SuperMatrix(P21, {0, 0, 1, 0, 0, 1, 1, 1, 0})), 1 + 1);
    EXPECT_EQ(s_sign(1, 3, SuperMatrix(P21, {0, 0, 1, 0, 0, 1, 1, 1, 0})), 0);
}

TEST(Statistics, AgreeWithDefinitions) {
    for (Profile p : {P11, P21, P12, P22}) {
        for_each_matrix(p, 2, false, [&](const SuperMatrix& a) {
            const int n = p.size();
            for (int i = 1; i <= n; ++i) {
                ASSERT_EQ(sigma(i, a), naive_sigma(i, a)) << a.to_string();
                for (int h = 1; h < n; ++h) {
                    ASSERT_EQ(f_stat(h, i, a), naive_f(h, i, a)) << a.to_string();
                    ASSERT_EQ(g_stat(h, i, a), naive_g(h, i, a)) << a.to_string();
                    ASSERT_EQ(sigma_hm(h, i, a), h == p.m ? naive_sigma(i, a) : 0);
                }
            }
            ASSERT_EQ(a_bar(a), naive_a_bar(a));
        });
    }
}

TEST(Statistics, EdgeValues) {
    for (Profile p : {P11, P21, P22}) {
        for (const auto& a : enumerate_matrices(p, 1, false)) {
            for (int h = 1; h < p.size(); ++h) {
                EXPECT_EQ(f_stat(h, p.size(), a), 0);
                EXPECT_EQ(g_stat(h, 1, a), 0);
                for (int i = 1; i <= p.size(); ++i)
                    if (h != p.m) EXPECT_EQ(s_sign(h, i, a), 0);
            }
            if (p.n <= 1) EXPECT_EQ(a_bar(a), 0);
        }
    }
}

TEST(MatrixParity, Examples) {
    EXPECT_EQ(matrix_parity(SuperMatrix(P21)), 0);
    EXPECT_EQ(matrix_parity(SuperMatrix::unit(P21, 2, 3)), 1);
    EXPECT_EQ(matrix_parity(SuperMatrix::unit(P21, 1, 2, 5)), 0);
    EXPECT_EQ(matrix_parity(SuperMatrix(P11, {0, 1, 1, 0})), 0);
}

TEST(Order, CornerExamples) {
    const SuperMatrix e12 = SuperMatrix::unit(P11, 1, 2), e21 = SuperMatrix::unit(P11, 2, 1);
    EXPECT_FALSE(preceq(e12, e21));
    EXPECT_FALSE(preceq(e21, e12));
    EXPECT_TRUE(preceq(SuperMatrix(P11), e12));
    EXPECT_TRUE(precedes(SuperMatrix(P11), e12));
    EXPECT_FALSE(precedes(e12, e12));
    EXPECT_EQ(upper_L(SuperMatrix(P21, {0, 1, 1, 0, 0, 1, 0, 0, 0}), 1, 2), 2);
    EXPECT_THROW(upper_L(e12, 2, 1), std::invalid_argument);
    EXPECT_THROW(preceq(e12, SuperMatrix(P21)), std::invalid_argument);
}

TEST(Order, PreorderOnFullSet) {
    for (Profile p : {P11, P21}) {
        const auto all = enumerate_matrices(p, 1, false);
        const std::size_t n = all.size();
        std::vector<char> le(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            EXPECT_TRUE(preceq(all[x], all[x]));
            EXPECT_TRUE(preceq(SuperMatrix(p), all[x]));
            for (std::size_t y = 0; y < n; ++y) le[x * n + y] = preceq(all[x], all[y]);
        }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (!le[x * n + y]) continue;
                for (std::size_t z = 0; z < n; ++z)
                    if (le[y * n + z]) ASSERT_TRUE(le[x * n + z]) << all[x].to_string() << " " << all[z].to_string();
            }
    }
}

TEST(Order, PartialOrderOffDiagonal) {
    for (Profile p : {P11, P21, P22}) {
        const auto all = enumerate_matrices(p, 1, true);
        for (const auto& a : all)
            for (const auto& b : all)
                if (preceq(a, b) && preceq(b, a)) ASSERT_EQ(a, b) << a.to_string() << " / " << b.to_string();
    }
}

TEST(Order, Downset) {
    const SuperMatrix o(P11), e12 = SuperMatrix::unit(P11, 1, 2);
    EXPECT_EQ(downset(o), std::vector<SuperMatrix>{o});
    auto d = downset(e12);
    std::sort(d.begin(), d.end());
    EXPECT_EQ(d, (std::vector<SuperMatrix>{o, e12}));
    EXPECT_THROW(downset(SuperMatrix::unit(P11, 1, 1)), std::invalid_argument);
}

TEST(Order, DownsetMatchesBruteForce) {
    for (Profile p : {P11, P21, P22}) {
        const auto all = enumerate_matrices(p, 2, true);
        std::mt19937 rng(3);
        for (int t = 0; t < 20; ++t) {
            const SuperMatrix a = all[rng() % all.size()];
            const auto d = downset(a);
            const std::set<SuperMatrix> got(d.begin(), d.end());
            EXPECT_EQ(got.size(), d.size());
            EXPECT_TRUE(got.count(SuperMatrix(p)));
            EXPECT_TRUE(got.count(a));
            for (const auto& b : all) ASSERT_EQ(got.count(b) == 1, preceq(b, a)) << b.to_string();
            // Closure: anything below a member is a member (sampled members).
            for (int s = 0; s < 5; ++s) {
                const SuperMatrix& b = d[rng() % d.size()];
                for (const auto& c : all)
                    if (preceq(c, b)) ASSERT_TRUE(got.count(c));
            }
        }
    }
}

TEST(SignIdentity, DiagonalShiftKeepsABar) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> lam(0, 3);
    for (Profile p : {P11, P21, P12, P22}) {
        for (int t = 0; t < 200; ++t) {
            const SuperMatrix a = random_matrix(p, rng, 2, true);
            IntVector l(p.size());
            for (int& x : l) x = lam(rng);
            EXPECT_EQ(a_bar(a.plus_diagonal(l)), a_bar(a));
        }
    }
}

TEST(SignIdentity, ShiftIdentityExhaustive) {
    long checked = 0;
    for (Profile p : {P12, P22}) {
        const int m = p.m, n = p.size();
        for (const auto& a : enumerate_matrices(p, 1, true)) {
            for (int h = 1; h < n; ++h)
                for (int k = 1; k <= n; ++k) {
                    if (a(h + 1, k) < 1) continue;
                    auto up = a.shifted(h, k, 1);
                    if (!up) continue;
                    const SuperMatrix b = *up->shifted(h + 1, k, -1);
                    const long d = h == m;
                    const long lower = sum_where(a, [&](int i, int j) { return i > m && j <= std::min(k - 1, m); });
                    const long upper = k > m ? sum_where(a, [&](int i, int j) { return i <= m && j > k; }) : 0;
                    ASSERT_EQ(a_bar(a) + d * sigma(k, a), a_bar(b) + d * (lower - upper))
                        << a.to_string() << " h=" << h << " k=" << k;
                    ++checked;
                }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Enumerate, Counts) {
    // (1,1), entries <= 1: the two odd slots each 0/1, diagonal 0..1.
    EXPECT_EQ(enumerate_matrices(P11, 1, false).size(), 16u);
    EXPECT_EQ(enumerate_matrices(P11, 2, true).size(), 4u);
    EXPECT_EQ(enumerate_matrices(P21, 2, true).size(), 9u * 16u);
    EXPECT_EQ(enumerate_vectors(P21, -1, 1).size(), 27u);
    long count = 0;
    for_each_matrix(P22, 1, true, [&](const SuperMatrix&) { ++count; });
    EXPECT_EQ(count, 4096);
}

TEST(Vectors, Parse) {
    EXPECT_EQ(parse_vector(P21, "0,-1,2"), (IntVector{0, -1, 2}));
    EXPECT_THROW(parse_vector(P21, "0,1"), std::invalid_argument);
    EXPECT_THROW(parse_vector(P21, "0,x,1"), std::invalid_argument);
}
