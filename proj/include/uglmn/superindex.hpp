#pragma once

// Index combinatorics for gl(m|n): parities, the super dot product, the
// matrix set M(m|n), and the statistics that decorate the action formulas.
// All indices in this header are 1-based.

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uglmn/profile.hpp"
#include "uglmn/qcoeff.hpp"

namespace uglmn {

using IntVector = std::vector<int>;

/// 0 for 1 <= i <= m, 1 for m < i <= m+n.
int parity_hat(int i, const Profile& p);

/// v_h^e = v^{(-1)^{parity(h)} e}.
VFunc v_sub(int h, int e, const Profile& p);
/// The exponent of v in v_h^e.
int v_exponent(int h, int e, const Profile& p);

/// sum_i (-1)^{parity(i)} a_i b_i.
long super_dot(std::span<const int> a, std::span<const int> b, const Profile& p);

IntVector unit_vector(int i, const Profile& p);
/// e_h - e_{h+1}, 1 <= h < m+n.
IntVector alpha(int h, const Profile& p);
/// e_h + e_{h+1}, 1 <= h < m+n.
IntVector beta(int h, const Profile& p);

/// Parses "0,-1,2"; the length must be m+n.
IntVector parse_vector(const Profile& p, const std::string& text);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);

/// A square matrix in M(m|n): nonnegative entries, with the off-diagonal
/// blocks (rows and columns of different parity) restricted to {0, 1}.
class SuperMatrix {
public:
    SuperMatrix() = default;
    /// Zero matrix.
    explicit SuperMatrix(Profile p);
    /// Row-major entries; throws std::invalid_argument if the block constraint fails.
    SuperMatrix(Profile p, std::vector<int> entries);
    SuperMatrix(Profile p, const std::vector<std::vector<int>>& rows);

    /// E_{i,j} scaled by `count`.
    static SuperMatrix unit(Profile p, int i, int j, int count = 1);
    /// A matrix whose only nonzero entries are on the diagonal.
    static SuperMatrix diagonal(Profile p, std::span<const int> lambda);

    const Profile& profile() const { return profile_; }
    int size() const { return profile_.size(); }
    int operator()(int i, int j) const { return entries_[index(i, j)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Whether entry (i, j) lives in a Z2-valued block.
    bool is_odd_slot(int i, int j) const;
    bool is_off_diagonal() const;
    long total() const;
    long row_sum(int i) const;
    long column_sum(int j) const;
    IntVector diagonal_entries() const;
    SuperMatrix without_diagonal() const;

    /// Adds `delta` to entry (i, j). Returns nullopt when the result leaves
    /// M(m|n) (negative entry or a Z2 slot above 1).
    std::optional<SuperMatrix> shifted(int i, int j, int delta) const;
    SuperMatrix plus_diagonal(std::span<const int> lambda) const;

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) = default;
    /// Row-major lexicographic order of entries (profiles compared first).
    friend std::strong_ordering operator<=>(const SuperMatrix& a, const SuperMatrix& b);

    /// Compact "0,1;1,0" form.
    std::string to_string() const;
    /// Parses the compact form.
    static SuperMatrix parse(Profile p, const std::string& text);

private:
    friend void for_each_matrix(Profile, int, bool, const std::function<void(const SuperMatrix&)>&);

    std::size_t index(int i, int j) const;
    void validate() const;
    void set_unchecked(int i, int j, int x) { entries_[index(i, j)] = x; }

    Profile profile_{};
    std::vector<int> entries_;
};

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);

/// Parity of X^[A]: sum of the Z2-block entries, mod 2.
int matrix_parity(const SuperMatrix& a);

/// sigma(i, A): the sign count of the tensor action.
long sigma(int i, const SuperMatrix& a);
/// f(i, A) for the generator E_h.
long f_stat(int h, int i, const SuperMatrix& a);
/// g(i, A) for the generator F_h.
long g_stat(int h, int i, const SuperMatrix& a);
/// delta_{h,m} sigma(i, A).
long sigma_hm(int h, int i, const SuperMatrix& a);
/// Sum of a_{i,j} a_{k,l} over i, k <= m and m < j < l.
long a_bar(const SuperMatrix& a);
/// Sign exponent of the sign-modified basis.
long s_sign(int h, int i, const SuperMatrix& a);

/// Upper corner sum: rows <= s, columns >= t, for s < t.
long upper_L(const SuperMatrix& a, int s, int t);
/// Lower corner sum: rows >= s, columns <= t, for s > t.
long lower_neg(const SuperMatrix& a, int s, int t);
/// A <= B in the corner-sum order.
bool preceq(const SuperMatrix& a, const SuperMatrix& b);
/// Strictly below: A <= B and A != B.
bool precedes(const SuperMatrix& a, const SuperMatrix& b);

/// All diagonal-free B with B <= A (A must itself be diagonal-free).
std::vector<SuperMatrix> downset(const SuperMatrix& a);

/// Every matrix of M(m|n) with entries <= bound (Z2 blocks <= 1). With
/// off_diagonal_only the diagonal is fixed at zero.
std::vector<SuperMatrix> enumerate_matrices(Profile p, int bound, bool off_diagonal_only);
/// Same sweep without materializing the list; `visit` sees a temporary.
void for_each_matrix(Profile p, int bound, bool off_diagonal_only,
                     const std::function<void(const SuperMatrix&)>& visit);

/// Every integer vector of length m+n with entries in [lo, hi].
std::vector<IntVector> enumerate_vectors(Profile p, int lo, int hi);

}  // namespace uglmn
