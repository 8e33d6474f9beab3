#pragma once

// The A(j) basis of U_v(gl(m|n)) realized inside the power-series completion
// of S^{m|n}, its generator actions, and the machinery that turns those
// actions into multiplication of basis elements.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "uglmn/generator.hpp"
#include "uglmn/lincomb.hpp"
#include "uglmn/polyaction.hpp"
#include "uglmn/superindex.hpp"

namespace uglmn {

/// A(j): a diagonal-free matrix A in M(m|n) and an integer vector j.
struct BlmBasis {
    SuperMatrix a;
    IntVector j;

    BlmBasis(SuperMatrix a_, IntVector j_);

    const Profile& profile() const { return a.profile(); }

    friend bool operator==(const BlmBasis&, const BlmBasis&) = default;
    /// Matrix row-major lex first, then j lex.
    friend std::strong_ordering operator<=>(const BlmBasis& x, const BlmBasis& y);
};

using BlmElement = LinComb<BlmBasis>;

/// O(0), the identity of the algebra.
BlmBasis identity_basis(const Profile& p);

/// K_i^{sign} . A(j) = v_i^{sign * rowsum_i(A)} A(j + sign e_i).
BlmElement act_K(int i, int sign, const BlmBasis& b);
/// E_h . A(j), the four-summand formula.
BlmElement act_E(int h, const BlmBasis& b, const ActionOptions& opts = {});
/// F_h . A(j), the mirror formula.
BlmElement act_F(int h, const BlmBasis& b, const ActionOptions& opts = {});
BlmElement act_blm(const Generator& g, const BlmBasis& b, const ActionOptions& opts = {});
BlmElement act_element(const Generator& g, const BlmElement& x, const ActionOptions& opts = {});
/// Applies the word right to left, divided powers included.
BlmElement act_word_blm(const GenWord& w, const BlmElement& x, const ActionOptions& opts = {});

/// Finite witness of A(j): the terms v^{lambda*j} X^[A + diag(lambda)] with |lambda| <= level.
struct TruncatedSeries {
    TensorElement series;
    int level = 0;
};

TruncatedSeries truncate(const BlmBasis& b, int level);
TensorElement truncate_element(const BlmElement& x, int level);

/// Applies g to the truncated series of b in S^{m|n} and to b in the A(j)
/// basis, truncates the latter, and compares the two on every monomial with
/// diagonal sum <= level - 1. Returns the difference on that window (empty
/// means agreement).
TensorElement truncation_mismatch(const Generator& g, const BlmBasis& b, int level);
bool compare_truncated(const Generator& g, const BlmBasis& b, int level);

/// m^{A,j} = m^-_1 ... m^-_{N-1} K^j m^+_N ... m^+_2, zero exponents omitted.
GenWord monomial_word(const SuperMatrix& a, const IntVector& j);

/// Splits x into its A-part and the rest; throws std::domain_error if some
/// matrix in x is not below A.
struct LeadingSplit {
    BlmElement leading;
    BlmElement lower;

    /// Sum of the leading coefficients.
    VFunc coefficient() const;
};
LeadingSplit leading_decompose(const BlmElement& x, const SuperMatrix& a);

struct WordTerm {
    VFunc coeff;
    GenWord word;

    friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Caches the images m^{B,j'}.O(0) and the expansions of basis elements so
/// repeated products in one profile share work.
class Expander {
public:
    explicit Expander(Profile p, ActionOptions opts = {});

    /// m^{A,j}.O(0), memoized.
    const BlmElement& word_image(const BlmBasis& b);
    /// Words w with coefficients c_w such that sum c_w w.O(0) = A(j).
    const std::vector<WordTerm>& expand(const BlmBasis& b);
    /// The algebra product x * y, computed as sum c_w w.y over the expansion of x.
    BlmElement multiply(const BlmElement& x, const BlmElement& y);

    const Profile& profile() const { return profile_; }

private:
    Profile profile_;
    ActionOptions opts_;
    std::map<BlmBasis, BlmElement> images_;
    std::map<BlmBasis, std::vector<WordTerm>> expansions_;
};

std::vector<WordTerm> expand_as_words(const SuperMatrix& a, const IntVector& j);
BlmElement evaluate_words(const std::vector<WordTerm>& terms, const Profile& p);
BlmElement multiply(const BlmElement& x, const BlmElement& y);

/// Rescales every A(j) coefficient by (-1)^{a_bar(A)}; an involution, so
/// to_signed and from_signed coincide.
BlmElement to_signed(const BlmElement& x);
BlmElement from_signed(const BlmElement& x);

/// Every A(j) with off-diagonal entries <= bound (Z2 blocks <= 1) and j
/// entries in [jlo, jhi].
std::vector<BlmBasis> enumerate_blm_basis(Profile p, int bound, int jlo, int jhi);

}  // namespace uglmn
