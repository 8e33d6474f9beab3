#pragma once

// The polynomial supermodules S_{0|1}, S_{1|0} and their tensor product
// S^{m|n}, whose monomial basis X^[A] is indexed by M(m|n).

#include <compare>
#include <string>
#include <vector>

#include "uglmn/generator.hpp"
#include "uglmn/lincomb.hpp"
#include "uglmn/superindex.hpp"

namespace uglmn {

/// ZeroOne = S_{0|1} (exponents in N^m x Z2^n), OneZero = S_{1|0} (Z2^m x N^n).
enum class Flavor { ZeroOne, OneZero };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Which basis the A(j) formulas are written in: A(j) itself, or the
/// sign-modified basis (-1)^{a_bar(A)} A(j).
enum class SignConvention { Plain, Signed };

/// Knobs shared by every action in the library.
struct ActionOptions {
    /// Deliberately corrupts one E_m term so the relation checker can be
    /// shown to catch a sign error.
    bool mutate_odd_sign = false;
    /// Only read by the A(j) actions.
    SignConvention signs = SignConvention::Plain;
};

/// Divided-power monomial X^{(a)} of S_{0|1} or S_{1|0}.
class DividedMonomial {
public:
    DividedMonomial(Profile p, Flavor f, IntVector exponents);

    const Profile& profile() const { return profile_; }
    Flavor flavor() const { return flavor_; }
    const IntVector& exponents() const { return exps_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
    int degree() const;
    /// Z2 degree: sum of the exponents sitting on the odd variables.
    int parity() const;
    /// Whether coordinate i only admits 0 or 1.
    bool is_z2_slot(int i) const;

    friend bool operator==(const DividedMonomial&, const DividedMonomial&) = default;
    friend std::strong_ordering operator<=>(const DividedMonomial& a, const DividedMonomial& b);

private:
    Profile profile_;
    Flavor flavor_;
    IntVector exps_;
};

using FactorElement = LinComb<DividedMonomial>;
using TensorElement = LinComb<SuperMatrix>;

/// All monomials of one flavor with total degree <= max_degree (or exactly
/// `degree` with the _exact variant).
std::vector<DividedMonomial> enumerate_monomials(Profile p, Flavor f, int max_degree);
std::vector<DividedMonomial> enumerate_monomials_exact(Profile p, Flavor f, int degree);

/// Generator action on a single factor module.
FactorElement act_factor(const Generator& g, const DividedMonomial& x, const ActionOptions& opts = {});

/// Generator action on X^[A] via the closed formulas with sigma, f, g.
TensorElement act_tensor_closed(const Generator& g, const SuperMatrix& a, const ActionOptions& opts = {});

/// Generator action on X^[A] by expanding the iterated coproduct over the
/// m+n tensor factors (columns of A) with the Koszul sign rule.
TensorElement act_tensor_oracle(const Generator& g, const SuperMatrix& a);

/// Flavor of the j-th tensor factor: columns 1..m are S_{0|1}, the rest S_{1|0}.
Flavor column_flavor(int j, const Profile& p);
DividedMonomial column_monomial(const SuperMatrix& a, int j);

TensorElement act_tensor_element(const Generator& g, const TensorElement& x, const ActionOptions& opts = {});
TensorElement act_word_tensor(const GenWord& w, const TensorElement& x, const ActionOptions& opts = {});
FactorElement act_word_factor(const GenWord& w, const FactorElement& x, const ActionOptions& opts = {});

/// The F-word taking X^{(r e_1)} to X^{(a)} in S_{0|1}(r).
GenWord highest_weight_word(int r, const IntVector& a, const Profile& p);
/// Reverses a word and swaps F for E; sends X^{(a)} back to a multiple of X^{(r e_1)}.
GenWord reversed_e_word(const GenWord& w);

}  // namespace uglmn
