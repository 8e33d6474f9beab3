#pragma once

// Checks the defining relations QG1-QG6 of U_v(gl(m|n)) as operator
// identities on a finite set of basis vectors of a module.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uglmn/blm.hpp"
#include "uglmn/generator.hpp"
#include "uglmn/polyaction.hpp"
#include "uglmn/serialize.hpp"

namespace uglmn {

enum class RelTag { QG1, QG2, QG3, QG4, QG5, QG6Square, QG6Serre };

/// One relation with its indices. `f_side` picks the F-version of the
/// relations that come in an E/F pair (QG4, QG5, QG6).
struct RelationId {
    RelTag tag = RelTag::QG1;
    int a = 0;
    int b = 0;
    bool f_side = false;

    /// "QG1(1,2)", "QG5(1,2,F)", "QG6-serre(E)".
    std::string to_string() const;

    friend bool operator==(const RelationId&, const RelationId&) = default;
};

/// The four-term combinations E_{m-1,m+2} and E_{m+2,m-1}. Throws
/// std::invalid_argument unless m >= 2 and n >= 2.
std::pair<WordComb, WordComb> compound_serre_words(const Profile& p);

/// The identities a relation asserts, each written as an operator that must
/// vanish (left side minus right side). Throws std::out_of_range if the
/// indices do not fit the profile.
std::vector<WordComb> relation_operators(const RelationId& r, const Profile& p);

/// Whether the relation exists for the profile (QG6-serre needs m, n >= 2).
bool relation_applicable(const RelationId& r, const Profile& p);

/// Every relation of the profile, in a fixed order, including the ones that
/// are not applicable so reports can list them.
std::vector<RelationId> enumerate_relations(const Profile& p);

/// A module given by a finite list of basis vectors and a generator action.
template <class Key>
struct ActionHandle {
    std::string space;
    Profile profile;
    std::vector<Key> basis;
    std::function<LinComb<Key>(const Generator&, const Key&)> act;
};

enum class RelStatus { Pass, Fail, NotApplicable };
std::string to_string(RelStatus s);

struct RelationResult {
    std::string relation;
    RelStatus status = RelStatus::Pass;
    long checked = 0;
    /// Basis vector, failing identity and residual of the first failure.
    std::optional<Json> counterexample;

    Json to_json() const;
};

struct Report {
    std::string space;
    Profile profile;
    std::vector<RelationResult> results;

    bool all_pass() const;
    long failures() const;
    Json to_json() const;
};

RelationResult check_relation(const RelationId& r, const ActionHandle<DividedMonomial>& h);
RelationResult check_relation(const RelationId& r, const ActionHandle<SuperMatrix>& h);
RelationResult check_relation(const RelationId& r, const ActionHandle<BlmBasis>& h);

/// Runs every relation of the profile. UGLMN_THREADS (if set) spreads the
/// relations over that many worker threads; the report order is fixed.
Report full_suite(const ActionHandle<DividedMonomial>& h);
Report full_suite(const ActionHandle<SuperMatrix>& h);
Report full_suite(const ActionHandle<BlmBasis>& h);

/// Divided monomials of total degree <= max_degree.
ActionHandle<DividedMonomial> factor_handle(Profile p, Flavor f, int max_degree, ActionOptions opts = {});
/// X^[A] with entries <= bound (Z2 blocks <= 1), closed-formula action.
ActionHandle<SuperMatrix> tensor_handle(Profile p, int bound, ActionOptions opts = {});
/// A(j) with off-diagonal entries <= bound and j in [jlo, jhi]^{m+n}.
ActionHandle<BlmBasis> blm_handle(Profile p, int bound, int jlo, int jhi, ActionOptions opts = {});

}  // namespace uglmn
