#pragma once

// Canonical JSON forms of coefficients, matrices, elements and word lists.
//
//   VFunc          {"num": {"2": "1", "0": "-1"}, "den": {"1": "1"}, "text": "v - v^-1"}
//   SuperMatrix    [[0, 1], [1, 0]]   (the profile travels with the element)
//   tensor element {"m": 1, "n": 1, "terms": [{"coeff": ..., "A": [[..]]}]}
//   A(j) element   {"m": 1, "n": 1, "terms": [{"coeff": ..., "A": [[..]], "j": [..]}]}
//   factor element {"m": 1, "n": 1, "flavor": "0|1", "terms": [{"coeff": ..., "a": [..]}]}
//   word list      [{"coeff": ..., "word": "F1 K1 E1"}]
//
// Terms appear in the key order of the element, so equal inputs give
// byte-identical output. Parsers accept a coefficient written as a plain
// integer or rational string ("3/2") as well as the object form.

#include <json.hpp>

#include <string>
#include <vector>

#include "uglmn/blm.hpp"
#include "uglmn/polyaction.hpp"
#include "uglmn/qcoeff.hpp"
#include "uglmn/superindex.hpp"

namespace uglmn {

using Json = nlohmann::ordered_json;

Json vfunc_to_json(const VFunc& c);
VFunc vfunc_from_json(const Json& j);

Json matrix_to_json(const SuperMatrix& a);
SuperMatrix matrix_from_json(const Profile& p, const Json& j);

Json tensor_to_json(const Profile& p, const TensorElement& x);
TensorElement tensor_from_json(const Json& j, Profile* profile = nullptr);

Json blm_to_json(const Profile& p, const BlmElement& x);
BlmElement blm_from_json(const Json& j, Profile* profile = nullptr);

Json factor_to_json(const Profile& p, Flavor f, const FactorElement& x);
FactorElement factor_from_json(const Json& j, Profile* profile = nullptr, Flavor* flavor = nullptr);

Json words_to_json(const std::vector<WordTerm>& terms);
std::vector<WordTerm> words_from_json(const Json& j);

Json basis_to_json(const BlmBasis& b);
Json basis_to_json(const SuperMatrix& a);
Json basis_to_json(const DividedMonomial& x);

}  // namespace uglmn
