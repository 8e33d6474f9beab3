#include "uglmn/serialize.hpp"

#include <stdexcept>

namespace uglmn {

namespace {

Json poly_to_json(const VPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
    return out;
}

BigRat rational_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRat(j.get<long long>());
    if (j.is_string()) return BigRat(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

VPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial must be an object of exponent: coefficient");
    std::vector<VPoly::Term> terms;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        const int e = std::stoi(k, &used);
        if (used != k.size()) throw std::invalid_argument("bad exponent key '" + k + "'");
        terms.emplace_back(e, rational_from_json(v));
    }
    return VPoly(std::move(terms));
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name);
}

Profile profile_from_json(const Json& j) {
    Profile p{field(j, "m").get<int>(), field(j, "n").get<int>()};
    validate_profile(p);
    return p;
}

IntVector vector_from_json(const Profile& p, const Json& j) {
    auto v = j.get<IntVector>();
    if (static_cast<int>(v.size()) != p.size()) throw std::invalid_argument("vector has the wrong length");
    return v;
}

}  // namespace

Json vfunc_to_json(const VFunc& c) {
    Json out;
    out["num"] = poly_to_json(c.num());
    out["den"] = poly_to_json(c.den());
    out["text"] = c.to_string();
    return out;
}

VFunc vfunc_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return VFunc(rational_from_json(j));
    return VFunc(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

Json matrix_to_json(const SuperMatrix& a) {
    Json rows = Json::array();
    for (int i = 1; i <= a.size(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= a.size(); ++k) row.push_back(a(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

SuperMatrix matrix_from_json(const Profile& p, const Json& j) {
    if (j.is_string()) return SuperMatrix::parse(p, j.get<std::string>());
    return SuperMatrix(p, j.get<std::vector<std::vector<int>>>());
}

Json tensor_to_json(const Profile& p, const TensorElement& x) {
    Json out{{"m", p.m}, {"n", p.n}, {"terms", Json::array()}};
    for (const auto& [a, c] : x) out["terms"].push_back({{"coeff", vfunc_to_json(c)}, {"A", matrix_to_json(a)}});
    return out;
}

TensorElement tensor_from_json(const Json& j, Profile* profile) {
    const Profile p = profile_from_json(j);
    if (profile) *profile = p;
    TensorElement out;
    for (const auto& t : field(j, "terms")) out.add(matrix_from_json(p, field(t, "A")), vfunc_from_json(field(t, "coeff")));
    return out;
}

Json blm_to_json(const Profile& p, const BlmElement& x) {
    Json out{{"m", p.m}, {"n", p.n}, {"terms", Json::array()}};
    for (const auto& [b, c] : x) {
        out["terms"].push_back({{"coeff", vfunc_to_json(c)}, {"A", matrix_to_json(b.a)}, {"j", b.j}});
    }
    return out;
}

BlmElement blm_from_json(const Json& j, Profile* profile) {
    const Profile p = profile_from_json(j);
    if (profile) *profile = p;
    BlmElement out;
    for (const auto& t : field(j, "terms")) {
        out.add(BlmBasis(matrix_from_json(p, field(t, "A")), vector_from_json(p, field(t, "j"))),
                vfunc_from_json(field(t, "coeff")));
    }
    return out;
}

Json factor_to_json(const Profile& p, Flavor f, const FactorElement& x) {
    Json out{{"m", p.m}, {"n", p.n}, {"flavor", to_string(f)}, {"terms", Json::array()}};
    for (const auto& [mono, c] : x) out["terms"].push_back({{"coeff", vfunc_to_json(c)}, {"a", mono.exponents()}});
    return out;
}

FactorElement factor_from_json(const Json& j, Profile* profile, Flavor* flavor) {
    const Profile p = profile_from_json(j);
    const Flavor f = parse_flavor(field(j, "flavor").get<std::string>());
    if (profile) *profile = p;
    if (flavor) *flavor = f;
    FactorElement out;
    for (const auto& t : field(j, "terms")) {
        out.add(DividedMonomial(p, f, vector_from_json(p, field(t, "a"))), vfunc_from_json(field(t, "coeff")));
    }
    return out;
}

Json words_to_json(const std::vector<WordTerm>& terms) {
    Json out = Json::array();
    for (const auto& t : terms) out.push_back({{"coeff", vfunc_to_json(t.coeff)}, {"word", t.word.to_string()}});
    return out;
}

std::vector<WordTerm> words_from_json(const Json& j) {
    std::vector<WordTerm> out;
    for (const auto& t : j) out.push_back({vfunc_from_json(field(t, "coeff")), GenWord::parse(field(t, "word").get<std::string>())});
    return out;
}

Json basis_to_json(const BlmBasis& b) { return {{"A", matrix_to_json(b.a)}, {"j", b.j}}; }
Json basis_to_json(const SuperMatrix& a) { return {{"A", matrix_to_json(a)}}; }
Json basis_to_json(const DividedMonomial& x) { return {{"flavor", to_string(x.flavor())}, {"a", x.exponents()}}; }

}  // namespace uglmn
