// uglmn: command-line front end for the U_v(gl(m|n)) module library.
//
//   uglmn act --m 1 --n 1 --space blm --gen E1 --A 0,0;0,0 --j 0,0
//   uglmn multiply --m 1 --n 1 --lhs '0,1;0,0@0,0' --rhs lhs.json
//   uglmn expand --m 2 --n 1 --A '0,1,0;0,0,1;0,0,0' --j 0,0,0
//   uglmn truncate --m 1 --n 1 --A '0,1;0,0' --j 0,0 --L 3
//   uglmn oracle-compare --m 1 --n 1 --gen E1 --A '0,0;1,0' --j 0,0 --L 3
//   uglmn verify --m 1 --n 1 --suite all --bound 2
//   uglmn highest-weight --m 2 --n 1 --r 3 --a 1,1,1
//
// Every command prints JSON on stdout. Exit status: 0 on success (and, for
// verify / oracle-compare, only when everything passed), 1 on a failed check,
// 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "uglmn/blm.hpp"
#include "uglmn/relcheck.hpp"
#include "uglmn/serialize.hpp"

using namespace uglmn;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" is stdin, an existing path is read, anything else is taken literally.
std::string slurp(const std::string& source) {
    if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(source);
    if (in) return {std::istreambuf_iterator<char>(in), {}};
    return source;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

void check_profile(const Json& j, const Profile& p) {
    if (j.contains("m") && j.contains("n") && (j["m"] != p.m || j["n"] != p.n)) {
        throw InputError("element profile does not match --m/--n");
    }
}

// An A(j) element: JSON (inline, file or stdin) or the compact "matrix@j".
BlmElement read_blm(const std::string& source, const Profile& p) {
    std::string text = slurp(source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = parse_json(text);
        check_profile(j, p);
        return blm_from_json(j);
    }
    const auto at = text.find('@');
    if (at == std::string::npos) throw InputError("expected JSON or 'matrix@j', got '" + source + "'");
    return BlmElement(BlmBasis(SuperMatrix::parse(p, text.substr(0, at)), parse_vector(p, text.substr(at + 1))));
}

TensorElement read_tensor(const std::string& source, const Profile& p) {
    std::string text = slurp(source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = parse_json(text);
        check_profile(j, p);
        return tensor_from_json(j);
    }
    return TensorElement(SuperMatrix::parse(p, text));
}

FactorElement read_factor(const std::string& source, const Profile& p, Flavor f) {
    std::string text = slurp(source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = parse_json(text);
        check_profile(j, p);
        return factor_from_json(j);
    }
    return FactorElement(DividedMonomial(p, f, parse_vector(p, text)));
}

GenWord read_word(const std::string& gen, const std::string& word) {
    if (!gen.empty() && !word.empty()) throw InputError("give either --gen or --word, not both");
    if (!gen.empty()) return GenWord({Generator::parse(gen)});
    return GenWord::parse(word);
}

bool g_pretty = false;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in U_v(gl(m|n)) and its modules"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent the JSON output");

    Profile p;
    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--m", p.m, "even part size")->required();
        sub->add_option("--n", p.n, "odd part size")->required();
    };

    // act
    std::string space = "blm", gen, word_text, input, a_text, j_text, a_vec, flavor_text = "0|1";
    bool mutate = false, signed_basis = false;
    auto* act = app.add_subcommand("act", "apply a generator or word to an element");
    add_profile(act);
    act->add_option("--space", space, "tensor | blm | factor")->check(CLI::IsMember({"tensor", "blm", "factor"}));
    act->add_option("--gen", gen, "generator: E1, F2, K3, K3^-1");
    act->add_option("--word", word_text, "word, applied right to left: \"F1 K2^-1 E1^(2)\"");
    act->add_option("--input", input, "element: JSON text, a file, - for stdin, or compact form");
    act->add_option("--A", a_text, "single basis matrix \"0,1;1,0\" (tensor, blm)");
    act->add_option("--j", j_text, "j vector for --A (blm)");
    act->add_option("--a", a_vec, "single exponent vector (factor)");
    act->add_option("--flavor", flavor_text, "factor flavor: 0|1 or 1|0");
    act->add_flag("--mutate", mutate, "enable the deliberate E_m sign flip");
    act->add_flag("--signed", signed_basis, "use the sign-modified A(j) basis");

    // multiply
    std::string lhs, rhs;
    auto* mul = app.add_subcommand("multiply", "product of two A(j) elements");
    add_profile(mul);
    mul->add_option("--lhs", lhs, "JSON element, file, -, or \"matrix@j\"")->required();
    mul->add_option("--rhs", rhs, "JSON element, file, -, or \"matrix@j\"")->required();

    // expand / truncate / oracle-compare
    int level = 0;
    auto* exp = app.add_subcommand("expand", "write A(j) as a combination of generator words");
    add_profile(exp);
    exp->add_option("--A", a_text)->required();
    exp->add_option("--j", j_text)->required();

    auto* trunc = app.add_subcommand("truncate", "finite part of A(j) in S^{m|n}");
    add_profile(trunc);
    trunc->add_option("--A", a_text)->required();
    trunc->add_option("--j", j_text)->required();
    trunc->add_option("--L", level, "truncation level")->required()->check(CLI::NonNegativeNumber);

    auto* cmp = app.add_subcommand("oracle-compare", "compare a generator on A(j) with its truncated series");
    add_profile(cmp);
    cmp->add_option("--gen", gen)->required();
    cmp->add_option("--A", a_text)->required();
    cmp->add_option("--j", j_text)->required();
    cmp->add_option("--L", level, "truncation level")->required()->check(CLI::PositiveNumber);

    // verify
    std::string suite = "all";
    int bound = 2, jlo = -1, jhi = 1;
    auto* ver = app.add_subcommand("verify", "check the defining relations on a module");
    add_profile(ver);
    ver->add_option("--suite", suite, "factor | tensor | blm | all")
        ->check(CLI::IsMember({"factor", "tensor", "blm", "all"}));
    ver->add_option("--bound", bound, "factor: max degree; tensor, blm: max entry")->check(CLI::NonNegativeNumber);
    ver->add_option("--jlo", jlo, "smallest j entry (blm)");
    ver->add_option("--jhi", jhi, "largest j entry (blm)");
    ver->add_flag("--mutate", mutate, "enable the deliberate E_m sign flip");

    // highest-weight
    int r = 1;
    auto* hw = app.add_subcommand("highest-weight", "F-word from X^(r e_1) to X^(a) in S_0|1");
    add_profile(hw);
    hw->add_option("--r", r)->required();
    hw->add_option("--a", a_vec)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        validate_profile(p);
        ActionOptions opts;
        opts.mutate_odd_sign = mutate;
        opts.signs = signed_basis ? SignConvention::Signed : SignConvention::Plain;

        if (act->parsed()) {
            if (gen.empty() && word_text.empty()) throw InputError("act needs --gen or --word");
            const GenWord w = read_word(gen, word_text);
            const int sources = !input.empty() + !a_text.empty() + !a_vec.empty();
            if (sources != 1) throw InputError("act needs exactly one of --input, --A, --a");
            if (space == "blm") {
                BlmElement x = input.empty() ? BlmElement(BlmBasis(SuperMatrix::parse(p, a_text), j_text.empty()
                                                                       ? IntVector(static_cast<std::size_t>(p.size()), 0)
                                                                       : parse_vector(p, j_text)))
                                             : read_blm(input, p);
                emit(blm_to_json(p, act_word_blm(w, x, opts)));
            } else if (space == "tensor") {
                TensorElement x = input.empty() ? TensorElement(SuperMatrix::parse(p, a_text)) : read_tensor(input, p);
                emit(tensor_to_json(p, act_word_tensor(w, x, opts)));
            } else {
                Flavor f = parse_flavor(flavor_text);
                FactorElement x = input.empty() ? FactorElement(DividedMonomial(p, f, parse_vector(p, a_vec)))
                                                : read_factor(input, p, f);
                if (!x.is_zero()) f = x.begin()->first.flavor();
                emit(factor_to_json(p, f, act_word_factor(w, x, opts)));
            }
            return 0;
        }
        if (mul->parsed()) {
            emit(blm_to_json(p, multiply(read_blm(lhs, p), read_blm(rhs, p))));
            return 0;
        }
        if (exp->parsed()) {
            emit(words_to_json(expand_as_words(SuperMatrix::parse(p, a_text), parse_vector(p, j_text))));
            return 0;
        }
        if (trunc->parsed()) {
            const BlmBasis b(SuperMatrix::parse(p, a_text), parse_vector(p, j_text));
            emit(tensor_to_json(p, truncate(b, level).series));
            return 0;
        }
        if (cmp->parsed()) {
            const BlmBasis b(SuperMatrix::parse(p, a_text), parse_vector(p, j_text));
            const TensorElement diff = truncation_mismatch(Generator::parse(gen), b, level);
            Json out{{"generator", gen}, {"L", level}, {"pass", diff.is_zero()}};
            if (!diff.is_zero()) out["difference"] = tensor_to_json(p, diff);
            emit(out);
            return diff.is_zero() ? 0 : 1;
        }
        if (ver->parsed()) {
            if (jlo > jhi) throw InputError("--jlo must not exceed --jhi");
            Json reports = Json::array();
            bool ok = true;
            auto record = [&](const Report& rep) {
                ok = ok && rep.all_pass();
                reports.push_back(rep.to_json());
            };
            if (suite == "factor" || suite == "all") {
                record(full_suite(factor_handle(p, Flavor::ZeroOne, bound, opts)));
                record(full_suite(factor_handle(p, Flavor::OneZero, bound, opts)));
            }
            if (suite == "tensor" || suite == "all") record(full_suite(tensor_handle(p, bound, opts)));
            if (suite == "blm" || suite == "all") record(full_suite(blm_handle(p, bound, jlo, jhi, opts)));
            emit(Json{{"pass", ok}, {"reports", reports}});
            return ok ? 0 : 1;
        }
        if (hw->parsed()) {
            const IntVector a = parse_vector(p, a_vec);
            const GenWord w = highest_weight_word(r, a, p);
            IntVector top(static_cast<std::size_t>(p.size()), 0);
            top[0] = r;
            const FactorElement source(DividedMonomial(p, Flavor::ZeroOne, top));
            const FactorElement image = act_word_factor(w, source);
            const FactorElement back = act_word_factor(reversed_e_word(w), image);
            emit(Json{{"word", w.to_string()},
                      {"image", factor_to_json(p, Flavor::ZeroOne, image)},
                      {"reversed_word", reversed_e_word(w).to_string()},
                      {"reversed_image", factor_to_json(p, Flavor::ZeroOne, back)}});
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "uglmn: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
