#include "uglmn/generator.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace uglmn {

namespace {

char kind_char(GenKind k) {
    switch (k) {
        case GenKind::E: return 'E';
        case GenKind::F: return 'F';
        case GenKind::K: return 'K';
    }
    return '?';
}

GenKind kind_from_char(char c, const std::string& token) {
    switch (c) {
        case 'E': return GenKind::E;
        case 'F': return GenKind::F;
        case 'K': return GenKind::K;
        default: throw std::invalid_argument("bad generator token '" + token + "'");
    }
}

int parse_int(const std::string& s, const std::string& token) {
    if (s.empty()) throw std::invalid_argument("bad generator token '" + token + "'");
    std::size_t used = 0;
    int x = 0;
    try {
        x = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad generator token '" + token + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad generator token '" + token + "'");
    return x;
}

// Splits "K12^-3" / "E2^(4)" / "F1" into kind, index and the raw exponent text.
Letter parse_letter(const std::string& token) {
    if (token.size() < 2) throw std::invalid_argument("bad generator token '" + token + "'");
    Letter l;
    l.kind = kind_from_char(token[0], token);
    auto caret = token.find('^');
    l.index = parse_int(token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1),
                        token);
    l.exponent = 1;
    if (caret != std::string::npos) {
        std::string e = token.substr(caret + 1);
        if (l.kind == GenKind::K) {
            l.exponent = parse_int(e, token);
        } else {
            if (e.size() < 3 || e.front() != '(' || e.back() != ')') {
                throw std::invalid_argument("divided power must be written E1^(a): '" + token + "'");
            }
            l.exponent = parse_int(e.substr(1, e.size() - 2), token);
            if (l.exponent < 1) throw std::invalid_argument("divided power must be >= 1: '" + token + "'");
        }
    }
    return l;
}

}  // namespace

std::string Generator::to_string() const {
    std::string s(1, kind_char(kind));
    s += std::to_string(index);
    if (kind == GenKind::K && sign < 0) s += "^-1";
    return s;
}

Generator Generator::parse(const std::string& token) {
    Letter l = parse_letter(token);
    if (l.kind == GenKind::K) {
        if (l.exponent != 1 && l.exponent != -1) {
            throw std::invalid_argument("generator K exponent must be +-1: '" + token + "'");
        }
        return K(l.index, l.exponent);
    }
    if (l.exponent != 1) throw std::invalid_argument("generator cannot carry a divided power: '" + token + "'");
    return {l.kind, l.index, 1};
}

void validate_generator(const Generator& g, const Profile& p) {
    if (g.kind == GenKind::K) {
        if (g.index < 1 || g.index > p.size()) throw std::out_of_range("generator " + g.to_string() + " out of range");
        if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("K sign must be +-1");
    } else if (g.index < 1 || g.index >= p.size()) {
        throw std::out_of_range("generator " + g.to_string() + " out of range");
    }
}

int generator_parity(const Generator& g, const Profile& p) {
    return (g.kind != GenKind::K && g.index == p.m) ? 1 : 0;
}

std::vector<Generator> all_generators(const Profile& p) {
    std::vector<Generator> gs;
    for (int h = 1; h < p.size(); ++h) {
        gs.push_back(Generator::E(h));
        gs.push_back(Generator::F(h));
    }
    for (int i = 1; i <= p.size(); ++i) {
        gs.push_back(Generator::K(i, 1));
        gs.push_back(Generator::K(i, -1));
    }
    return gs;
}

GenWord::GenWord(std::vector<Letter> letters) {
    for (const auto& l : letters) append(l);
}

GenWord::GenWord(std::initializer_list<Generator> gens) {
    for (const auto& g : gens) append(g);
}

GenWord& GenWord::append(Letter l) {
    if (l.exponent == 0) return *this;
    if (l.kind != GenKind::K && l.exponent < 0) throw std::invalid_argument("negative divided power");
    letters_.push_back(l);
    return *this;
}

GenWord& GenWord::append(const Generator& g) {
    return append(Letter{g.kind, g.index, g.kind == GenKind::K ? g.sign : 1});
}

GenWord& GenWord::append(const GenWord& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
}

std::string GenWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) os << ' ';
        first = false;
        os << kind_char(l.kind) << l.index;
        if (l.kind == GenKind::K) {
            if (l.exponent != 1) os << '^' << l.exponent;
        } else if (l.exponent != 1) {
            os << "^(" << l.exponent << ')';
        }
    }
    return os.str();
}

GenWord GenWord::parse(const std::string& text) {
    GenWord w;
    std::istringstream is(text);
    std::string token;
    while (is >> token) w.append(parse_letter(token));
    return w;
}

std::string to_string(const WordComb& w) {
    if (w.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [word, c] : w) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ")*[" << word.to_string() << ']';
    }
    return os.str();
}

}  // namespace uglmn
