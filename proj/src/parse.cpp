#include "zsl/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "zsl/errors.hpp"

namespace zsl {
namespace {

struct Token {
    char kind;  // '*' '(' ')' '[' ']' '^' 'x' 'y' or 'n' for a number
    std::string text;
    long long value = 0;  // set when kind == 'n'
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '*' || c == '(' || c == ')' || c == '[' || c == ']' || c == '^' ||
            c == 'x' || c == 'y') {
            out.push_back({c, std::string(1, c)});
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            Token t{'n', text.substr(i, j - i)};
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError("number out of range: " + t.text, t.text);
            }
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", std::string(1, c));
    }
    return out;
}

class SeqParser {
  public:
    SeqParser(std::vector<Token> toks, const Group& g) : toks_(std::move(toks)), g_(g) {}

    Sequence run() {
        Sequence s(g_.order());
        if (toks_.empty()) return s;
        parse_term(s);
        while (!done()) {
            expect('*', "term separator '*'");
            parse_term(s);
        }
        return s;
    }

  private:
    bool done() const { return pos_ >= toks_.size(); }
    char kind(std::size_t ahead = 0) const {
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead].kind : '\0';
    }
    const Token& take() { return toks_[pos_++]; }
    const Token& expect(char k, const std::string& what) {
        if (done())
            throw ParseError("expected " + what + " at end of input", "");
        if (toks_[pos_].kind != k)
            throw ParseError("expected " + what + ", found '" + toks_[pos_].text + "'",
                             toks_[pos_].text);
        return toks_[pos_++];
    }

    int parse_element() {
        if (done()) throw ParseError("expected an element at end of input", "");
        const Token& t = take();
        if (t.kind == 'n') {
            if (t.value == 1) return g_.identity();
            throw ParseError("expected an element, found '" + t.text + "'", t.text);
        }
        if (t.kind == 'y') {
            long long b = 1;
            if (kind() == '^' && kind(1) == 'n') {
                take();
                b = take().value;
            }
            return g_.index(0, b);
        }
        if (t.kind == 'x') {
            if (g_.is_cyclic())
                throw ParseError("'x' is not an element of a cyclic group", "x");
            long long b = 0;
            if (kind() == '*' && kind(1) == 'y') {  // greedy "x*y..." merge
                take();
                take();
                if (kind() == '^' && kind(1) == 'n') {
                    take();
                    b = take().value;
                } else {
                    b = 1;
                }
            }
            return g_.index(1, b);
        }
        throw ParseError("expected an element, found '" + t.text + "'", t.text);
    }

    void parse_term(Sequence& s) {
        int elem;
        if (kind() == '(') {
            take();
            elem = parse_element();
            expect(')', "')'");
        } else {
            elem = parse_element();
        }
        std::uint64_t mult = 1;
        if (kind() == '^') {
            take();
            expect('[', "'[' after '^'");
            const Token& m = expect('n', "a multiplicity");
            if (m.value < 0 || m.value > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("multiplicity out of range: " + m.text, m.text);
            mult = static_cast<std::uint64_t>(m.value);
            expect(']', "']'");
        }
        if (mult > 0) s.add(elem, static_cast<std::uint32_t>(mult));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Group& g_;
};

}  // namespace

Sequence parse_sequence_text(const std::string& text, const Group& g) {
    return SeqParser(lex(text), g).run();
}

Sequence parse_sequence_json(const std::string& text, const Group& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), text);
    }
    if (!j.is_array())
        throw ParseError("JSON sequence must be an array of {a,b,mult}", j.dump());
    Sequence s(g.order());
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("a") || !item.contains("b") ||
            !item["a"].is_number_integer() || !item["b"].is_number_integer())
            throw ParseError("each entry needs integer fields a and b", item.dump());
        long long a = item["a"].get<long long>();
        if (a != 0 && a != 1)
            throw ParseError("field a must be 0 or 1", item.dump());
        long long b = item["b"].get<long long>();
        long long mult = 1;
        if (item.contains("mult")) {
            if (!item["mult"].is_number_integer() || item["mult"].get<long long>() < 0)
                throw ParseError("mult must be a nonnegative integer", item.dump());
            mult = item["mult"].get<long long>();
            if (mult > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("mult out of range", item.dump());
        }
        if (a == 1 && g.is_cyclic())
            throw ParseError("a=1 is not valid for a cyclic group", item.dump());
        if (mult > 0) s.add(g.index(static_cast<int>(a), b), static_cast<std::uint32_t>(mult));
    }
    return s;
}

Sequence parse_sequence(const std::string& text, const Group& g) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') return parse_sequence_json(text, g);
        break;
    }
    return parse_sequence_text(text, g);
}

std::string format_sequence(const Sequence& s, const Group& g) {
    std::ostringstream out;
    bool first = true;
    for (int e = 0; e < g.order(); ++e) {
        std::uint32_t m = s.count(e);
        if (m == 0) continue;
        if (!first) out << " * ";
        first = false;
        if (m == 1)
            out << g.element_name(e);
        else
            out << "(" << g.element_name(e) << ")^[" << m << "]";
    }
    return out.str();
}

std::string sequence_to_json(const Sequence& s, const Group& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e = 0; e < g.order(); ++e) {
        if (s.count(e) == 0) continue;
        GroupElement el = g.element(e);
        arr.push_back({{"a", el.a}, {"b", el.b}, {"mult", s.count(e)}});
    }
    return arr.dump();
}

Group parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("group spec needs a kind prefix, e.g. \"metacyclic:n=8,s=3\"", spec);
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);

    auto read_field = [&](const std::string& part, const std::string& key) -> long long {
        if (part.size() < key.size() + 2 || part.compare(0, key.size(), key) != 0 ||
            part[key.size()] != '=')
            throw ParseError("expected " + key + "=<integer>, found '" + part + "'", part);
        std::string num = part.substr(key.size() + 1);
        try {
            std::size_t used = 0;
            long long v = std::stoll(num, &used);
            if (used != num.size())
                throw ParseError("bad integer '" + num + "'", num);
            return v;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer '" + num + "'", num);
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range '" + num + "'", num);
        }
    };

    if (head == "cyclic") {
        long long m = read_field(rest, "m");
        if (m < 1 || m > std::numeric_limits<int>::max())
            throw ParseError("cyclic order out of range", rest);
        return Group::cyclic(static_cast<int>(m));
    }
    if (head == "metacyclic") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw ParseError("metacyclic spec needs n=<N>,s=<S>", rest);
        long long n = read_field(rest.substr(0, comma), "n");
        long long s = read_field(rest.substr(comma + 1), "s");
        if (n < 1 || n > std::numeric_limits<int>::max())
            throw ParseError("n out of range", rest);
        return Group::metacyclic(static_cast<int>(n), s);
    }
    throw ParseError("unknown group kind '" + head + "'", head);
}

}  // namespace zsl
