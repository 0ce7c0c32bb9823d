// Finitely presented groups: generator lists, relator words, and the
// presentation-grammar parser.
//
// Grammar:
//   presentation := "gens:" ident+ ";" [ "rels:" relator ("," relator)* ";" ]
//   relator      := term+
//   term         := ident ("^" signed-integer)?
// Idents are [A-Za-z][A-Za-z0-9_]*; whitespace separates terms. A term with
// exponent k expands to |k| letters of sign sgn(k); relators are stored as
// written, without free reduction.
#ifndef RESFIN_PRESENTATION_HPP
#define RESFIN_PRESENTATION_HPP

#include <cctype>
#include <cstring>
#include <cstdint>
#include <string>
#include <vector>

#include "resfin/coeff.hpp"

namespace resfin {

struct Letter {
    std::uint32_t gen;  // generator index
    int sign;           // +1 or -1
    bool operator==(const Letter&) const = default;
};

struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    bool operator==(const Word&) const = default;

    Word concat(const Word& o) const {
        Word w(*this);
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }
};

// Free reduction: repeatedly cancels adjacent x x^-1 pairs.
inline Word reduce_word(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (const auto& l : w.letters) {
        if (!out.letters.empty() && out.letters.back().gen == l.gen &&
            out.letters.back().sign == -l.sign)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

inline Word invert_word(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->gen, -it->sign});
    return out;
}

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

class Presentation {
  public:
    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<Word> rels)
        : generators_(std::move(gens)), relators_(std::move(rels)) {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].empty()) throw Error("empty generator name");
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                if (generators_[i] == generators_[j])
                    throw Error("duplicate generator: " + generators_[i]);
        }
        for (const auto& r : relators_)
            for (const auto& l : r.letters)
                if (l.gen >= generators_.size()) throw Error("relator letter out of range");
    }

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }
    std::size_t rank() const { return generators_.size(); }

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            if (generators_[i] == name) return static_cast<int>(i);
        return -1;
    }

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        std::size_t i = 0;
        while (i < w.letters.size()) {
            std::size_t j = i;
            while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
            long k = static_cast<long>(j - i) * w.letters[i].sign;
            if (!out.empty()) out += ' ';
            out += generators_[w.letters[i].gen];
            if (k != 1) out += "^" + std::to_string(k);
            i = j;
        }
        return out;
    }

  private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

namespace detail {

struct PresLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!try_consume(c)) throw ParseError(pos, std::string("expected '") + c + "' " + what);
    }
    bool at_ident() { return std::isalpha(static_cast<unsigned char>(peek())); }
    std::string ident() {
        skip_ws();
        if (!at_ident()) throw ParseError(pos, "expected identifier");
        std::size_t b = pos++;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(b, pos - b);
    }
    long signed_integer() {
        skip_ws();
        std::size_t b = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t d = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d) throw ParseError(pos, "expected integer exponent");
        return std::stol(s.substr(b, pos - b));
    }
    void keyword(const char* kw) {
        skip_ws();
        std::size_t n = std::strlen(kw);
        if (s.compare(pos, n, kw) != 0) throw ParseError(pos, std::string("expected '") + kw + "'");
        pos += n;
    }
};

inline Word parse_word_letters(PresLexer& lx, const std::vector<std::string>& gens) {
    Word w;
    bool any = false;
    while (lx.at_ident()) {
        std::size_t at = lx.pos;
        std::string name = lx.ident();
        int idx = -1;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) idx = static_cast<int>(i);
        if (idx < 0) throw ParseError(at, "undeclared generator '" + name + "'");
        long e = 1;
        if (lx.try_consume('^')) e = lx.signed_integer();
        int sign = e < 0 ? -1 : 1;
        for (long k = 0; k < std::labs(e); ++k)
            w.letters.push_back({static_cast<std::uint32_t>(idx), sign});
        any = true;
    }
    if (!any) throw ParseError(lx.pos, "expected a word");
    return w;
}

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    detail::PresLexer lx{text};
    lx.keyword("gens:");
    std::vector<std::string> gens;
    while (lx.at_ident()) {
        std::size_t at = lx.pos;
        std::string g = lx.ident();
        for (const auto& prev : gens)
            if (prev == g) throw ParseError(at, "duplicate generator '" + g + "'");
        gens.push_back(g);
    }
    if (gens.empty()) throw ParseError(lx.pos, "expected at least one generator");
    lx.expect(';', "after generator list");

    std::vector<Word> rels;
    if (lx.peek() != '\0') {
        lx.keyword("rels:");
        rels.push_back(detail::parse_word_letters(lx, gens));
        while (lx.try_consume(',')) rels.push_back(detail::parse_word_letters(lx, gens));
        lx.expect(';', "after relator list");
        if (lx.peek() != '\0') throw ParseError(lx.pos, "trailing input");
    }
    return Presentation(std::move(gens), std::move(rels));
}

// Parses a standalone word (the CLI --word argument) in P's generators.
inline Word parse_word(const Presentation& P, const std::string& text) {
    detail::PresLexer lx{text};
    Word w = detail::parse_word_letters(lx, P.generators());
    if (lx.peek() != '\0') throw ParseError(lx.pos, "trailing input after word");
    return w;
}

}  // namespace resfin

#endif
