#include <cctype>

#include "muc/terms.hpp"

namespace muc {

namespace {

enum class Tok { Ident, LParen, RParen, LBrack, RBrack, Comma, Semi, OTensor, OPar, PostStar, PreStar, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t col;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '\'';
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&](std::size_t j) {
        while (j < n && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    while (true) {
        i = skip_ws(i);
        if (i >= n) break;
        char c = s[i];
        std::size_t col = i + 1;
        if (static_cast<unsigned char>(c) >= 0x80) throw ParseError(col, "non-ASCII character");
        if (c == '(') {
            // "(x)" and "(+)" are operators; "(xy" starts a parenthesized name
            std::size_t j = skip_ws(i + 1);
            bool op = j < n && (s[j] == '+' || (s[j] == 'x' && (j + 1 >= n || !ident_char(s[j + 1]))));
            if (op) {
                char which = s[j];
                std::size_t k = skip_ws(j + 1);
                if (k >= n || s[k] != ')') throw ParseError(k + 1, "expected ')'");
                out.push_back({which == 'x' ? Tok::OTensor : Tok::OPar, which == 'x' ? "(x)" : "(+)", col});
                i = k + 1;
            } else {
                out.push_back({Tok::LParen, "(", col});
                ++i;
            }
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < n && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        switch (c) {
            case ')': out.push_back({Tok::RParen, ")", col}); ++i; continue;
            case '[': out.push_back({Tok::LBrack, "[", col}); ++i; continue;
            case ']': out.push_back({Tok::RBrack, "]", col}); ++i; continue;
            case ',': out.push_back({Tok::Comma, ",", col}); ++i; continue;
            case ';': out.push_back({Tok::Semi, ";", col}); ++i; continue;
            case '^':
                if (i + 1 < n && s[i + 1] == '*') {
                    out.push_back({Tok::PostStar, "^*", col});
                    i += 2;
                    continue;
                }
                throw ParseError(col + 1, "expected '*' after '^'");
            case '*':
                if (i + 1 < n && s[i + 1] == '^') {
                    out.push_back({Tok::PreStar, "*^", col});
                    i += 2;
                    continue;
                }
                throw ParseError(col + 1, "expected '^' after '*'");
            default: throw ParseError(col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", n + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ObjPtr object_all() {
        ObjPtr t = object();
        expect_end();
        return t;
    }

    MorPtr morphism_all() {
        MorPtr t = morphism();
        expect_end();
        return t;
    }

private:
    const Token& peek(std::size_t k = 0) const {
        std::size_t j = pos_ + k;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(peek().col, std::string("expected ") + what);
    }
    void expect_end() {
        if (peek().kind != Tok::End) throw ParseError(peek().col, "unexpected '" + peek().text + "'");
    }

    ObjPtr object() {
        ObjPtr left = obj_prefix();
        while (peek().kind == Tok::OTensor || peek().kind == Tok::OPar) {
            bool tensor = next().kind == Tok::OTensor;
            ObjPtr right = obj_prefix();
            left = tensor ? o_tensor(left, right) : o_par(left, right);
        }
        return left;
    }

    ObjPtr obj_prefix() {
        if (accept(Tok::PreStar)) return o_dual_left(obj_prefix());
        ObjPtr t = obj_primary();
        while (accept(Tok::PostStar)) t = o_dual(t);
        return t;
    }

    ObjPtr obj_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            ObjPtr inner = object();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind != Tok::Ident) throw ParseError(t.col, "expected an object");
        Token id = next();
        if (id.text == "Top") return o_top();
        if (id.text == "Bot") return o_bot();
        if ((id.text == "dag" || id.text == "bar") && peek().kind == Tok::LParen) {
            next();
            ObjPtr inner = object();
            expect(Tok::RParen, "')'");
            return id.text == "dag" ? o_dag(inner) : o_conj(inner);
        }
        return o_atom(id.text);
    }

    MorPtr morphism() {
        MorPtr left = mor_binary();
        while (accept(Tok::Semi)) left = m_seq(left, mor_binary());
        return left;
    }

    MorPtr mor_binary() {
        MorPtr left = mor_primary();
        while (peek().kind == Tok::OTensor || peek().kind == Tok::OPar) {
            bool tensor = next().kind == Tok::OTensor;
            MorPtr right = mor_primary();
            left = tensor ? m_tensor(left, right) : m_par(left, right);
        }
        return left;
    }

    MorPtr mor_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            MorPtr inner = morphism();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind != Tok::Ident) throw ParseError(t.col, "expected a morphism");
        Token id = next();
        if (id.text == "id") {
            expect(Tok::LBrack, "'['");
            ObjPtr o = object();
            expect(Tok::RBrack, "']'");
            return m_id(o);
        }
        if (id.text == "dag" || id.text == "bar" || id.text == "ddag") {
            expect(Tok::LParen, "'('");
            MorPtr inner = morphism();
            expect(Tok::RParen, "')'");
            if (id.text == "dag") return m_dag(inner);
            if (id.text == "bar") return m_conj(inner);
            return m_ddag(inner);
        }
        if (peek().kind == Tok::LBrack) {
            auto kind = const_by_name(id.text);
            if (!kind) throw ParseError(id.col, "unknown constant '" + id.text + "'");
            next();
            std::vector<ObjPtr> args;
            if (peek().kind != Tok::RBrack) {
                args.push_back(object());
                while (accept(Tok::Comma)) args.push_back(object());
            }
            expect(Tok::RBrack, "']'");
            int arity = const_info(*kind).arity;
            if (static_cast<int>(args.size()) != arity) {
                throw ParseError(id.col, id.text + " takes " + std::to_string(arity) + " object arguments");
            }
            return m_const(*kind, std::move(args));
        }
        return m_named(id.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ObjPtr parse_obj(const std::string& text) { return Parser(text).object_all(); }

MorPtr parse_mor(const std::string& text) { return Parser(text).morphism_all(); }

}  // namespace muc
