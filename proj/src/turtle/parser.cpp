#include "shaclgap/turtle/parser.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <cctype>
#include <unordered_map>

namespace shaclgap::turtle {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::unexpected_token: return "UnexpectedToken";
        case ParseErrorKind::undeclared_prefix: return "UndeclaredPrefix";
        case ParseErrorKind::bad_iri: return "BadIri";
        case ParseErrorKind::bad_literal: return "BadLiteral";
        case ParseErrorKind::unterminated_statement: return "UnterminatedStatement";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind(kind),
      line(line),
      column(column),
      message(message) {}

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string encode_utf8(unsigned code) {
    std::string out;
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xc0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xe0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else {
        out += static_cast<char>(0xf0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    }
    return out;
}

enum class TokenKind {
    eof,
    iriref,        // value = raw IRI text
    pname,         // prefix_part + local_part
    blank_label,   // value = label
    string,        // value = cooked text
    at_word,       // value = word after '@': prefix, base or a language tag
    word,          // bare word such as `a`, `PREFIX`, `true`
    integer,       // value = lexical form
    decimal,       // value = lexical form
    dot,
    semicolon,
    comma,
    open_paren,
    close_paren,
    open_bracket,
    close_bracket,
    carets,        // ^^
};

struct Token {
    TokenKind kind = TokenKind::eof;
    std::string value;
    std::string prefix_part;
    std::string local_part;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (eof()) return tok;

        char c = peek();
        if (c == '<') return lex_iriref(tok);
        if (c == '"') return lex_string(tok);
        if (c == '@') return lex_at_word(tok);
        if (c == '^') {
            advance();
            if (!eof() && peek() == '^') {
                advance();
                tok.kind = TokenKind::carets;
                return tok;
            }
            fail(ParseErrorKind::unexpected_token, tok.line, tok.column, "stray '^'");
        }
        if (c == '.') {
            // A dot starts a decimal only when directly followed by a digit.
            if (pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) return lex_number(tok);
            advance();
            tok.kind = TokenKind::dot;
            return tok;
        }
        switch (c) {
            case ';': advance(); tok.kind = TokenKind::semicolon; return tok;
            case ',': advance(); tok.kind = TokenKind::comma; return tok;
            case '(': advance(); tok.kind = TokenKind::open_paren; return tok;
            case ')': advance(); tok.kind = TokenKind::close_paren; return tok;
            case '[': advance(); tok.kind = TokenKind::open_bracket; return tok;
            case ']': advance(); tok.kind = TokenKind::close_bracket; return tok;
            default: break;
        }
        if (c == '+' || c == '-' || is_digit(c)) return lex_number(tok);
        if (is_ident_start(c) || c == ':') return lex_name(tok);
        fail(ParseErrorKind::unexpected_token, tok.line, tok.column,
             std::string("unexpected character '") + c + "'");
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(ParseErrorKind kind, std::size_t line, std::size_t column,
                           const std::string& message) {
        throw ParseError(kind, line, column, message);
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token lex_iriref(Token tok) {
        advance();  // '<'
        std::string value;
        while (true) {
            if (eof())
                fail(ParseErrorKind::bad_iri, line_, column_, "unterminated IRI");
            std::size_t cl = line_, cc = column_;
            char c = advance();
            if (c == '>') break;
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '"' ||
                static_cast<unsigned char>(c) < 0x20)
                fail(ParseErrorKind::bad_iri, cl, cc, "invalid character in IRI");
            value += c;
        }
        if (value.empty()) fail(ParseErrorKind::bad_iri, tok.line, tok.column, "empty IRI");
        // Absolute IRIs only: require a scheme.
        std::size_t colon = value.find(':');
        bool has_scheme = colon != std::string::npos && colon > 0 && std::isalpha(static_cast<unsigned char>(value[0]));
        for (std::size_t i = 1; has_scheme && i < colon; ++i) {
            char sc = value[i];
            if (!std::isalnum(static_cast<unsigned char>(sc)) && sc != '+' && sc != '-' && sc != '.')
                has_scheme = false;
        }
        if (!has_scheme)
            fail(ParseErrorKind::unexpected_token, tok.line, tok.column,
                 "relative IRI <" + value + "> is not supported");
        tok.kind = TokenKind::iriref;
        tok.value = std::move(value);
        return tok;
    }

    Token lex_string(Token tok) {
        advance();  // opening quote
        if (pos_ + 1 < text_.size() && text_[pos_] == '"' && text_[pos_ + 1] == '"')
            fail(ParseErrorKind::unexpected_token, tok.line, tok.column,
                 "triple-quoted strings are not supported");
        std::string value;
        while (true) {
            if (eof())
                fail(ParseErrorKind::bad_literal, line_, column_, "unterminated string literal");
            std::size_t cl = line_, cc = column_;
            char c = advance();
            if (c == '"') break;
            if (c == '\n' || c == '\r')
                fail(ParseErrorKind::bad_literal, cl, cc, "newline in string literal");
            if (c == '\\') {
                if (eof())
                    fail(ParseErrorKind::bad_literal, line_, column_, "unterminated escape");
                std::size_t el = line_, ec = column_;
                char e = advance();
                switch (e) {
                    case 't': value += '\t'; break;
                    case 'b': value += '\b'; break;
                    case 'n': value += '\n'; break;
                    case 'r': value += '\r'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\'': value += '\''; break;
                    case '\\': value += '\\'; break;
                    case 'u': value += encode_utf8(lex_hex(4)); break;
                    case 'U': value += encode_utf8(lex_hex(8)); break;
                    default:
                        fail(ParseErrorKind::bad_literal, el, ec,
                             std::string("invalid escape '\\") + e + "'");
                }
                continue;
            }
            value += c;
        }
        tok.kind = TokenKind::string;
        tok.value = std::move(value);
        return tok;
    }

    unsigned lex_hex(unsigned count) {
        unsigned code = 0;
        for (unsigned i = 0; i < count; ++i) {
            if (eof())
                fail(ParseErrorKind::bad_literal, line_, column_, "unterminated unicode escape");
            std::size_t cl = line_, cc = column_;
            char c = advance();
            if (c >= '0' && c <= '9') code = (code << 4) | static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') code = (code << 4) | static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') code = (code << 4) | static_cast<unsigned>(c - 'A' + 10);
            else fail(ParseErrorKind::bad_literal, cl, cc, "invalid unicode escape digit");
        }
        return code;
    }

    Token lex_at_word(Token tok) {
        advance();  // '@'
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
            word += advance();
        if (word.empty())
            fail(ParseErrorKind::unexpected_token, tok.line, tok.column, "stray '@'");
        tok.kind = TokenKind::at_word;
        tok.value = std::move(word);
        return tok;
    }

    Token lex_number(Token tok) {
        std::string lexical;
        if (peek() == '+' || peek() == '-') lexical += advance();
        bool seen_dot = false;
        bool seen_digit = false;
        while (!eof()) {
            char c = peek();
            if (is_digit(c)) {
                seen_digit = true;
                lexical += advance();
            } else if (c == '.' && !seen_dot) {
                // Trailing statement dot: `500 .` and `500.` both end the
                // integer unless a digit follows.
                if (pos_ + 1 >= text_.size() || !is_digit(text_[pos_ + 1])) break;
                seen_dot = true;
                lexical += advance();
            } else {
                break;
            }
        }
        if (!seen_digit)
            fail(ParseErrorKind::unexpected_token, tok.line, tok.column, "malformed number");
        if (!eof() && (peek() == 'e' || peek() == 'E'))
            fail(ParseErrorKind::unexpected_token, line_, column_,
                 "numeric exponents are not supported");
        tok.kind = seen_dot ? TokenKind::decimal : TokenKind::integer;
        tok.value = std::move(lexical);
        return tok;
    }

    // Prefixed names, blank node labels and bare words share a lexer rule;
    // a ':' decides between them.
    Token lex_name(Token tok) {
        std::string prefix;
        while (!eof() && is_ident_char(peek())) prefix += advance();
        while (!prefix.empty() && prefix.back() == '.') {
            prefix.pop_back();
            rewind_dot();
        }
        if (eof() || peek() != ':') {
            if (prefix.empty())
                fail(ParseErrorKind::unexpected_token, tok.line, tok.column, "unexpected ':'");
            tok.kind = TokenKind::word;
            tok.value = std::move(prefix);
            return tok;
        }
        advance();  // ':'
        std::string local;
        while (!eof() && is_ident_char(peek())) local += advance();
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            rewind_dot();
        }
        if (prefix == "_") {
            if (local.empty())
                fail(ParseErrorKind::unexpected_token, tok.line, tok.column,
                     "blank node label missing");
            tok.kind = TokenKind::blank_label;
            tok.value = std::move(local);
            return tok;
        }
        tok.kind = TokenKind::pname;
        tok.prefix_part = std::move(prefix);
        tok.local_part = std::move(local);
        return tok;
    }

    // Puts a consumed trailing '.' back; dots never contain newlines.
    void rewind_dot() {
        --pos_;
        --column_;
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { next_ = lexer_.next(); }

    Document run() {
        while (current().kind != TokenKind::eof) statement();
        document_.graph.freeze();
        return std::move(document_);
    }

private:
    Lexer lexer_;
    Token next_;
    Document document_;
    std::size_t blank_counter_ = 0;
    std::unordered_map<std::string, std::string> blank_labels_;

    const Token& current() const { return next_; }

    Token take() {
        Token tok = std::move(next_);
        next_ = lexer_.next();
        return tok;
    }

    [[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& message) {
        throw ParseError(kind, at.line, at.column, message);
    }

    void expect(TokenKind kind, const char* what) {
        if (current().kind != kind) {
            if (current().kind == TokenKind::eof)
                fail(ParseErrorKind::unterminated_statement, current(),
                     std::string("expected ") + what + " before end of input");
            fail(ParseErrorKind::unexpected_token, current(), std::string("expected ") + what);
        }
        take();
    }

    rdf::Term fresh_blank() { return rdf::Term::blank("b" + std::to_string(blank_counter_++)); }

    rdf::Term labeled_blank(const std::string& label) {
        auto [it, inserted] = blank_labels_.try_emplace(label);
        if (inserted) it->second = "b" + std::to_string(blank_counter_++);
        return rdf::Term::blank(it->second);
    }

    rdf::Iri resolve_pname(const Token& tok) {
        auto ns = document_.prefixes.find(tok.prefix_part);
        if (!ns)
            fail(ParseErrorKind::undeclared_prefix, tok,
                 "prefix '" + tok.prefix_part + ":' is not declared");
        return rdf::Iri{ns->value + tok.local_part};
    }

    void emit(rdf::Term subject, rdf::Term predicate, rdf::Term object) {
        document_.graph.insert(std::move(subject), std::move(predicate), std::move(object));
    }

    void statement() {
        const Token& tok = current();
        if (tok.kind == TokenKind::at_word) {
            if (tok.value == "prefix") {
                directive(/*sparql_style=*/false);
                return;
            }
            fail(ParseErrorKind::unexpected_token, tok, "unsupported directive '@" + tok.value + "'");
        }
        if (tok.kind == TokenKind::word) {
            std::string upper;
            for (char c : tok.value) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (upper == "PREFIX") {
                directive(/*sparql_style=*/true);
                return;
            }
            if (upper == "BASE")
                fail(ParseErrorKind::unexpected_token, tok, "base directives are not supported");
            fail(ParseErrorKind::unexpected_token, tok, "unexpected '" + tok.value + "'");
        }
        triples();
        expect(TokenKind::dot, "'.'");
    }

    void directive(bool sparql_style) {
        take();  // @prefix / PREFIX
        const Token& name = current();
        if (name.kind != TokenKind::pname || !name.local_part.empty())
            fail(ParseErrorKind::unexpected_token, name, "expected prefix label ending in ':'");
        std::string label = take().prefix_part;
        const Token& iri = current();
        if (iri.kind != TokenKind::iriref)
            fail(ParseErrorKind::unexpected_token, iri, "expected namespace IRI");
        document_.prefixes.declare(std::move(label), rdf::Iri{take().value});
        if (!sparql_style) expect(TokenKind::dot, "'.'");
    }

    void triples() {
        const TokenKind first_kind = current().kind;
        const Token& tok = current();
        rdf::Term subject = [&]() -> rdf::Term {
            switch (tok.kind) {
                case TokenKind::iriref: return rdf::Term(rdf::Iri{take().value});
                case TokenKind::pname: return rdf::Term(resolve_pname(take()));
                case TokenKind::blank_label: return labeled_blank(take().value);
                case TokenKind::open_bracket: return blank_node_property_list();
                case TokenKind::open_paren: return collection();
                case TokenKind::string:
                case TokenKind::integer:
                case TokenKind::decimal:
                    fail(ParseErrorKind::unexpected_token, tok, "a literal cannot be a subject");
                default:
                    fail(ParseErrorKind::unexpected_token, tok, "expected subject");
            }
        }();
        // `[ ... ] .` alone is a valid statement.
        if (first_kind == TokenKind::open_bracket && current().kind == TokenKind::dot) return;
        predicate_object_list(subject);
    }

    void predicate_object_list(const rdf::Term& subject) {
        while (true) {
            rdf::Term predicate = verb();
            object_list(subject, predicate);
            if (current().kind != TokenKind::semicolon) return;
            while (current().kind == TokenKind::semicolon) take();
            // Trailing ';' before '.', ']' or end of the list.
            if (current().kind == TokenKind::dot || current().kind == TokenKind::close_bracket ||
                current().kind == TokenKind::eof)
                return;
        }
    }

    rdf::Term verb() {
        const Token& tok = current();
        if (tok.kind == TokenKind::word && tok.value == "a") {
            take();
            return rdf::Term(vocab::rdf_type);
        }
        if (tok.kind == TokenKind::iriref) return rdf::Term(rdf::Iri{take().value});
        if (tok.kind == TokenKind::pname) return rdf::Term(resolve_pname(take()));
        if (tok.kind == TokenKind::eof)
            fail(ParseErrorKind::unterminated_statement, tok, "expected predicate before end of input");
        fail(ParseErrorKind::unexpected_token, tok, "expected predicate");
    }

    void object_list(const rdf::Term& subject, const rdf::Term& predicate) {
        while (true) {
            rdf::Term obj = object();
            emit(subject, predicate, obj);
            if (current().kind != TokenKind::comma) return;
            take();
        }
    }

    rdf::Term object() {
        const Token& tok = current();
        switch (tok.kind) {
            case TokenKind::iriref: return rdf::Term(rdf::Iri{take().value});
            case TokenKind::pname: return rdf::Term(resolve_pname(take()));
            case TokenKind::blank_label: return labeled_blank(take().value);
            case TokenKind::open_bracket: return blank_node_property_list();
            case TokenKind::open_paren: return collection();
            case TokenKind::string: return literal();
            case TokenKind::integer: {
                Token t = take();
                return rdf::Term::literal(t.value, vocab::xsd_integer);
            }
            case TokenKind::decimal: {
                Token t = take();
                return rdf::Term::literal(t.value, vocab::xsd_decimal);
            }
            case TokenKind::eof:
                fail(ParseErrorKind::unterminated_statement, tok, "expected object before end of input");
            default:
                fail(ParseErrorKind::unexpected_token, tok, "expected object");
        }
    }

    rdf::Term literal() {
        Token str = take();
        if (current().kind == TokenKind::at_word) {
            Token tag = take();
            if (!valid_langtag(tag.value))
                fail(ParseErrorKind::bad_literal, tag, "invalid language tag '" + tag.value + "'");
            return rdf::Term::lang_literal(str.value, tag.value);
        }
        if (current().kind == TokenKind::carets) {
            take();
            const Token& dt = current();
            if (dt.kind == TokenKind::iriref) return rdf::Term::literal(str.value, rdf::Iri{take().value});
            if (dt.kind == TokenKind::pname) return rdf::Term::literal(str.value, resolve_pname(take()));
            fail(ParseErrorKind::unexpected_token, dt, "expected datatype IRI after '^^'");
        }
        return rdf::Term::string_literal(str.value);
    }

    static bool valid_langtag(const std::string& tag) {
        bool in_subtag = false;
        bool first_group = true;
        if (tag.empty()) return false;
        for (std::size_t i = 0; i < tag.size(); ++i) {
            char c = tag[i];
            if (c == '-') {
                if (!in_subtag) return false;
                in_subtag = false;
                first_group = false;
            } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                       (!first_group && std::isdigit(static_cast<unsigned char>(c)))) {
                in_subtag = true;
            } else {
                return false;
            }
        }
        return in_subtag;
    }

    rdf::Term blank_node_property_list() {
        take();  // '['
        rdf::Term node = fresh_blank();
        if (current().kind == TokenKind::close_bracket) {
            take();
            return node;
        }
        predicate_object_list(node);
        if (current().kind == TokenKind::eof)
            fail(ParseErrorKind::unterminated_statement, current(), "expected ']' before end of input");
        expect(TokenKind::close_bracket, "']'");
        return node;
    }

    rdf::Term collection() {
        take();  // '('
        std::vector<rdf::Term> members;
        while (current().kind != TokenKind::close_paren) {
            if (current().kind == TokenKind::eof)
                fail(ParseErrorKind::unterminated_statement, current(),
                     "expected ')' before end of input");
            members.push_back(object());
        }
        take();  // ')'
        rdf::Term head(vocab::rdf_nil);
        std::vector<rdf::Term> nodes;
        nodes.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) nodes.push_back(fresh_blank());
        for (std::size_t i = 0; i < members.size(); ++i) {
            emit(nodes[i], rdf::Term(vocab::rdf_first), members[i]);
            emit(nodes[i], rdf::Term(vocab::rdf_rest),
                 i + 1 < members.size() ? nodes[i + 1] : rdf::Term(vocab::rdf_nil));
        }
        return members.empty() ? head : nodes.front();
    }
};

}  // namespace

Document parse(std::string_view text) { return Parser(text).run(); }

rdf::Iri resolve(std::string_view prefixed_name, const rdf::PrefixMap& prefixes) {
    auto colon = prefixed_name.find(':');
    if (colon == std::string_view::npos)
        throw ParseError(ParseErrorKind::unexpected_token, 1, 1,
                         "expected prefix:local, got '" + std::string(prefixed_name) + "'");
    std::string label(prefixed_name.substr(0, colon));
    auto ns = prefixes.find(label);
    if (!ns)
        throw ParseError(ParseErrorKind::undeclared_prefix, 1, 1,
                         "prefix '" + label + ":' is not declared");
    return rdf::Iri{ns->value + std::string(prefixed_name.substr(colon + 1))};
}

}  // namespace shaclgap::turtle
