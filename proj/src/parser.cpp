#include "mltmf/parser.hpp"

#include <cctype>
#include <sstream>

#include "mltmf/errors.hpp"
#include "mltmf/validate.hpp"

namespace mltmf {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Tilde, Amp, Pipe, Arrow, Iff, Forall, Exists, True, False, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::Tilde: return "'~'";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Arrow: return "'->'";
        case Tok::Iff: return "'<->'";
        case Tok::Forall: return "'forall'";
        case Tok::Exists: return "'exists'";
        case Tok::True: return "'true'";
        case Tok::False: return "'false'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            const SourcePos pos{line_, col_};
            if (at_end()) {
                out.push_back({Tok::End, "", pos});
                return out;
            }
            const char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    id += advance();
                Tok k = Tok::Ident;
                if (id == "forall") k = Tok::Forall;
                else if (id == "exists") k = Tok::Exists;
                else if (id == "true") k = Tok::True;
                else if (id == "false") k = Tok::False;
                out.push_back({k, id, pos});
                continue;
            }
            switch (c) {
                case '(': advance(); out.push_back({Tok::LParen, "(", pos}); break;
                case ')': advance(); out.push_back({Tok::RParen, ")", pos}); break;
                case ',': advance(); out.push_back({Tok::Comma, ",", pos}); break;
                case '.': advance(); out.push_back({Tok::Dot, ".", pos}); break;
                case '~': advance(); out.push_back({Tok::Tilde, "~", pos}); break;
                case '&': advance(); out.push_back({Tok::Amp, "&", pos}); break;
                case '|': advance(); out.push_back({Tok::Pipe, "|", pos}); break;
                case '-':
                    advance();
                    if (at_end() || peek() != '>')
                        throw ParseError(Errc::Syntax, pos, "stray '-', expected '->'");
                    advance();
                    out.push_back({Tok::Arrow, "->", pos});
                    break;
                case '<':
                    advance();
                    if (!match('-') || at_end() || peek() != '>')
                        throw ParseError(Errc::Syntax, pos, "stray '<', expected '<->'");
                    advance();
                    out.push_back({Tok::Iff, "<->", pos});
                    break;
                default: {
                    std::ostringstream msg;
                    msg << "unexpected character '" << c << "'";
                    throw ParseError(Errc::Syntax, pos, msg.str());
                }
            }
        }
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    char advance() {
        const char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    bool match(char c) {
        if (at_end() || peek() != c) return false;
        advance();
        return true;
    }
    void skip_ws() {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    const std::string& text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

    Wff parse() {
        Wff f = parse_iff();
        expect(Tok::End);
        return f;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& advance() { return toks_[i_++]; }
    bool check(Tok k) const { return cur().kind == k; }
    bool match(Tok k) {
        if (!check(k)) return false;
        ++i_;
        return true;
    }
    Token expect(Tok k) {
        if (!check(k)) {
            std::ostringstream msg;
            msg << "expected " << tok_name(k) << ", found " << tok_name(cur().kind);
            throw ParseError(Errc::Syntax, cur().pos, msg.str());
        }
        return advance();
    }

    Wff parse_iff() {
        Wff lhs = parse_implies();
        if (match(Tok::Iff)) return liff(std::move(lhs), parse_iff());
        return lhs;
    }

    Wff parse_implies() {
        Wff lhs = parse_or();
        if (match(Tok::Arrow)) return implies(std::move(lhs), parse_implies());
        return lhs;
    }

    Wff parse_or() {
        Wff lhs = parse_and();
        if (match(Tok::Pipe)) return lor(std::move(lhs), parse_or());
        return lhs;
    }

    Wff parse_and() {
        Wff lhs = parse_unary();
        if (match(Tok::Amp)) return land(std::move(lhs), parse_and());
        return lhs;
    }

    Wff parse_unary() {
        if (match(Tok::Tilde)) return lnot(parse_unary());
        if (check(Tok::Forall) || check(Tok::Exists)) {
            const bool universal = advance().kind == Tok::Forall;
            const Token name = expect(Tok::Ident);
            expect(Tok::Dot);
            Wff body = parse_iff();
            const BinderSort sort = sig_.is_function(name.text)  ? BinderSort::Function
                                    : sig_.is_predicate(name.text) ? BinderSort::Predicate
                                                                   : BinderSort::Variable;
            if (sort == BinderSort::Variable && sig_.is_constant(name.text))
                throw ParseError(Errc::Syntax, name.pos,
                                 "cannot bind constant symbol '" + name.text + "'");
            return universal ? forall(name.text, sort, std::move(body))
                             : exists(name.text, sort, std::move(body));
        }
        return parse_primary();
    }

    Wff parse_primary() {
        if (match(Tok::LParen)) {
            Wff f = parse_iff();
            expect(Tok::RParen);
            return f;
        }
        if (match(Tok::True)) return verum();
        if (match(Tok::False)) return falsum();
        if (check(Tok::Ident)) {
            const Token head = advance();
            if (!sig_.is_predicate(head.text)) {
                if (sig_.is_function(head.text) || sig_.is_constant(head.text))
                    throw ParseError(Errc::Syntax, head.pos,
                                     "'" + head.text + "' names a term, not a formula");
                throw ParseError(Errc::UnknownSymbol, head.pos,
                                 "unknown predicate '" + head.text + "'");
            }
            std::vector<Term> args = parse_args(head);
            check_arity(head, sig_.predicate_arity(head.text), args.size());
            return atom(head.text, std::move(args));
        }
        std::ostringstream msg;
        msg << "expected a formula, found " << tok_name(cur().kind);
        throw ParseError(Errc::Syntax, cur().pos, msg.str());
    }

    std::vector<Term> parse_args(const Token& head) {
        expect(Tok::LParen);
        std::vector<Term> args;
        args.push_back(parse_term());
        while (match(Tok::Comma)) args.push_back(parse_term());
        expect(Tok::RParen);
        (void)head;
        return args;
    }

    Term parse_term() {
        const Token head = expect(Tok::Ident);
        if (sig_.is_function(head.text)) {
            std::vector<Term> args = parse_args(head);
            check_arity(head, sig_.function_arity(head.text), args.size());
            return fn_app(head.text, std::move(args));
        }
        if (sig_.is_predicate(head.text)) {
            std::vector<Term> args = parse_args(head);
            check_arity(head, sig_.predicate_arity(head.text), args.size());
            return pred_term(head.text, std::move(args));
        }
        if (check(Tok::LParen)) {
            const Errc code = sig_.is_constant(head.text) ? Errc::Syntax : Errc::UnknownSymbol;
            throw ParseError(code, head.pos,
                             "'" + head.text + "' is not a function or predicate, cannot be applied");
        }
        return sig_.is_constant(head.text) ? constant(head.text) : variable(head.text);
    }

    void check_arity(const Token& head, int declared, std::size_t got) {
        if (static_cast<std::size_t>(declared) != got) {
            std::ostringstream msg;
            msg << "'" << head.text << "' expects " << declared << " argument(s), got " << got;
            throw ParseError(Errc::ArityMismatch, head.pos, msg.str());
        }
    }

    std::vector<Token> toks_;
    const Signature& sig_;
    std::size_t i_ = 0;
};

}  // namespace

Wff parse_formula(const std::string& text, const Signature& sig) {
    Lexer lexer(text);
    Parser parser(lexer.run(), sig);
    Wff f = parser.parse();
    // Arity and symbol classes were enforced token by token; the occurs-check
    // needs the finished tree.
    const ValidationReport report = validate_wff(f, sig);
    for (const auto& finding : report.findings) {
        if (finding.kind == FindingKind::SelfApplication)
            throw ParseError(Errc::SelfApplication, SourcePos{},
                             "symbol '" + finding.symbol + "' applied to itself at " + finding.path);
    }
    return f;
}

std::vector<Wff> parse_formula_lines(const std::string& text, const Signature& sig) {
    std::vector<Wff> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_formula(body, sig));
    }
    return out;
}

}  // namespace mltmf
