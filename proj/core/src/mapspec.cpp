#include "dynatomic/mapspec.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace dynatomic {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Token::Kind::End;
            cur_.text.clear();
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                bump();
            }
            // A '/' directly between digit runs is part of one rational literal.
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t save = pos_;
                int sline = line_, scol = col_;
                bump();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    num += '/';
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                        num += s_[pos_];
                        bump();
                    }
                } else {
                    pos_ = save;
                    line_ = sline;
                    col_ = scol;
                    throw ParseError("'/' is only valid inside a rational literal", line_, col_);
                }
            }
            cur_.kind = Token::Kind::Number;
            cur_.text = num;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_];
                bump();
            }
            cur_.kind = Token::Kind::Ident;
            cur_.text = id;
            return;
        }
        switch (c) {
            case '+': cur_.kind = Token::Kind::Plus; break;
            case '-': cur_.kind = Token::Kind::Minus; break;
            case '*': cur_.kind = Token::Kind::Star; break;
            case '^': cur_.kind = Token::Kind::Caret; break;
            case '(': cur_.kind = Token::Kind::LParen; break;
            case ')': cur_.kind = Token::Kind::RParen; break;
            case ',': cur_.kind = Token::Kind::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        cur_.text = c;
        bump();
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// Precedence: ^ above unary minus above * above +/-; ^ right-associative.
class Parser {
public:
    Parser(Lexer& lex, const Field& field, const std::vector<std::string>& vars)
        : lex_(lex), field_(field), vars_(vars) {
        for (size_t i = 0; i < vars.size(); ++i) index_.emplace(vars[i], static_cast<int>(i));
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.take();
                acc = acc + parse_term();
            } else if (k == Token::Kind::Minus) {
                lex_.take();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

private:
    Poly parse_term() {
        Poly acc = parse_unary();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            acc = acc * parse_unary();
        }
        return acc;
    }

    Poly parse_unary() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return -parse_unary();
        }
        return parse_power();
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        Token caret = lex_.take();
        Token e = lex_.peek();
        if (e.kind != Token::Kind::Number || e.text.find('/') != std::string::npos) {
            throw ParseError("exponent must be a nonnegative integer literal", caret.line, caret.col);
        }
        lex_.take();
        long exp = 0;
        try {
            exp = std::stol(e.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", e.line, e.col);
        }
        // Right associativity: z^2^3 = z^(2^3).
        if (lex_.peek().kind == Token::Kind::Caret) {
            throw ParseError("chained '^' requires parenthesized base; exponents are integer literals",
                             lex_.peek().line, lex_.peek().col);
        }
        return base.pow(exp);
    }

    Poly parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number: {
                Rational q = parse_rational(t.text);
                return Poly::constant(field_, static_cast<int>(vars_.size()),
                                      FieldElement::from_rational(field_, q));
            }
            case Token::Kind::Ident: {
                auto it = index_.find(t.text);
                if (it == index_.end()) {
                    throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
                }
                return Poly::variable(field_, static_cast<int>(vars_.size()), it->second);
            }
            case Token::Kind::LParen: {
                Poly inner = parse_expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) {
                    throw ParseError("expected ')'", close.line, close.col);
                }
                return inner;
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.line, t.col);
        }
    }

    Lexer& lex_;
    const Field& field_;
    const std::vector<std::string>& vars_;
    std::map<std::string, int> index_;
};

std::vector<std::string> collect_identifiers(const std::string& text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                id += text[i++];
            }
            if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Field parse_field_descriptor(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("field descriptor required (e.g. Q or F5)");
    if (text == "Q") return Field::Q();
    if (text[0] == 'F') {
        std::string rest = text.substr(1);
        size_t caret = rest.find('^');
        std::string ptext = (caret == std::string::npos) ? rest : rest.substr(0, caret);
        std::string ktext = (caret == std::string::npos) ? "1" : rest.substr(caret + 1);
        try {
            unsigned long long p = std::stoull(ptext);
            int k = std::stoi(ktext);
            return Field::GF(p, k);
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::invalid_argument("malformed field descriptor '" + text + "' (expected Q, F<p>, or F<p>^<k>)");
}

std::string render_poly(const Poly& p, const std::vector<std::string>& vars) {
    return p.to_string(vars);
}

std::string MapSpec::render() const {
    std::ostringstream os;
    for (size_t i = 0; i < coords_canonical.size(); ++i) {
        if (i) os << ", ";
        os << coords_canonical[i];
    }
    return os.str();
}

MapSpec parse_map(const std::string& text, const std::string& field_text,
                  const std::vector<std::string>& vars, const std::string& model) {
    MapSpec spec;
    spec.field_text = field_text;
    spec.field = parse_field_descriptor(field_text);
    spec.model = model;
    if (model != "affine" && model != "P1") {
        throw std::invalid_argument("model must be 'affine' or 'P1'");
    }

    auto parts = split_top_level(text);
    spec.vars = vars;
    if (spec.vars.empty()) {
        auto ids = collect_identifiers(text);
        if (model == "P1") {
            spec.vars = ids; // both chart variables must appear
        } else if (parts.size() == 1) {
            if (ids.size() != 1) {
                throw std::invalid_argument(
                    "cannot infer the variable: declare --vars explicitly");
            }
            spec.vars = ids;
        } else {
            throw std::invalid_argument("multivariate maps need an explicit --vars list");
        }
    }
    for (const auto& v : spec.vars) {
        if (v == "t") throw std::invalid_argument("'t' is reserved for the deformation parameter");
    }
    if (model == "P1") {
        if (parts.size() != 2 || spec.vars.size() != 2) {
            throw std::invalid_argument("P1 maps take two homogeneous coordinates in two variables");
        }
    } else if (parts.size() != spec.vars.size()) {
        throw std::invalid_argument("coordinate count (" + std::to_string(parts.size()) +
                                    ") must equal variable count (" +
                                    std::to_string(spec.vars.size()) + ")");
    }

    std::vector<Poly> coords;
    for (const auto& part : parts) {
        Lexer lex(part);
        Parser parser(lex, spec.field, spec.vars);
        Poly p = parser.parse_expr();
        Token rest = lex.take();
        if (rest.kind != Token::Kind::End) {
            throw ParseError("trailing input after expression", rest.line, rest.col);
        }
        coords.push_back(std::move(p));
    }
    if (model == "P1") {
        spec.map = PolyMap::projective(coords[0], coords[1]);
    } else {
        spec.map = PolyMap::affine(coords);
    }
    for (const auto& c : spec.map->coords()) {
        spec.coords_canonical.push_back(render_poly(c, spec.vars));
    }
    return spec;
}

} // namespace dynatomic
