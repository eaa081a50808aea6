#include "gysin/expr.hpp"

#include "gysin/error.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

namespace gysin {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            if (i < src.size() && is_ident_start(src[i]))
                throw ParseError("malformed number", start);
            out.push_back({Tok::Int, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i]))
                ++i;
            out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        default: {
            std::string shown = std::isprint(static_cast<unsigned char>(c))
                                    ? std::string("'") + c + "'"
                                    : "byte 0x" + [&] {
                                          std::ostringstream os;
                                          os << std::hex << (static_cast<unsigned>(c) & 0xffu);
                                          return os.str();
                                      }();
            throw ParseError("unexpected character " + shown, start);
        }
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

constexpr unsigned kMaxExponent = 65535;

// "xi_12" -> 12, "t_3" -> 3; nullopt for other identifiers.
std::optional<std::pair<ExprKind, std::size_t>> variable_prefix(const std::string& ident) {
    std::size_t prefix = 0;
    ExprKind kind;
    if (ident.rfind("xi_", 0) == 0) {
        prefix = 3;
        kind = ExprKind::Xi;
    } else if (ident.rfind("t_", 0) == 0) {
        prefix = 2;
        kind = ExprKind::TVar;
    } else {
        return std::nullopt;
    }
    if (ident.size() == prefix)
        return std::nullopt;
    for (std::size_t i = prefix; i < ident.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(ident[i])))
            return std::nullopt;
    return std::make_pair(kind, prefix);
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    ExprPtr parse_all() {
        if (peek().kind == Tok::End)
            throw ParseError("empty expression", 0);
        ExprPtr e = parse_sum();
        if (peek().kind == Tok::RParen)
            throw ParseError("unbalanced parenthesis", peek().offset);
        if (peek().kind != Tok::End)
            throw ParseError("unexpected token '" + peek().text + "'", peek().offset);
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    static std::shared_ptr<Expression> node(ExprKind kind, std::size_t offset) {
        auto e = std::make_shared<Expression>();
        e->kind = kind;
        e->offset = offset;
        return e;
    }

    // An operator needs a right operand; end of input or ')' leaves it dangling.
    void require_operand(const Token& op) const {
        if (peek().kind == Tok::End || peek().kind == Tok::RParen)
            throw ParseError("dangling operator '" + op.text + "'", op.offset);
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = next();
            require_operand(op);
            auto e = node(op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub, op.offset);
            e->lhs = lhs;
            e->rhs = parse_product();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == Tok::Star) {
            const Token op = next();
            require_operand(op);
            auto e = node(ExprKind::Mul, op.offset);
            e->lhs = lhs;
            e->rhs = parse_unary();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::Minus) {
            const Token op = next();
            require_operand(op);
            auto e = node(ExprKind::Neg, op.offset);
            e->lhs = parse_unary();
            return e;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (peek().kind != Tok::Caret)
            return base;
        const Token op = next();
        require_operand(op);
        const Token& exp = peek();
        if (exp.kind != Tok::Int)
            throw ParseError("exponent must be a non-negative integer literal", exp.offset);
        const mpz_class value(exp.text);
        if (value > kMaxExponent)
            throw ParseError("exponent too large", exp.offset);
        next();
        auto e = node(ExprKind::Pow, op.offset);
        e->lhs = base;
        e->index = static_cast<unsigned>(value.get_ui());
        if (peek().kind == Tok::Caret)
            throw ParseError("chained exponents need parentheses", peek().offset);
        return e;
    }

    std::string expect_name(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            throw ParseError(std::string("expected ") + what, t.offset);
        return next().text;
    }

    void expect(Tok kind, const char* what) {
        const Token& t = peek();
        if (t.kind != kind)
            throw ParseError(std::string("expected '") + what + "'", t.offset);
        next();
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int: {
            auto e = node(ExprKind::Integer, t.offset);
            e->value = mpz_class(t.text);
            next();
            return e;
        }
        case Tok::Ident:
            return parse_identifier();
        case Tok::LParen: {
            const std::size_t open = t.offset;
            next();
            if (peek().kind == Tok::RParen)
                throw ParseError("empty parentheses", open);
            if (peek().kind == Tok::End)
                throw ParseError("unbalanced parenthesis", open);
            ExprPtr inner = parse_sum();
            if (peek().kind == Tok::End)
                throw ParseError("unbalanced parenthesis", open);
            if (peek().kind != Tok::RParen)
                throw ParseError("unexpected token '" + peek().text + "'", peek().offset);
            next();
            return inner;
        }
        case Tok::RParen:
            throw ParseError("unbalanced parenthesis", t.offset);
        case Tok::End:
            throw ParseError("expected operand", t.offset);
        default:
            throw ParseError("unexpected token '" + t.text + "'", t.offset);
        }
    }

    ExprPtr parse_identifier() {
        const Token ident = next();
        if (peek().kind == Tok::LBracket) {
            if (ident.text != "s" && ident.text != "c")
                throw ParseError("unknown function '" + ident.text + "'", ident.offset);
            next();
            const Token& idx = peek();
            if (idx.kind != Tok::Int)
                throw ParseError("class index must be a non-negative integer literal", idx.offset);
            const mpz_class value(idx.text);
            if (value > std::numeric_limits<int>::max())
                throw ParseError("class index too large", idx.offset);
            next();
            expect(Tok::RBracket, "]");
            expect(Tok::LParen, "(");
            auto e = node(ExprKind::ClassRef, ident.offset);
            e->class_kind = ident.text[0];
            e->index = static_cast<unsigned>(value.get_ui());
            e->name = expect_name("bundle name");
            expect(Tok::RParen, ")");
            return e;
        }
        if (peek().kind == Tok::LParen) {
            if (ident.text != "c1")
                throw ParseError("unknown function '" + ident.text + "'", ident.offset);
            next();
            auto e = node(ExprKind::LineC1, ident.offset);
            e->name = expect_name("line bundle name");
            expect(Tok::RParen, ")");
            return e;
        }
        if (auto var = variable_prefix(ident.text)) {
            const mpz_class value(ident.text.substr(var->second));
            if (value < 1)
                throw ParseError("variable index must be >= 1", ident.offset);
            if (value > 1000000)
                throw ParseError("variable index too large", ident.offset);
            auto e = node(var->first, ident.offset);
            e->index = static_cast<unsigned>(value.get_ui());
            return e;
        }
        auto e = node(ExprKind::Generator, ident.offset);
        e->name = ident.text;
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(ExprKind kind) {
    switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
        return 1;
    case ExprKind::Mul:
        return 2;
    case ExprKind::Neg:
        return 3;
    case ExprKind::Pow:
        return 4;
    default:
        return 5;
    }
}

void render_into(const Expression& e, int min_prec, std::string& out) {
    const int prec = precedence(e.kind);
    const bool wrap = prec < min_prec;
    if (wrap)
        out += '(';
    switch (e.kind) {
    case ExprKind::Integer:
        out += e.value.get_str();
        break;
    case ExprKind::Xi:
        out += "xi_" + std::to_string(e.index);
        break;
    case ExprKind::TVar:
        out += "t_" + std::to_string(e.index);
        break;
    case ExprKind::Generator:
        out += e.name;
        break;
    case ExprKind::ClassRef:
        out += std::string(1, e.class_kind) + "[" + std::to_string(e.index) + "](" + e.name + ")";
        break;
    case ExprKind::LineC1:
        out += "c1(" + e.name + ")";
        break;
    case ExprKind::Add:
    case ExprKind::Sub:
        render_into(*e.lhs, 1, out);
        out += e.kind == ExprKind::Add ? " + " : " - ";
        render_into(*e.rhs, 2, out);
        break;
    case ExprKind::Mul:
        render_into(*e.lhs, 2, out);
        out += '*';
        render_into(*e.rhs, 3, out);
        break;
    case ExprKind::Neg:
        out += '-';
        render_into(*e.lhs, 3, out);
        break;
    case ExprKind::Pow:
        render_into(*e.lhs, 5, out);
        out += '^' + std::to_string(e.index);
        break;
    }
    if (wrap)
        out += ')';
}

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

bool same_tree(const Expression& a, const Expression& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case ExprKind::Integer:
        return a.value == b.value;
    case ExprKind::Xi:
    case ExprKind::TVar:
        return a.index == b.index;
    case ExprKind::Generator:
    case ExprKind::LineC1:
        return a.name == b.name;
    case ExprKind::ClassRef:
        return a.class_kind == b.class_kind && a.index == b.index && a.name == b.name;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
        return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
    case ExprKind::Neg:
        return same_tree(*a.lhs, *b.lhs);
    case ExprKind::Pow:
        return a.index == b.index && same_tree(*a.lhs, *b.lhs);
    }
    return false;
}

std::string render(const Expression& e) {
    std::string out;
    render_into(e, 0, out);
    return out;
}

std::string describe(const Expression& e) {
    switch (e.kind) {
    case ExprKind::Integer:
    case ExprKind::Xi:
    case ExprKind::TVar:
    case ExprKind::Generator:
        return render(e);
    case ExprKind::ClassRef:
        return "ClassRef(" + std::string(1, e.class_kind) + "," + std::to_string(e.index) + "," +
               e.name + ")";
    case ExprKind::LineC1:
        return "C1(" + e.name + ")";
    case ExprKind::Add:
        return "Add(" + describe(*e.lhs) + ", " + describe(*e.rhs) + ")";
    case ExprKind::Sub:
        return "Sub(" + describe(*e.lhs) + ", " + describe(*e.rhs) + ")";
    case ExprKind::Mul:
        return "Mul(" + describe(*e.lhs) + ", " + describe(*e.rhs) + ")";
    case ExprKind::Neg:
        return "Neg(" + describe(*e.lhs) + ")";
    case ExprKind::Pow:
        return "Pow(" + describe(*e.lhs) + "," + std::to_string(e.index) + ")";
    }
    return "?";
}

Bindings::Bindings(RingDescriptor descriptor) : descriptor_(std::move(descriptor)) {}

Bindings& Bindings::bind_generators() {
    for (const auto& g : descriptor_.generators())
        symbols_.insert_or_assign(g.name, RingElement::generator(descriptor_, g.name));
    return *this;
}

Bindings& Bindings::bind(const std::string& name, RingElement value) {
    if (!(value.descriptor() == descriptor_))
        throw ValidationError("binding for '" + name + "' lives in another ring");
    symbols_.insert_or_assign(name, std::move(value));
    return *this;
}

Bindings& Bindings::bind_bundle(const VectorBundleData& bundle) {
    if (!(bundle.descriptor() == descriptor_))
        throw ValidationError("bundle '" + bundle.name() + "' lives in another ring");
    bundles_.insert_or_assign(bundle.name(), bundle);
    return *this;
}

Bindings& Bindings::bind_line(const std::string& name, RingElement c1) {
    if (!(c1.descriptor() == descriptor_))
        throw ValidationError("line bundle '" + name + "' lives in another ring");
    lines_.insert_or_assign(name, std::move(c1));
    return *this;
}

const RingElement* Bindings::symbol(const std::string& name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
}

const VectorBundleData* Bindings::bundle(const std::string& name) const {
    auto it = bundles_.find(name);
    return it == bundles_.end() ? nullptr : &it->second;
}

const RingElement* Bindings::line(const std::string& name) const {
    auto it = lines_.find(name);
    return it == lines_.end() ? nullptr : &it->second;
}

LaurentPoly eval(const Expression& e, const Bindings& bindings, std::size_t arity) {
    const RingDescriptor& ring = bindings.descriptor();
    switch (e.kind) {
    case ExprKind::Integer:
        return LaurentPoly::constant(arity, ring, e.value);
    case ExprKind::Xi:
    case ExprKind::TVar:
        if (e.index > arity)
            throw ValidationError(render(e) + " exceeds the number of variables (" +
                                  std::to_string(arity) + ")");
        return LaurentPoly::variable(arity, ring, e.index);
    case ExprKind::Generator: {
        const RingElement* v = bindings.symbol(e.name);
        if (!v)
            throw ValidationError("unbound symbol '" + e.name + "' at offset " +
                                  std::to_string(e.offset));
        return LaurentPoly::constant(arity, *v);
    }
    case ExprKind::ClassRef: {
        const VectorBundleData* b = bindings.bundle(e.name);
        if (!b)
            throw ValidationError("unknown bundle '" + e.name + "' at offset " +
                                  std::to_string(e.offset));
        const int i = static_cast<int>(e.index);
        return LaurentPoly::constant(arity, e.class_kind == 's' ? b->segre()[i] : b->chern(i));
    }
    case ExprKind::LineC1: {
        const RingElement* v = bindings.line(e.name);
        if (!v)
            throw ValidationError("unknown line bundle '" + e.name + "' at offset " +
                                  std::to_string(e.offset));
        return LaurentPoly::constant(arity, *v);
    }
    case ExprKind::Add:
        return eval(*e.lhs, bindings, arity) + eval(*e.rhs, bindings, arity);
    case ExprKind::Sub:
        return eval(*e.lhs, bindings, arity) - eval(*e.rhs, bindings, arity);
    case ExprKind::Mul:
        return eval(*e.lhs, bindings, arity) * eval(*e.rhs, bindings, arity);
    case ExprKind::Neg:
        return -eval(*e.lhs, bindings, arity);
    case ExprKind::Pow:
        return eval(*e.lhs, bindings, arity).pow(e.index);
    }
    throw ValidationError("malformed expression");
}

SymmetryReport check_block_symmetry(const LaurentPoly& f, const FlagSpec& spec) {
    const auto d = static_cast<std::size_t>(spec.d());
    if (f.arity() != d)
        throw ValidationError("integrand arity does not match the flag");
    SymmetryReport report;
    std::vector<std::size_t> perm(d);
    for (const auto& [first, last] : spec.blocks()) {
        for (int p = first; p < last; ++p) {
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::swap(perm[p - 1], perm[p]);
            if (!(f.permuted(perm) == f)) {
                report.symmetric = false;
                report.violations.emplace_back(p, p + 1);
            }
        }
    }
    return report;
}

SymmetryReport check_block_symmetry(const Expression& e, const Bindings& bindings,
                                    const FlagSpec& spec) {
    return check_block_symmetry(eval(e, bindings, static_cast<std::size_t>(spec.d())), spec);
}

} // namespace gysin
