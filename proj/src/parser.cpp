#include "ccsk/parser.hpp"

#include <cctype>

namespace ccsk {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "' (" + what + ")");
    }
    bool name_ahead() {
        char c = peek();
        return c >= 'a' && c <= 'z';
    }
    std::string name() {
        skip_ws();
        if (!name_ahead()) throw ParseError(pos, "expected a name");
        std::size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')
                ++pos;
            else
                break;
        }
        return text.substr(start, pos - start);
    }
    unsigned natural() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "expected a key index");
        unsigned v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned>(text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

ProcessPtr parse_par(Cursor& c);

ProcessPtr parse_atom(Cursor& c) {
    ProcessPtr p;
    if (c.accept('0')) {
        p = nil();
    } else if (c.accept('(')) {
        p = parse_par(c);
        c.expect(')', "closing parenthesis");
    } else {
        throw ParseError(c.pos, "expected '0' or '('");
    }
    while (c.accept('\\')) {
        std::size_t at = c.pos;
        std::string n = c.name();
        if (n == "tau") throw ParseError(at, "tau is not a restrictable name");
        p = restrict_name(p, n);
    }
    return p;
}

ProcessPtr parse_prefixed(Cursor& c) {
    char head = c.peek();
    if (head == '0' || head == '(') return parse_atom(c);

    ActionLabel a;
    std::size_t at = c.pos;
    if (c.accept('\'')) {
        a = act_coname(c.name());
    } else {
        a = act_name(c.name());
    }
    if (a.name == "tau")
        throw ParseError(at, "tau cannot be used as a prefix");

    if (c.accept('[')) {
        Key k;
        k.index = c.natural();
        k.marked = c.accept('!');
        c.expect(']', "key bracket");
        if (c.accept('.')) return keyed_prefix(a, k, parse_prefixed(c));
        return keyed_prefix(a, k, nil());
    }
    if (c.accept('.')) return prefix(a, parse_prefixed(c));
    return prefix(a, nil());
}

ProcessPtr parse_bang(Cursor& c) {
    if (c.accept('!')) return bang(parse_bang(c));
    return parse_prefixed(c);
}

ProcessPtr parse_sum(Cursor& c) {
    ProcessPtr p = parse_bang(c);
    while (c.accept('+')) p = sum(p, parse_bang(c));
    return p;
}

ProcessPtr parse_par(Cursor& c) {
    ProcessPtr p = parse_sum(c);
    while (c.accept('|')) p = par(p, parse_sum(c));
    return p;
}

// Precedence levels used by both the parser shape and the printer.
constexpr int kPar = 0, kSum = 1, kBang = 2, kPrefix = 3, kAtom = 4;

int precedence(const Process& p) {
    switch (p.kind) {
        case Process::Kind::Par: return kPar;
        case Process::Kind::Sum: return kSum;
        case Process::Kind::Bang: return kBang;
        case Process::Kind::Prefix:
        case Process::Kind::KeyedPrefix: return kPrefix;
        case Process::Kind::Nil:
        case Process::Kind::Restrict: return kAtom;
    }
    return kAtom;
}

void print_at(const ProcessPtr& p, int level, std::string& out) {
    bool parens = precedence(*p) < level;
    if (parens) out += '(';
    switch (p->kind) {
        case Process::Kind::Nil:
            out += '0';
            break;
        case Process::Kind::Prefix:
            out += to_string(p->action);
            out += '.';
            print_at(p->left, kPrefix, out);
            break;
        case Process::Kind::KeyedPrefix:
            out += to_string(p->action);
            out += '[';
            out += to_string(p->key);
            out += "].";
            print_at(p->left, kPrefix, out);
            break;
        case Process::Kind::Sum:
            print_at(p->left, kSum, out);
            out += " + ";
            print_at(p->right, kSum + 1, out);
            break;
        case Process::Kind::Par:
            print_at(p->left, kPar, out);
            out += " | ";
            print_at(p->right, kPar + 1, out);
            break;
        case Process::Kind::Restrict:
            print_at(p->left, kAtom, out);
            out += '\\';
            out += p->restricted;
            break;
        case Process::Kind::Bang:
            out += '!';
            print_at(p->left, kBang, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

ProcessPtr parse(const std::string& text) {
    Cursor c{text};
    ProcessPtr p = parse_par(c);
    if (!c.eof()) throw ParseError(c.pos, "trailing input");
    for (const auto& issue : validate(p)) {
        if (issue.code == ValidationIssue::Code::KeyOverused ||
            issue.code == ValidationIssue::Code::KeyPairNotComplementary)
            throw ParseError(text.size(), issue.detail);
    }
    return p;
}

std::string print(const ProcessPtr& p) {
    std::string out;
    print_at(p, kPar, out);
    return out;
}

}  // namespace ccsk
