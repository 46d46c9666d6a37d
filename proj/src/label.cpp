#include "ccsk/label.hpp"

#include <cctype>
#include <stdexcept>

namespace ccsk {

EnhancedLabel simple_label(std::vector<Tag> path, ActionLabel a, Key k) {
    EnhancedLabel l;
    l.path = std::move(path);
    l.core = ActCore{std::move(a), k};
    return l;
}

EnhancedLabel sync_label(std::vector<Tag> path, SimpleLabel left, SimpleLabel right) {
    EnhancedLabel l;
    l.path = std::move(path);
    l.core = SyncCore{std::move(left), std::move(right)};
    return l;
}

EnhancedLabel with_tag(Tag t, EnhancedLabel inner) {
    inner.path.insert(inner.path.begin(), t);
    return inner;
}

SimpleLabel as_simple(const EnhancedLabel& l) {
    if (l.is_sync()) throw std::invalid_argument("sync label where a simple one is required");
    return SimpleLabel{l.path, l.act()};
}

EnhancedLabel as_enhanced(const SimpleLabel& l) {
    EnhancedLabel e;
    e.path = l.path;
    e.core = l.core;
    return e;
}

ActionLabel action_of(const EnhancedLabel& l) {
    if (l.is_sync()) return act_tau();
    return l.act().action;
}

Key key_of(const EnhancedLabel& l) {
    if (l.is_sync()) return l.sync().left.core.key;
    return l.act().key;
}

namespace {

std::vector<Tag> collapse_path(const std::vector<Tag>& path) {
    std::vector<Tag> out;
    out.reserve(path.size());
    for (Tag t : path) out.push_back(t == Tag::Bang ? Tag::ParR : t);
    return out;
}

}  // namespace

EnhancedLabel collapse(const EnhancedLabel& l) {
    EnhancedLabel out;
    out.path = collapse_path(l.path);
    if (l.is_sync()) {
        const auto& s = l.sync();
        out.core = SyncCore{SimpleLabel{collapse_path(s.left.path), s.left.core},
                            SimpleLabel{collapse_path(s.right.path), s.right.core}};
    } else {
        out.core = l.act();
    }
    return out;
}

bool has_bang(const EnhancedLabel& l) {
    auto in = [](const std::vector<Tag>& path) {
        for (Tag t : path)
            if (t == Tag::Bang) return true;
        return false;
    };
    if (in(l.path)) return true;
    if (l.is_sync()) return in(l.sync().left.path) || in(l.sync().right.path);
    return false;
}

std::string to_string(Tag t) {
    switch (t) {
        case Tag::ParL: return "|L";
        case Tag::ParR: return "|R";
        case Tag::Bang: return "!";
    }
    return {};
}

namespace {

void render_simple(const SimpleLabel& l, std::string& out) {
    for (Tag t : l.path) {
        out += to_string(t);
        out += ' ';
    }
    out += to_string(l.core.action);
    out += '[';
    out += to_string(l.core.key);
    out += ']';
}

}  // namespace

std::string to_string(const EnhancedLabel& l) {
    std::string out;
    for (Tag t : l.path) {
        out += to_string(t);
        out += ' ';
    }
    if (l.is_sync()) {
        out += "< ";
        render_simple(l.sync().left, out);
        out += " , ";
        render_simple(l.sync().right, out);
        out += " >";
    } else {
        render_simple(SimpleLabel{{}, l.act()}, out);
    }
    return out;
}

namespace {

struct LabelCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("label syntax: expected '" + std::string(1, c) +
                                        "' at " + std::to_string(pos));
    }

    bool accept_tag(Tag& out) {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '|') {
            if (text[pos + 1] == 'L') {
                pos += 2;
                out = Tag::ParL;
                return true;
            }
            if (text[pos + 1] == 'R') {
                pos += 2;
                out = Tag::ParR;
                return true;
            }
        }
        if (pos < text.size() && text[pos] == '!') {
            ++pos;
            out = Tag::Bang;
            return true;
        }
        return false;
    }

    ActCore act_core() {
        skip_ws();
        ActionLabel a;
        if (accept('\'')) {
            a = act_coname(name());
        } else {
            std::string n = name();
            a = (n == "tau") ? act_tau() : act_name(n);
        }
        expect('[');
        Key k;
        k.index = natural();
        k.marked = accept('!');
        expect(']');
        return ActCore{a, k};
    }

    std::string name() {
        skip_ws();
        if (pos >= text.size() || text[pos] < 'a' || text[pos] > 'z')
            throw std::invalid_argument("label syntax: expected a name at " + std::to_string(pos));
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
            throw std::invalid_argument("label syntax: expected a key at " + std::to_string(pos));
        unsigned v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + static_cast<unsigned>(text[pos++] - '0');
        return v;
    }

    SimpleLabel simple() {
        SimpleLabel l;
        Tag t;
        while (peek() != '<' && accept_tag(t)) l.path.push_back(t);
        l.core = act_core();
        return l;
    }
};

}  // namespace

EnhancedLabel parse_label(const std::string& text) {
    LabelCursor c{text};
    EnhancedLabel l;
    Tag t;
    while (c.peek() != '<' && c.accept_tag(t)) l.path.push_back(t);
    if (c.accept('<')) {
        SimpleLabel left = c.simple();
        c.expect(',');
        SimpleLabel right = c.simple();
        c.expect('>');
        if (left.path.empty() || left.path.front() != Tag::ParL || right.path.empty() ||
            right.path.front() != Tag::ParR)
            throw std::invalid_argument("label syntax: sync components must start with |L and |R");
        l.core = SyncCore{std::move(left), std::move(right)};
    } else {
        l.core = c.act_core();
    }
    c.skip_ws();
    if (c.pos != text.size())
        throw std::invalid_argument("label syntax: trailing input at " + std::to_string(c.pos));
    return l;
}

bool label_less(const EnhancedLabel& a, const EnhancedLabel& b) {
    return to_string(a) < to_string(b);
}

}  // namespace ccsk
