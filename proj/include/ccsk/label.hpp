#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ccsk/process.hpp"

namespace ccsk {

// Path tags record the parallel / replication operators a derivation
// crossed: |L, |R and ! in the textual syntax.
enum class Tag { ParL, ParR, Bang };

struct ActCore {
    ActionLabel action;
    Key key;
    bool operator==(const ActCore&) const = default;
};

// A non-synchronising enhanced keyed label: a path followed by alpha[k].
// The two components of a synchronisation are always of this shape.
struct SimpleLabel {
    std::vector<Tag> path;
    ActCore core;
    bool operator==(const SimpleLabel&) const = default;
};

// <|L ... lambda[k] , |R ... 'lambda[k]>: the left path begins with |L,
// the right with |R, both carry the same key and complementary actions.
struct SyncCore {
    SimpleLabel left;
    SimpleLabel right;
    bool operator==(const SyncCore&) const = default;
};

struct EnhancedLabel {
    std::vector<Tag> path;
    std::variant<ActCore, SyncCore> core;
    bool operator==(const EnhancedLabel&) const = default;

    bool is_sync() const { return std::holds_alternative<SyncCore>(core); }
    const ActCore& act() const { return std::get<ActCore>(core); }
    const SyncCore& sync() const { return std::get<SyncCore>(core); }
};

EnhancedLabel simple_label(std::vector<Tag> path, ActionLabel a, Key k);
EnhancedLabel sync_label(std::vector<Tag> path, SimpleLabel left, SimpleLabel right);
EnhancedLabel with_tag(Tag t, EnhancedLabel inner);
SimpleLabel as_simple(const EnhancedLabel& l);  // throws on sync cores
EnhancedLabel as_enhanced(const SimpleLabel& l);

// ell: the action of a label; synchronisations map to tau.
ActionLabel action_of(const EnhancedLabel& l);

// kay: the key carried by the core (both sides of a sync share it).
Key key_of(const EnhancedLabel& l);

// sigma: replaces every ! tag by |R, in the path and inside sync
// components. Idempotent.
EnhancedLabel collapse(const EnhancedLabel& l);

bool has_bang(const EnhancedLabel& l);

std::string to_string(Tag t);
std::string to_string(const EnhancedLabel& l);

// Parses the textual label syntax, e.g. "|L |R a[3]", "! < |L a[0] , |R 'a[0] >".
EnhancedLabel parse_label(const std::string& text);

// Deterministic total order (used for canonical trace forms).
bool label_less(const EnhancedLabel& a, const EnhancedLabel& b);

}  // namespace ccsk
