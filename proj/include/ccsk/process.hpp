#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ccsk {

// An action is a name, a co-name or the internal action tau.
// Co-names are written with a leading apostrophe ('a); complement is an
// involution on names/co-names and is undefined on tau.
enum class ActKind { Name, CoName, Tau };

struct ActionLabel {
    ActKind kind = ActKind::Tau;
    std::string name;  // empty for tau

    bool operator==(const ActionLabel&) const = default;
    bool is_tau() const { return kind == ActKind::Tau; }
};

ActionLabel act_name(std::string n);
ActionLabel act_coname(std::string n);
ActionLabel act_tau();

// complement('a) = a, complement(a) = 'a; throws on tau.
ActionLabel complement(const ActionLabel& a);

std::string to_string(const ActionLabel& a);

// Keys identify executed prefixes. A key compares equal only if both the
// index and the replication mark agree; side conditions of the LTS compare
// indices alone (the mark is an annotation on the occurrence).
struct Key {
    unsigned index = 0;
    bool marked = false;

    bool operator==(const Key&) const = default;
    bool operator<(const Key& o) const {
        return index != o.index ? index < o.index : marked < o.marked;
    }
};

std::string to_string(const Key& k);

// CCSK process terms, extended with replication. Immutable; shared
// subtrees are fine since nothing ever mutates a node.
struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

struct Process {
    enum class Kind { Nil, Prefix, KeyedPrefix, Sum, Par, Restrict, Bang };

    Kind kind = Kind::Nil;
    ActionLabel action;       // Prefix, KeyedPrefix
    Key key;                  // KeyedPrefix
    std::string restricted;   // Restrict
    ProcessPtr left;          // child (Prefix, KeyedPrefix, Restrict, Bang) or left operand
    ProcessPtr right;         // right operand (Sum, Par)
};

ProcessPtr nil();
ProcessPtr prefix(ActionLabel a, ProcessPtr p);
ProcessPtr keyed_prefix(ActionLabel a, Key k, ProcessPtr p);
ProcessPtr sum(ProcessPtr l, ProcessPtr r);
ProcessPtr par(ProcessPtr l, ProcessPtr r);
ProcessPtr restrict_name(ProcessPtr p, std::string name);
ProcessPtr bang(ProcessPtr p);

bool equal(const Process& a, const Process& b);
bool equal(const ProcessPtr& a, const ProcessPtr& b);

// All keys occurring in p, with multiplicity, marks preserved.
std::vector<Key> keys(const ProcessPtr& p);

// Key indices occurring in p (used by freshness side conditions).
std::set<unsigned> key_indices(const ProcessPtr& p);

// Smallest natural number whose index does not occur in p.
unsigned min_fresh_index(const ProcessPtr& p);

// std(p): no keys at all.
bool is_standard(const ProcessPtr& p);

// Marks every keyed prefix (idempotent). Used on spawned replica copies.
ProcessPtr mark_all(const ProcessPtr& p);

// Clears every mark (idempotent, unmark_all . mark_all = unmark_all).
ProcessPtr unmark_all(const ProcessPtr& p);

// Removes the first occurrence (leftmost traversal) of the keyed prefix
// alpha[k]. Guarded subterms beta.X are returned unchanged; once the
// occurrence is found no recursion continues past it.
ProcessPtr remove_keyed(const ProcessPtr& p, const ActionLabel& alpha, const Key& k);

// Removes both halves of a synchronisation pair: for non-tau alpha,
// remove_keyed(alpha[k]) after remove_keyed('alpha[k]); for tau a single
// remove_keyed(tau[k]) application.
ProcessPtr remove_key_pair(const ProcessPtr& p, const ActionLabel& alpha, const Key& k);

// Count of keyed prefixes (occurrences, not distinct indices).
std::size_t keyed_prefix_count(const ProcessPtr& p);

// Diagnostics for terms that are representable but not reachable.
struct ValidationIssue {
    enum class Code {
        KeyOverused,          // same index more than twice
        KeyPairNotComplementary,
        TauPrefix,
        BangBodyNotStandard,
        NestedBang,           // replication under replication
        SumOfNonStandard,
    };
    Code code;
    std::string detail;
};

std::vector<ValidationIssue> validate(const ProcessPtr& p);

// True iff no Bang occurs in the body of another Bang.
bool has_nested_bang(const ProcessPtr& p);

}  // namespace ccsk
