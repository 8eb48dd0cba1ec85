#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace axplan {

// Ground normal logic program. Atoms are dense ids into atom_names.
// Rules are head :- pos..., not neg...; a fact is a rule with empty body.
struct Rule {
    int head = -1;
    std::vector<int> pos;
    std::vector<int> neg;
};

using Interp = std::vector<bool>;

class LogicProgram {
public:
    int add_atom(const std::string &name);
    int atom(const std::string &name) const; // -1 if unknown
    int num_atoms() const { return static_cast<int>(atom_names_.size()); }
    const std::string &atom_name(int a) const { return atom_names_[a]; }

    void add_rule(int head, std::vector<int> pos, std::vector<int> neg);
    void add_fact(int head) { add_rule(head, {}, {}); }
    const std::vector<Rule> &rules() const { return rules_; }

    bool has_negation() const;

    // One statement per line: "a :- b, not c." and "a." for facts.
    std::string to_text() const;

private:
    std::vector<std::string> atom_names_;
    std::vector<Rule> rules_;
};

bool body_satisfied(const Rule &rule, const Interp &m);

// Gelfond-Lifschitz reduct: drops rules whose negative body intersects m,
// strips negative bodies from the rest. Atom table is shared.
LogicProgram reduct(const LogicProgram &p, const Interp &m);

// Minimal model of a negation-free program; throws NotNegationFree otherwise.
Interp least_model(const LogicProgram &p);

// m is a model: every rule with satisfied body has a true head.
bool is_model(const LogicProgram &p, const Interp &m);

// m equals the least model of reduct(p, m).
bool is_answer_set(const LogicProgram &p, const Interp &m);

// All answer sets, ordered lexicographically as sorted atom-id sequences.
// Throws TooLarge beyond the exhaustive-subset cap of 20 atoms.
std::vector<Interp> enumerate_answer_sets(const LogicProgram &p);

// m is a model and every true atom has a rule with that head whose body m
// satisfies.
bool is_supported(const LogicProgram &p, const Interp &m);

// Level mapping: levels[a] >= 1, positive body atoms at most the head level,
// negative body atoms strictly below it.
bool is_stratification(const LogicProgram &p, const std::vector<int> &levels);

// Constructs a stratification witness or returns nullopt if none exists.
std::optional<std::vector<int>> find_stratification(const LogicProgram &p);

// Iterated fixpoint along a stratification; throws NotStratified if none.
Interp perfect_model(const LogicProgram &p);

// Positive dependency graph: one edge per (rule head, positive body atom).
struct DependencyGraph {
    std::vector<std::vector<int>> edges; // edges[a] = positive body atoms of rules with head a
    std::vector<int> scc_index;          // atom -> component id
    std::vector<std::vector<int>> sccs;  // components in dependency order, members sorted

    bool same_scc(int a, int b) const { return scc_index[a] == scc_index[b]; }
    // Edge list as sorted (head, body) pairs, for structural comparisons.
    std::vector<std::pair<int, int>> edge_pairs() const;
};

DependencyGraph dependency_graph(const LogicProgram &p);

// Indices into p.rules() of the defining rules of atom a, split by whether
// the positive body stays inside a's strongly connected component.
struct RuleClasses {
    std::vector<int> def;
    std::vector<int> ext;
    std::vector<int> internal;
};

RuleClasses rule_classes(const LogicProgram &p, const DependencyGraph &dg, int atom);

// Positive body atoms of rule r that share a component with atom a.
std::vector<int> internal_support_set(const LogicProgram &p, const DependencyGraph &dg,
                                      int atom, int rule_index);

// True iff some level ranking certifies m: every true atom has a support rule
// whose positive body ranks strictly below it. Requires is_supported(p, m);
// throws NotSupported otherwise, TooLarge beyond 15 true atoms.
bool level_ranking_exists(const LogicProgram &p, const Interp &m);

// Perfect model plus, for every true atom, the round in which the fixpoint of
// its own component first derived it (0-based, < component size). False atoms
// report round 0. Used to seed rank variables.
struct RoundedModel {
    Interp model;
    std::vector<int> rounds;
};

RoundedModel perfect_model_with_rounds(const LogicProgram &p);

} // namespace axplan
