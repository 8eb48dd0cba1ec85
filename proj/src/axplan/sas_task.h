#pragma once

#include <string>
#include <vector>

#include "axplan/logic_program.h"

namespace axplan {

struct Assignment {
    int var = -1;
    int value = -1;
    bool operator==(const Assignment &) const = default;
    auto operator<=>(const Assignment &) const = default;
};

// One (possibly conditional) assignment of an operator. Conditions are
// evaluated on the extended state before the step.
struct Effect {
    std::vector<Assignment> conditions;
    Assignment assign;
};

struct Operator {
    std::string name;
    std::vector<Assignment> preconditions; // distinct variables, primary or secondary
    std::vector<Effect> effects;           // affected variables are primary
    int cost = 1;
};

// head <- pos_body, not neg_body. The head is a secondary variable set to 1;
// neg_body entries name secondary-variable atoms (value 1) that must not hold.
struct Axiom {
    Assignment head;
    std::vector<Assignment> pos_body;
    std::vector<Assignment> neg_body;
};

// At most one of the listed primary fluents holds in any reachable state.
struct MutexGroup {
    std::vector<Assignment> fluents;
};

struct SasVariable {
    std::string name;
    int axiom_layer = -1; // -1 primary, >= 0 secondary
    std::vector<std::string> value_names;

    bool is_secondary() const { return axiom_layer >= 0; }
    int domain_size() const { return static_cast<int>(value_names.size()); }
};

class SasTask {
public:
    bool metric = false; // false: every operator counts 1 toward plan cost
    std::vector<SasVariable> variables;
    std::vector<MutexGroup> mutex_groups;
    std::vector<int> init; // one value per variable; secondary entries are 0
    std::vector<Assignment> goal;
    std::vector<Operator> operators;
    std::vector<Axiom> axioms;

    int num_variables() const { return static_cast<int>(variables.size()); }
    bool is_secondary(int var) const { return variables[var].is_secondary(); }
    int operator_cost(int op) const { return metric ? operators[op].cost : 1; }

    // Dense fluent ids: offset(var) + value, over all variables.
    int num_fluents() const;
    int fluent_id(int var, int value) const;
    int fluent_id(const Assignment &a) const { return fluent_id(a.var, a.value); }
    Assignment fluent(int id) const;

    bool has_axioms() const { return !axioms.empty(); }
    bool has_conditional_effects() const;

    // Throws InvalidTask on structural violations, StratificationError if the
    // axiom set admits no stratification.
    void validate() const;
};

// Axiom set as a ground program. Atoms are the secondary variables followed by
// the primary assignments occurring in axiom bodies, in (var, value) order.
struct AxiomNlp {
    LogicProgram program;
    std::vector<Assignment> atom_assignment; // per atom; secondary atoms carry value 1
    std::vector<bool> atom_is_secondary;
    std::vector<int> secondary_atom; // per task variable: atom id or -1

    int primary_atom(const Assignment &a) const; // -1 if a occurs in no body
};

AxiomNlp axiom_nlp(const SasTask &task);

// Axiom program plus one fact per primary assignment of `values` that occurs
// in some axiom body. `values` is indexed by variable id; secondary entries
// are ignored.
LogicProgram task_to_nlp(const SasTask &task, const std::vector<int> &values);

// Canonical text form: FastDownward-style sections, goal and prevail entries
// sorted by variable. parse_sas of the result reproduces the task.
std::string serialize_sas(const SasTask &task);

} // namespace axplan
