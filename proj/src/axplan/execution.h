#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axplan/sas_task.h"

namespace axplan {

// Total assignment over all variables with the secondary part the unique
// axiom closure of the primary part.
struct ExtendedState {
    std::vector<int> values;
    bool operator==(const ExtendedState &) const = default;
};

struct Step {
    std::vector<int> operators; // distinct ids, ascending, never empty
};

struct Plan {
    std::vector<Step> steps;

    int makespan() const { return static_cast<int>(steps.size()); }
    static Plan sequence(std::vector<int> operators);
};

enum class Semantics { seq, forall, automatic };

// automatic resolves to seq when the task has axioms, forall otherwise.
Semantics effective_semantics(const SasTask &task, Semantics requested);

// Layered fixpoint over the axioms, built once per task. Kept separate from
// the logic-program route on purpose; tests equate the two.
class AxiomEvaluator {
public:
    explicit AxiomEvaluator(const SasTask &task);

    // Overwrites the secondary entries of values with the axiom closure.
    void close(std::vector<int> &values) const;

    // As close(); rounds receives, per variable id, the fixpoint round within
    // the variable's dependency component that first derived it (0 otherwise).
    void close_with_rounds(std::vector<int> &values, std::vector<int> &rounds) const;

private:
    const SasTask *task_;
    std::vector<std::vector<int>> groups_; // axiom indices, evaluation order
};

ExtendedState evaluate_axioms(const SasTask &task, const std::vector<int> &primary);
ExtendedState initial_state(const SasTask &task);

bool goal_satisfied(const SasTask &task, const ExtendedState &state);

bool is_applicable(const SasTask &task, const ExtendedState &state, int op);

// Applies the fired effects and re-closes the axioms. Throws NotApplicable or
// ConflictingEffects.
ExtendedState apply_operator(const SasTask &task, const ExtendedState &state, int op);

struct PlanMetrics {
    int makespan = 0;
    long long cost = 0;
};

struct ValidationResult {
    bool ok = false;
    PlanMetrics metrics;
    std::string error; // empty iff ok
    int error_step = 0; // 1-based, 0 when not step-specific

    static ValidationResult success(PlanMetrics m) { return {true, m, "", 0}; }
    static ValidationResult failure(std::string why, int step = 0) {
        return {false, {}, std::move(why), step};
    }
};

// seq: singleton steps applied in order. forall: rejects tasks with axioms,
// checks the pairwise add/demand conflict rule inside every step, applies all
// operators of a step against the shared pre-state.
ValidationResult validate_plan(const SasTask &task, const Plan &plan,
                               Semantics semantics = Semantics::automatic);

// Breadth-first search for a minimum-makespan sequential plan. nullopt if no
// plan of at most max_steps steps exists; throws TooLarge past state_cap
// distinct states.
std::optional<Plan> oracle_plan(const SasTask &task, int max_steps,
                                long long state_cap = 1000000);

} // namespace axplan
