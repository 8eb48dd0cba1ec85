#include "axplan/execution.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

#include "axplan/errors.h"

namespace axplan {

Plan Plan::sequence(std::vector<int> operators) {
    Plan plan;
    for (int op : operators)
        plan.steps.push_back(Step{{op}});
    return plan;
}

Semantics effective_semantics(const SasTask &task, Semantics requested) {
    if (requested != Semantics::automatic)
        return requested;
    return task.has_axioms() ? Semantics::seq : Semantics::forall;
}

AxiomEvaluator::AxiomEvaluator(const SasTask &task) : task_(&task) {
    if (task.axioms.empty())
        return;
    AxiomNlp nlp = axiom_nlp(task);
    auto levels = find_stratification(nlp.program);
    if (!levels)
        throw StratificationError("axiom set admits no stratification");
    DependencyGraph dg = dependency_graph(nlp.program);

    std::vector<int> order(dg.sccs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return (*levels)[dg.sccs[x][0]] < (*levels)[dg.sccs[y][0]];
    });

    std::vector<int> head_atom(task.axioms.size());
    for (size_t i = 0; i < task.axioms.size(); ++i)
        head_atom[i] = nlp.secondary_atom[task.axioms[i].head.var];
    for (int ci : order) {
        std::vector<int> group;
        for (size_t i = 0; i < task.axioms.size(); ++i)
            if (dg.scc_index[head_atom[i]] == ci)
                group.push_back(static_cast<int>(i));
        if (!group.empty())
            groups_.push_back(std::move(group));
    }
}

void AxiomEvaluator::close(std::vector<int> &values) const {
    std::vector<int> rounds;
    close_with_rounds(values, rounds);
}

void AxiomEvaluator::close_with_rounds(std::vector<int> &values,
                                       std::vector<int> &rounds) const {
    const SasTask &task = *task_;
    rounds.assign(task.num_variables(), 0);
    for (int v = 0; v < task.num_variables(); ++v)
        if (task.is_secondary(v))
            values[v] = 0;

    auto body_holds = [&](const Axiom &ax) {
        for (const Assignment &b : ax.pos_body)
            if (values[b.var] != b.value)
                return false;
        for (const Assignment &c : ax.neg_body)
            if (values[c.var] == 1)
                return false;
        return true;
    };

    for (const std::vector<int> &group : groups_) {
        int round = 0;
        while (true) {
            std::vector<int> newly;
            for (int ai : group) {
                const Axiom &ax = task.axioms[ai];
                if (values[ax.head.var] == 1)
                    continue;
                if (body_holds(ax))
                    newly.push_back(ax.head.var);
            }
            if (newly.empty())
                break;
            for (int var : newly) {
                values[var] = 1;
                rounds[var] = round;
            }
            ++round;
        }
    }
}

ExtendedState evaluate_axioms(const SasTask &task, const std::vector<int> &primary) {
    ExtendedState state{primary};
    AxiomEvaluator(task).close(state.values);
    return state;
}

ExtendedState initial_state(const SasTask &task) {
    return evaluate_axioms(task, task.init);
}

bool goal_satisfied(const SasTask &task, const ExtendedState &state) {
    for (const Assignment &g : task.goal)
        if (state.values[g.var] != g.value)
            return false;
    return true;
}

bool is_applicable(const SasTask &task, const ExtendedState &state, int op) {
    for (const Assignment &pre : task.operators[op].preconditions)
        if (state.values[pre.var] != pre.value)
            return false;
    return true;
}

namespace {

// Effects whose conditions hold in the extended pre-state; conflicting fired
// assignments raise ConflictingEffects.
std::vector<Assignment> fired_effects(const SasTask &task, const ExtendedState &pre,
                                      int op) {
    std::vector<Assignment> fired;
    for (const Effect &e : task.operators[op].effects) {
        bool holds = true;
        for (const Assignment &c : e.conditions)
            if (pre.values[c.var] != c.value) {
                holds = false;
                break;
            }
        if (holds)
            fired.push_back(e.assign);
    }
    for (size_t i = 0; i < fired.size(); ++i)
        for (size_t j = i + 1; j < fired.size(); ++j)
            if (fired[i].var == fired[j].var && fired[i].value != fired[j].value)
                throw ConflictingEffects("operator " + task.operators[op].name +
                                         " fires conflicting assignments to " +
                                         task.variables[fired[i].var].name);
    return fired;
}

} // namespace

ExtendedState apply_operator(const SasTask &task, const ExtendedState &state, int op) {
    if (!is_applicable(task, state, op))
        throw NotApplicable("operator " + task.operators[op].name +
                            " is not applicable");
    ExtendedState next = state;
    for (const Assignment &a : fired_effects(task, state, op))
        next.values[a.var] = a.value;
    AxiomEvaluator(task).close(next.values);
    return next;
}

namespace {

ValidationResult check_plan_shape(const SasTask &task, const Plan &plan,
                                  Semantics semantics) {
    int step_no = 0;
    for (const Step &step : plan.steps) {
        ++step_no;
        if (step.operators.empty())
            return ValidationResult::failure("empty step", step_no);
        if (semantics == Semantics::seq && step.operators.size() > 1)
            return ValidationResult::failure("parallel step under seq semantics",
                                             step_no);
        std::vector<int> sorted = step.operators;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return ValidationResult::failure("duplicate operator in step", step_no);
        for (int op : step.operators)
            if (op < 0 || op >= static_cast<int>(task.operators.size()))
                return ValidationResult::failure("unknown operator id", step_no);
    }
    return ValidationResult::success({});
}

// Parallel conflict rule: no operator may assign a fluent while another in the
// same step requires or assigns a different value of the same variable.
// Conditions on effects are ignored here, matching the encodings.
ValidationResult check_step_conflicts(const SasTask &task, const Step &step,
                                      int step_no) {
    for (int o : step.operators) {
        for (int o2 : step.operators) {
            if (o == o2)
                continue;
            for (const Effect &e : task.operators[o].effects) {
                for (const Assignment &pre : task.operators[o2].preconditions)
                    if (pre.var == e.assign.var && pre.value != e.assign.value)
                        return ValidationResult::failure(
                            "operators " + task.operators[o].name + " and " +
                                task.operators[o2].name + " conflict on " +
                                task.variables[pre.var].name,
                            step_no);
                for (const Effect &e2 : task.operators[o2].effects)
                    if (e2.assign.var == e.assign.var &&
                        e2.assign.value != e.assign.value)
                        return ValidationResult::failure(
                            "operators " + task.operators[o].name + " and " +
                                task.operators[o2].name + " conflict on " +
                                task.variables[e.assign.var].name,
                            step_no);
            }
        }
    }
    return ValidationResult::success({});
}

} // namespace

ValidationResult validate_plan(const SasTask &task, const Plan &plan,
                               Semantics semantics) {
    semantics = effective_semantics(task, semantics);
    if (semantics == Semantics::forall && task.has_axioms())
        throw ForallWithAxioms("parallel-step validation requires an axiom-free task");

    ValidationResult shape = check_plan_shape(task, plan, semantics);
    if (!shape.ok)
        return shape;

    AxiomEvaluator evaluator(task);
    ExtendedState state{task.init};
    evaluator.close(state.values);

    PlanMetrics metrics;
    int step_no = 0;
    for (const Step &step : plan.steps) {
        ++step_no;
        if (semantics == Semantics::forall) {
            ValidationResult conflicts = check_step_conflicts(task, step, step_no);
            if (!conflicts.ok)
                return conflicts;
        }
        std::vector<Assignment> all_fired;
        for (int op : step.operators) {
            if (!is_applicable(task, state, op))
                return ValidationResult::failure("operator " +
                                                     task.operators[op].name +
                                                     " is not applicable",
                                                 step_no);
            try {
                for (const Assignment &a : fired_effects(task, state, op))
                    all_fired.push_back(a);
            } catch (const ConflictingEffects &e) {
                return ValidationResult::failure(e.what(), step_no);
            }
            metrics.cost += task.operator_cost(op);
        }
        for (const Assignment &a : all_fired)
            state.values[a.var] = a.value;
        evaluator.close(state.values);
    }
    metrics.makespan = plan.makespan();

    if (!goal_satisfied(task, state))
        return ValidationResult::failure("goal unsatisfied in the final state");
    return ValidationResult::success(metrics);
}

std::optional<Plan> oracle_plan(const SasTask &task, int max_steps,
                                long long state_cap) {
    AxiomEvaluator evaluator(task);
    ExtendedState init{task.init};
    evaluator.close(init.values);

    struct VectorHash {
        size_t operator()(const std::vector<int> &v) const {
            size_t h = v.size();
            for (int x : v)
                h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
            return h;
        }
    };

    std::vector<std::vector<int>> states{init.values};
    std::vector<std::pair<int, int>> parent{{-1, -1}}; // (state index, op)
    std::vector<int> depth{0};
    std::unordered_map<std::vector<int>, int, VectorHash> seen{{init.values, 0}};

    auto reconstruct = [&](int index) {
        std::vector<int> ops;
        while (parent[index].first != -1) {
            ops.push_back(parent[index].second);
            index = parent[index].first;
        }
        std::reverse(ops.begin(), ops.end());
        return Plan::sequence(std::move(ops));
    };

    if (goal_satisfied(task, ExtendedState{init.values}))
        return reconstruct(0);

    for (size_t current = 0; current < states.size(); ++current) {
        if (depth[current] >= max_steps)
            continue;
        ExtendedState state{states[current]};
        for (int op = 0; op < static_cast<int>(task.operators.size()); ++op) {
            if (!is_applicable(task, state, op))
                continue;
            ExtendedState next = state;
            for (const Assignment &a : fired_effects(task, state, op))
                next.values[a.var] = a.value;
            evaluator.close(next.values);
            if (seen.count(next.values))
                continue;
            if (static_cast<long long>(states.size()) >= state_cap)
                throw TooLarge("state cap exceeded in breadth-first search");
            int index = static_cast<int>(states.size());
            seen.emplace(next.values, index);
            states.push_back(next.values);
            parent.emplace_back(static_cast<int>(current), op);
            depth.push_back(depth[current] + 1);
            if (goal_satisfied(task, next))
                return reconstruct(index);
        }
    }
    return std::nullopt;
}

} // namespace axplan
