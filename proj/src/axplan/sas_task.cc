#include "axplan/sas_task.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "axplan/errors.h"

namespace axplan {

int SasTask::num_fluents() const {
    int total = 0;
    for (const SasVariable &v : variables)
        total += v.domain_size();
    return total;
}

int SasTask::fluent_id(int var, int value) const {
    int offset = 0;
    for (int v = 0; v < var; ++v)
        offset += variables[v].domain_size();
    return offset + value;
}

Assignment SasTask::fluent(int id) const {
    for (int v = 0; v < num_variables(); ++v) {
        int d = variables[v].domain_size();
        if (id < d)
            return {v, id};
        id -= d;
    }
    throw InvalidTask("fluent id out of range");
}

bool SasTask::has_conditional_effects() const {
    for (const Operator &op : operators)
        for (const Effect &e : op.effects)
            if (!e.conditions.empty())
                return true;
    return false;
}

namespace {

void check_assignment(const SasTask &task, const Assignment &a, const char *where) {
    if (a.var < 0 || a.var >= task.num_variables())
        throw InvalidTask(std::string(where) + ": variable id out of range");
    if (a.value < 0 || a.value >= task.variables[a.var].domain_size())
        throw InvalidTask(std::string(where) + ": value out of range for " +
                          task.variables[a.var].name);
}

} // namespace

void SasTask::validate() const {
    for (const SasVariable &v : variables) {
        if (v.domain_size() < 1)
            throw InvalidTask("variable " + v.name + " has an empty domain");
        if (v.is_secondary() && v.domain_size() != 2)
            throw InvalidTask("secondary variable " + v.name + " is not binary");
    }
    if (static_cast<int>(init.size()) != num_variables())
        throw InvalidTask("initial state does not assign every variable");
    for (int v = 0; v < num_variables(); ++v) {
        check_assignment(*this, {v, init[v]}, "init");
        if (is_secondary(v) && init[v] != 0)
            throw InvalidTask("secondary variable " + variables[v].name +
                              " has nonzero default value");
    }

    std::set<int> goal_vars;
    for (const Assignment &g : goal) {
        check_assignment(*this, g, "goal");
        if (!goal_vars.insert(g.var).second)
            throw InvalidTask("goal assigns " + variables[g.var].name + " twice");
    }

    for (const Operator &op : operators) {
        if (op.cost < 0)
            throw InvalidTask("operator " + op.name + " has negative cost");
        std::set<int> pre_vars;
        for (const Assignment &pre : op.preconditions) {
            check_assignment(*this, pre, "precondition");
            if (!pre_vars.insert(pre.var).second)
                throw InvalidTask("operator " + op.name + " constrains " +
                                  variables[pre.var].name + " twice");
        }
        for (const Effect &e : op.effects) {
            check_assignment(*this, e.assign, "effect");
            if (is_secondary(e.assign.var))
                throw InvalidTask("operator " + op.name + " writes secondary variable " +
                                  variables[e.assign.var].name);
            std::set<int> cond_vars;
            for (const Assignment &c : e.conditions) {
                check_assignment(*this, c, "effect condition");
                if (!cond_vars.insert(c.var).second)
                    throw InvalidTask("operator " + op.name +
                                      " repeats a variable in an effect condition");
            }
        }
        for (size_t i = 0; i < op.effects.size(); ++i) {
            for (size_t j = i + 1; j < op.effects.size(); ++j) {
                const Effect &a = op.effects[i];
                const Effect &b = op.effects[j];
                if (a.assign.var != b.assign.var || a.assign.value == b.assign.value)
                    continue;
                std::vector<Assignment> ca = a.conditions, cb = b.conditions;
                std::sort(ca.begin(), ca.end());
                std::sort(cb.begin(), cb.end());
                if (ca == cb)
                    throw InvalidTask("operator " + op.name +
                                      " assigns two values to " +
                                      variables[a.assign.var].name +
                                      " under the same condition");
            }
        }
    }

    for (const Axiom &ax : axioms) {
        check_assignment(*this, ax.head, "axiom head");
        if (!is_secondary(ax.head.var))
            throw InvalidTask("axiom head " + variables[ax.head.var].name +
                              " is not a secondary variable");
        if (ax.head.value != 1)
            throw InvalidTask("axiom head value must be 1");
        for (const Assignment &b : ax.pos_body) {
            check_assignment(*this, b, "axiom body");
            if (is_secondary(b.var) && b.value != 1)
                throw InvalidTask("secondary value 0 in a positive axiom body; "
                                  "negated atoms belong in neg_body");
        }
        for (const Assignment &c : ax.neg_body) {
            check_assignment(*this, c, "axiom body");
            if (!is_secondary(c.var))
                throw InvalidTask("negated axiom body atom is not secondary");
            if (c.value != 1)
                throw InvalidTask("negated axiom body atoms carry value 1");
        }
    }

    for (const MutexGroup &g : mutex_groups) {
        for (const Assignment &f : g.fluents) {
            check_assignment(*this, f, "mutex group");
            if (is_secondary(f.var))
                throw InvalidTask("mutex group mentions a secondary variable");
        }
    }

    if (!axioms.empty() && !find_stratification(axiom_nlp(*this).program))
        throw StratificationError("axiom set admits no stratification");
}

AxiomNlp axiom_nlp(const SasTask &task) {
    AxiomNlp result;
    result.secondary_atom.assign(task.num_variables(), -1);
    for (int v = 0; v < task.num_variables(); ++v) {
        if (task.is_secondary(v)) {
            result.secondary_atom[v] =
                result.program.add_atom(task.variables[v].name);
            result.atom_assignment.push_back({v, 1});
            result.atom_is_secondary.push_back(true);
        }
    }
    std::set<Assignment> primary_refs;
    for (const Axiom &ax : task.axioms)
        for (const Assignment &b : ax.pos_body)
            if (!task.is_secondary(b.var))
                primary_refs.insert(b);
    std::map<Assignment, int> primary_atom;
    for (const Assignment &a : primary_refs) {
        std::string label =
            task.variables[a.var].name + "=" + std::to_string(a.value);
        primary_atom[a] = result.program.add_atom(label);
        result.atom_assignment.push_back(a);
        result.atom_is_secondary.push_back(false);
    }
    for (const Axiom &ax : task.axioms) {
        std::vector<int> pos, neg;
        for (const Assignment &b : ax.pos_body) {
            if (task.is_secondary(b.var))
                pos.push_back(result.secondary_atom[b.var]);
            else
                pos.push_back(primary_atom.at(b));
        }
        for (const Assignment &c : ax.neg_body)
            neg.push_back(result.secondary_atom[c.var]);
        result.program.add_rule(result.secondary_atom[ax.head.var], std::move(pos),
                                std::move(neg));
    }
    return result;
}

int AxiomNlp::primary_atom(const Assignment &a) const {
    for (int i = 0; i < program.num_atoms(); ++i)
        if (!atom_is_secondary[i] && atom_assignment[i] == a)
            return i;
    return -1;
}

LogicProgram task_to_nlp(const SasTask &task, const std::vector<int> &values) {
    AxiomNlp nlp = axiom_nlp(task);
    LogicProgram program = nlp.program;
    for (int a = 0; a < program.num_atoms(); ++a) {
        if (nlp.atom_is_secondary[a])
            continue;
        const Assignment &assign = nlp.atom_assignment[a];
        if (values[assign.var] == assign.value)
            program.add_fact(a);
    }
    return program;
}

std::string serialize_sas(const SasTask &task) {
    std::ostringstream out;
    out << "begin_version\n3\nend_version\n";
    out << "begin_metric\n" << (task.metric ? 1 : 0) << "\nend_metric\n";
    out << task.num_variables() << "\n";
    for (const SasVariable &v : task.variables) {
        out << "begin_variable\n" << v.name << "\n" << v.axiom_layer << "\n"
            << v.domain_size() << "\n";
        for (const std::string &value : v.value_names)
            out << value << "\n";
        out << "end_variable\n";
    }
    out << task.mutex_groups.size() << "\n";
    for (const MutexGroup &g : task.mutex_groups) {
        out << "begin_mutex_group\n" << g.fluents.size() << "\n";
        for (const Assignment &f : g.fluents)
            out << f.var << " " << f.value << "\n";
        out << "end_mutex_group\n";
    }
    out << "begin_state\n";
    for (int value : task.init)
        out << value << "\n";
    out << "end_state\n";
    std::vector<Assignment> goal = task.goal;
    std::sort(goal.begin(), goal.end());
    out << "begin_goal\n" << goal.size() << "\n";
    for (const Assignment &g : goal)
        out << g.var << " " << g.value << "\n";
    out << "end_goal\n";
    out << task.operators.size() << "\n";
    for (const Operator &op : task.operators) {
        std::set<int> affected;
        for (const Effect &e : op.effects)
            affected.insert(e.assign.var);
        std::vector<Assignment> prevail;
        std::map<int, int> effect_pre;
        for (const Assignment &pre : op.preconditions) {
            if (affected.count(pre.var))
                effect_pre[pre.var] = pre.value;
            else
                prevail.push_back(pre);
        }
        std::sort(prevail.begin(), prevail.end());
        out << "begin_operator\n" << op.name << "\n" << prevail.size() << "\n";
        for (const Assignment &p : prevail)
            out << p.var << " " << p.value << "\n";
        out << op.effects.size() << "\n";
        std::set<int> pre_emitted;
        for (const Effect &e : op.effects) {
            out << e.conditions.size();
            for (const Assignment &c : e.conditions)
                out << " " << c.var << " " << c.value;
            int pre = -1;
            auto it = effect_pre.find(e.assign.var);
            if (it != effect_pre.end() && pre_emitted.insert(e.assign.var).second)
                pre = it->second;
            out << " " << e.assign.var << " " << pre << " " << e.assign.value << "\n";
        }
        out << op.cost << "\nend_operator\n";
    }
    out << task.axioms.size() << "\n";
    for (const Axiom &ax : task.axioms) {
        out << "begin_rule\n" << ax.pos_body.size() + ax.neg_body.size() << "\n";
        std::vector<Assignment> body = ax.pos_body;
        for (const Assignment &c : ax.neg_body)
            body.push_back({c.var, 0});
        std::sort(body.begin(), body.end());
        for (const Assignment &b : body)
            out << b.var << " " << b.value << "\n";
        out << ax.head.var << " 0 " << ax.head.value << "\n";
        out << "end_rule\n";
    }
    return out.str();
}

} // namespace axplan
