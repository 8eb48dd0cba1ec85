#include "axplan/sas_parser.h"

#include <fstream>
#include <sstream>

#include "axplan/errors.h"

namespace axplan {

namespace {

class LineReader {
public:
    explicit LineReader(const std::string &text) : in_(text) {}

    std::string next() {
        std::string line;
        if (!std::getline(in_, line))
            throw SyntaxError(line_no_, "unexpected end of file");
        ++line_no_;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }

    void expect(const std::string &token) {
        std::string line = next();
        if (line != token)
            throw SyntaxError(line_no_, "expected '" + token + "', got '" + line + "'");
    }

    int next_int() {
        return parse_int(next());
    }

    int parse_int(const std::string &token) {
        try {
            size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            return value;
        } catch (const std::exception &) {
            throw SyntaxError(line_no_, "expected an integer, got '" + token + "'");
        }
    }

    std::vector<int> next_ints(size_t expected) {
        std::istringstream fields(next());
        std::vector<int> values;
        std::string token;
        while (fields >> token)
            values.push_back(parse_int(token));
        if (expected != 0 && values.size() != expected)
            throw SyntaxError(line_no_, "expected " + std::to_string(expected) +
                                            " fields, got " +
                                            std::to_string(values.size()));
        return values;
    }

    bool at_end() {
        while (true) {
            int c = in_.peek();
            if (c == EOF)
                return true;
            if (c == '\n' || c == '\r') {
                in_.get();
                continue;
            }
            return false;
        }
    }

    int line_no() const { return line_no_; }

private:
    std::istringstream in_;
    int line_no_ = 0;
};

} // namespace

SasTask parse_sas(const std::string &text) {
    LineReader r(text);
    SasTask task;

    r.expect("begin_version");
    int version = r.next_int();
    if (version != 3)
        throw UnsupportedFeature("task format version " + std::to_string(version) +
                                 " is not supported, expected 3");
    r.expect("end_version");

    r.expect("begin_metric");
    int metric = r.next_int();
    if (metric != 0 && metric != 1)
        throw SyntaxError(r.line_no(), "metric flag must be 0 or 1");
    task.metric = metric == 1;
    r.expect("end_metric");

    int num_vars = r.next_int();
    for (int v = 0; v < num_vars; ++v) {
        r.expect("begin_variable");
        SasVariable var;
        var.name = r.next();
        var.axiom_layer = r.next_int();
        int domain = r.next_int();
        if (domain < 1)
            throw SyntaxError(r.line_no(), "variable domain must be positive");
        if (var.axiom_layer >= 0 && domain != 2)
            throw UnsupportedFeature("derived variable " + var.name +
                                     " has a non-binary domain");
        for (int d = 0; d < domain; ++d)
            var.value_names.push_back(r.next());
        r.expect("end_variable");
        task.variables.push_back(std::move(var));
    }

    auto read_assignment = [&](const std::vector<int> &pair) -> Assignment {
        Assignment a{pair[0], pair[1]};
        if (a.var < 0 || a.var >= task.num_variables())
            throw SyntaxError(r.line_no(), "variable id out of range");
        if (a.value < 0 || a.value >= task.variables[a.var].domain_size())
            throw SyntaxError(r.line_no(), "value out of range for variable " +
                                               std::to_string(a.var));
        return a;
    };

    int num_mutexes = r.next_int();
    for (int m = 0; m < num_mutexes; ++m) {
        r.expect("begin_mutex_group");
        int size = r.next_int();
        MutexGroup group;
        for (int i = 0; i < size; ++i) {
            Assignment f = read_assignment(r.next_ints(2));
            if (task.is_secondary(f.var))
                throw UnsupportedFeature("mutex group mentions derived variable " +
                                         task.variables[f.var].name);
            group.fluents.push_back(f);
        }
        r.expect("end_mutex_group");
        task.mutex_groups.push_back(std::move(group));
    }

    r.expect("begin_state");
    for (int v = 0; v < num_vars; ++v) {
        int value = r.next_int();
        if (value < 0 || value >= task.variables[v].domain_size())
            throw SyntaxError(r.line_no(), "initial value out of range");
        if (task.is_secondary(v) && value != 0)
            throw UnsupportedFeature("derived variable " + task.variables[v].name +
                                     " has default value 1");
        task.init.push_back(value);
    }
    r.expect("end_state");

    r.expect("begin_goal");
    int num_goals = r.next_int();
    for (int g = 0; g < num_goals; ++g)
        task.goal.push_back(read_assignment(r.next_ints(2)));
    r.expect("end_goal");

    int num_ops = r.next_int();
    for (int o = 0; o < num_ops; ++o) {
        r.expect("begin_operator");
        Operator op;
        op.name = r.next();
        int num_prevail = r.next_int();
        for (int i = 0; i < num_prevail; ++i)
            op.preconditions.push_back(read_assignment(r.next_ints(2)));
        int num_effects = r.next_int();
        for (int e = 0; e < num_effects; ++e) {
            std::vector<int> fields = r.next_ints(0);
            if (fields.empty())
                throw SyntaxError(r.line_no(), "empty effect line");
            size_t num_conditions = static_cast<size_t>(fields[0]);
            if (fields.size() != 1 + 2 * num_conditions + 3)
                throw SyntaxError(r.line_no(), "malformed effect line");
            Effect effect;
            for (size_t c = 0; c < num_conditions; ++c)
                effect.conditions.push_back(
                    read_assignment({fields[1 + 2 * c], fields[2 + 2 * c]}));
            int var = fields[1 + 2 * num_conditions];
            int pre = fields[2 + 2 * num_conditions];
            int post = fields[3 + 2 * num_conditions];
            effect.assign = read_assignment({var, post});
            if (task.is_secondary(var))
                throw UnsupportedFeature("operator " + op.name +
                                         " writes derived variable " +
                                         task.variables[var].name);
            if (pre != -1) {
                Assignment pre_assign = read_assignment({var, pre});
                bool duplicate = false;
                for (const Assignment &known : op.preconditions) {
                    if (known.var != var)
                        continue;
                    if (known.value != pre)
                        throw SyntaxError(r.line_no(),
                                          "conflicting preconditions on variable " +
                                              std::to_string(var));
                    duplicate = true;
                }
                if (!duplicate)
                    op.preconditions.push_back(pre_assign);
            }
            op.effects.push_back(std::move(effect));
        }
        op.cost = r.next_int();
        if (op.cost < 0)
            throw SyntaxError(r.line_no(), "negative operator cost");
        r.expect("end_operator");
        task.operators.push_back(std::move(op));
    }

    int num_rules = r.next_int();
    for (int a = 0; a < num_rules; ++a) {
        r.expect("begin_rule");
        int num_conditions = r.next_int();
        std::vector<Assignment> body;
        for (int c = 0; c < num_conditions; ++c)
            body.push_back(read_assignment(r.next_ints(2)));
        std::vector<int> head_fields = r.next_ints(3);
        int head_var = head_fields[0];
        int old_value = head_fields[1];
        int new_value = head_fields[2];
        if (head_var < 0 || head_var >= task.num_variables())
            throw SyntaxError(r.line_no(), "axiom head variable out of range");
        if (!task.is_secondary(head_var))
            throw UnsupportedFeature("axiom head " + task.variables[head_var].name +
                                     " lacks an axiom layer");
        if (old_value != 0 || new_value != 1)
            throw UnsupportedFeature("axiom must rewrite its head from 0 to 1");
        Axiom axiom;
        axiom.head = {head_var, 1};
        for (const Assignment &b : body) {
            if (task.is_secondary(b.var) && b.value == 0)
                axiom.neg_body.push_back({b.var, 1});
            else
                axiom.pos_body.push_back(b);
        }
        task.axioms.push_back(std::move(axiom));
        r.expect("end_rule");
    }

    if (!r.at_end())
        throw SyntaxError(r.line_no() + 1, "trailing content after task");

    task.validate();
    return task;
}

SasTask load_sas_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sas(buffer.str());
}

} // namespace axplan
