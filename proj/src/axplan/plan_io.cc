#include "axplan/plan_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "axplan/errors.h"

namespace axplan {

std::string plan_to_text(const SasTask &task, const Plan &plan) {
    std::ostringstream out;
    for (const Step &step : plan.steps) {
        bool first = true;
        for (int op : step.operators) {
            if (!first)
                out << " ";
            out << task.operators[op].name;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

Plan parse_plan_text(const SasTask &task, const std::string &text) {
    std::unordered_map<std::string, int> by_name;
    for (int i = 0; i < static_cast<int>(task.operators.size()); ++i)
        by_name.emplace(task.operators[i].name, i);

    Plan plan;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == ';')
            continue;
        size_t end = line.find_last_not_of(" \t");
        std::string content = line.substr(begin, end - begin + 1);

        Step step;
        auto whole = by_name.find(content);
        if (whole != by_name.end()) {
            step.operators.push_back(whole->second);
        } else {
            std::istringstream fields(content);
            std::string token;
            while (fields >> token) {
                auto it = by_name.find(token);
                if (it == by_name.end())
                    throw SyntaxError(line_no, "unknown operator '" + token + "'");
                step.operators.push_back(it->second);
            }
        }
        std::sort(step.operators.begin(), step.operators.end());
        if (std::adjacent_find(step.operators.begin(), step.operators.end()) !=
            step.operators.end())
            throw SyntaxError(line_no, "operator repeated within one step");
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

Plan load_plan_file(const SasTask &task, const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_plan_text(task, buffer.str());
}

} // namespace axplan
