#pragma once

#include <string>

#include "axplan/execution.h"

namespace axplan {

// One line per step, operator names separated by single spaces. Lines starting
// with ';' and blank lines are ignored when reading. A line that matches an
// operator name verbatim is a singleton step, so names with spaces work in
// sequential plans; otherwise the line is split on whitespace and every token
// must name an operator.
std::string plan_to_text(const SasTask &task, const Plan &plan);

Plan parse_plan_text(const SasTask &task, const std::string &text);

Plan load_plan_file(const SasTask &task, const std::string &path);

} // namespace axplan
