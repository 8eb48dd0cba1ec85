#pragma once

#include <string>

#include "axplan/sas_task.h"

namespace axplan {

// Reads the FastDownward translator format, version 3. Throws SyntaxError on
// malformed input, UnsupportedFeature for constructs outside the supported
// fragment (other versions, non-binary or nonzero-default secondary variables,
// secondary variables in mutex groups or effects), StratificationError if the
// axiom set does not stratify.
SasTask parse_sas(const std::string &text);

SasTask load_sas_file(const std::string &path);

} // namespace axplan
