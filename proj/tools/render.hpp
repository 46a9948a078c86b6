#pragma once

#include <ostream>

#include "realhur/config.hpp"
#include "realhur/json_io.hpp"

namespace realhur::cli {

/// Text and CSV are derived from the JSON artifact.
void render(const ojson& artifact, OutputFormat format, std::ostream& out);

}  // namespace realhur::cli
