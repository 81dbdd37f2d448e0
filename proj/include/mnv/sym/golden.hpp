#pragma once

#include <string>
#include <vector>

#include "mnv/sym/expr.hpp"

namespace mnv::sym {

// Reference expressions transcribed once from the source displays; tests
// compare canonical forms against these, never strings. `nu_2_3_printed`
// carries the display verbatim; `nu_2_3_derived` is the variant the
// recurrence produces (they differ in three conjugation marks, and the sharp
// image of the derived form reproduces `nus_2_3` exactly).
struct GoldenEntry {
  const char* name;
  const char* text;
};

const std::vector<GoldenEntry>& golden_table();
SymExpr golden(const std::string& name);

}  // namespace mnv::sym
