#pragma once

#include <string>
#include <vector>

#include "semibetti/closed_forms.hpp"

namespace semibetti::detail {

std::string join(std::span<const Int> values, const char* sep = ",");

/// double_semigroup(s, f), refusing doubles whose raw generator list is not
/// minimal (DegenerateGenerators).
DoubleSpec require_minimal_double(const NumericalSemigroup& s, Int f);

}  // namespace semibetti::detail
