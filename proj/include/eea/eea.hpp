#pragma once

#include "eea/algebra.hpp"
#include "eea/audit.hpp"
#include "eea/constructions.hpp"
#include "eea/errors.hpp"
#include "eea/expansion.hpp"
#include "eea/field.hpp"
#include "eea/graph.hpp"
#include "eea/group.hpp"
#include "eea/json_io.hpp"
#include "eea/markov.hpp"
#include "eea/spectral.hpp"
#include "eea/structure.hpp"

namespace eea {
inline constexpr const char* kVersion = "0.1.0";
}
