#pragma once

/// Umbrella header: decides whether a freely (p,q)-periodic knot bounds an
/// equivariant orientable surface in the 4-ball, from arithmetic or diagram
/// data.

#include "fpk/census.hpp"
#include "fpk/cobordism.hpp"
#include "fpk/diagram.hpp"
#include "fpk/diagram_io.hpp"
#include "fpk/errors.hpp"
#include "fpk/lens.hpp"
#include "fpk/torus.hpp"
