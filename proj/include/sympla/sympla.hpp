#pragma once

// Umbrella header for the whole library.
#include "action.hpp"
#include "catalog.hpp"
#include "cocycle.hpp"
#include "extraction.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "serialization.hpp"
#include "symplectic.hpp"
