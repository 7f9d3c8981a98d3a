#pragma once

// Umbrella header for the whole library.

#include "qawa/scalar.hpp"
#include "qawa/permutation.hpp"
#include "qawa/linalg.hpp"
#include "qawa/algebra.hpp"
#include "qawa/presets.hpp"
#include "qawa/tensor.hpp"
#include "qawa/laurent.hpp"
#include "qawa/affine.hpp"
#include "qawa/symmetries.hpp"
#include "qawa/relations.hpp"
#include "qawa/cyclotomic.hpp"
#include "qawa/random_elements.hpp"
#include "qawa/suites.hpp"
#include "qawa/json_io.hpp"
