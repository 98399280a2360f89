#pragma once

// Umbrella header for the whole library.

#include "abelmod/core/error.hpp"
#include "abelmod/core/int_matrix.hpp"
#include "abelmod/core/numeric.hpp"
#include "abelmod/core/rational_matrix.hpp"
#include "abelmod/core/smith.hpp"
#include "abelmod/flatf2.hpp"
#include "abelmod/group.hpp"
#include "abelmod/hilbmatrix.hpp"
#include "abelmod/hodge_poly.hpp"
#include "abelmod/rootdata.hpp"
#include "abelmod/stringy.hpp"
#include "abelmod/torsion.hpp"
