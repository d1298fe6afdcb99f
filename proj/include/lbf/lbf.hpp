#pragma once

#include "automorphism.hpp"
#include "cayley.hpp"
#include "codes.hpp"
#include "constructions.hpp"
#include "counting.hpp"
#include "cube_function.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "lattice.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "scenery.hpp"
#include "tree.hpp"
#include "walsh.hpp"
