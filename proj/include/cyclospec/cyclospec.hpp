#pragma once

#include "char_sums.hpp"
#include "characters.hpp"
#include "complex_point.hpp"
#include "dirichlet_l.hpp"
#include "error.hpp"
#include "graph_l.hpp"
#include "jacobi.hpp"
#include "kahan.hpp"
#include "output.hpp"
#include "parallel.hpp"
#include "special_functions.hpp"
