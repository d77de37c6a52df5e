#pragma once

#include "symcover/betti.hpp"
#include "symcover/canonical.hpp"
#include "symcover/enumerate.hpp"
#include "symcover/exact_rank.hpp"
#include "symcover/graph.hpp"
#include "symcover/homology.hpp"
#include "symcover/ids.hpp"
#include "symcover/monomial.hpp"
#include "symcover/simplicial.hpp"
#include "symcover/sweep.hpp"
#include "symcover/text_io.hpp"
#include "symcover/theorems.hpp"
#include "symcover/vwc_labeling.hpp"
