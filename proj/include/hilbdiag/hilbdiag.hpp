#pragma once

#include "hilbdiag/common.hpp"
#include "hilbdiag/grid.hpp"
#include "hilbdiag/linalg.hpp"
#include "hilbdiag/poly.hpp"
#include "hilbdiag/groebner.hpp"
#include "hilbdiag/borel.hpp"
#include "hilbdiag/deligne.hpp"
#include "hilbdiag/tangent.hpp"
#include "hilbdiag/trees.hpp"
#include "hilbdiag/decorated.hpp"
#include "hilbdiag/h33.hpp"
#include "hilbdiag/embeddings.hpp"
#include "hilbdiag/parallel.hpp"
#include "hilbdiag/json_io.hpp"
#include "hilbdiag/verify.hpp"
