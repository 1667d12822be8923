#pragma once

// Numerical semigroup tangent cones: defining ideals, standard bases under
// local orders, Cohen-Macaulay / Buchsbaum / Gorenstein classification, and
// the reduction-theoretic invariants (Apery sets, Goto numbers, conductor
// orders).

#include "tcone/almost_monomial.hpp"
#include "tcone/analysis.hpp"
#include "tcone/binomial.hpp"
#include "tcone/enumerate.hpp"
#include "tcone/errors.hpp"
#include "tcone/graded.hpp"
#include "tcone/linalg.hpp"
#include "tcone/monomial.hpp"
#include "tcone/order.hpp"
#include "tcone/polynomial.hpp"
#include "tcone/rational.hpp"
#include "tcone/ring_invariants.hpp"
#include "tcone/search.hpp"
#include "tcone/semigroup.hpp"
#include "tcone/standard_basis.hpp"
#include "tcone/tangent_cone.hpp"
#include "tcone/toric.hpp"
