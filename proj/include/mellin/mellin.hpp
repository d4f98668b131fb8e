#pragma once

// Numerical Mellin-transform toolkit: residue-series summation, forward
// and inverse transforms on vertical lines, and a verification harness
// for the classical identities the machinery reproduces.

#include "mellin/core.hpp"
#include "mellin/cylinder.hpp"
#include "mellin/expr.hpp"
#include "mellin/gamma.hpp"
#include "mellin/identities.hpp"
#include "mellin/master.hpp"
#include "mellin/polynomials.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/report_io.hpp"
#include "mellin/series.hpp"
#include "mellin/transform.hpp"
#include "mellin/zeta.hpp"
