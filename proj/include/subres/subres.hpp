#pragma once

// Umbrella header: exact univariate subresultants by five equivalent routes,
// with the verification harness that cross-checks them on random instances.

#include "subres/admissible.hpp"
#include "subres/builders.hpp"
#include "subres/combinatorics.hpp"
#include "subres/errors.hpp"
#include "subres/json_io.hpp"
#include "subres/matrix.hpp"
#include "subres/poly.hpp"
#include "subres/rational.hpp"
#include "subres/root_list.hpp"
#include "subres/subresultant.hpp"
#include "subres/verify.hpp"
