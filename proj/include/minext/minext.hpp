#pragma once

#include "minext/census.hpp"
#include "minext/coefficients.hpp"
#include "minext/counterexample.hpp"
#include "minext/enumerate.hpp"
#include "minext/errors.hpp"
#include "minext/json_io.hpp"
#include "minext/linalg.hpp"
#include "minext/partial_monoid.hpp"
#include "minext/poly_format.hpp"
#include "minext/subring.hpp"
#include "minext/truncated_ring.hpp"
#include "minext/verify.hpp"
