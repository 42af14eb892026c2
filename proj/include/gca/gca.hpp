#pragma once

#include "gca/bracket_ring.hpp"
#include "gca/cayley_expr.hpp"
#include "gca/coordinate_poly.hpp"
#include "gca/dsl.hpp"
#include "gca/errors.hpp"
#include "gca/exterior.hpp"
#include "gca/formal_point.hpp"
#include "gca/io_json.hpp"
#include "gca/numeric_eval.hpp"
#include "gca/rational.hpp"
#include "gca/rng.hpp"
#include "gca/step_value.hpp"
#include "gca/symbolic_eval.hpp"
#include "gca/verify.hpp"
