#pragma once

#include "lgv/errors.hpp"
#include "lgv/field.hpp"
#include "lgv/monomial.hpp"
#include "lgv/polynomial.hpp"
#include "lgv/parse.hpp"
#include "lgv/groebner.hpp"
#include "lgv/ideal_ops.hpp"
#include "lgv/poly_matrix.hpp"
#include "lgv/report.hpp"
#include "lgv/schemes.hpp"
#include "lgv/verify.hpp"
