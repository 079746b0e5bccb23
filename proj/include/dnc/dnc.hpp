#pragma once

#include "dnc/rational.hpp"
#include "dnc/exact_arith.hpp"
#include "dnc/binary_decomposition.hpp"
#include "dnc/alpha.hpp"
#include "dnc/solver.hpp"
#include "dnc/oracle.hpp"
#include "dnc/catalog.hpp"
