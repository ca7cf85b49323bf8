// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Umbrella header.

#pragma once

#include "algebra.hpp"
#include "catalog.hpp"
#include "closure.hpp"
#include "commutator.hpp"
#include "conditions.hpp"
#include "enumerate.hpp"
#include "expr.hpp"
#include "io.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "search.hpp"
