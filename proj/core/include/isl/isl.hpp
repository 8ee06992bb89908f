#pragma once

#include "isl/cut_elim.hpp"
#include "isl/formula.hpp"
#include "isl/fuzz.hpp"
#include "isl/g3.hpp"
#include "isl/g3_ops.hpp"
#include "isl/g4.hpp"
#include "isl/interpolation.hpp"
#include "isl/parser.hpp"
#include "isl/semantics.hpp"
#include "isl/sequent.hpp"
#include "isl/translate.hpp"
