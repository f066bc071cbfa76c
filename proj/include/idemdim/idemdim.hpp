#pragma once

#include "idemdim/chains.hpp"
#include "idemdim/congruence.hpp"
#include "idemdim/corpus.hpp"
#include "idemdim/errors.hpp"
#include "idemdim/finite_semiring.hpp"
#include "idemdim/fractions.hpp"
#include "idemdim/lattice.hpp"
#include "idemdim/parser.hpp"
#include "idemdim/poly.hpp"
#include "idemdim/prime_families.hpp"
#include "idemdim/report.hpp"
#include "idemdim/sampling.hpp"
#include "idemdim/scalar.hpp"
