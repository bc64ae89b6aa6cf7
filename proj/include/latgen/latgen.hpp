#pragma once

#include "latgen/blocks.hpp"
#include "latgen/closure.hpp"
#include "latgen/dot.hpp"
#include "latgen/dual_chain.hpp"
#include "latgen/enumerate.hpp"
#include "latgen/error.hpp"
#include "latgen/finite_lattice.hpp"
#include "latgen/omega_op.hpp"
#include "latgen/ordinal.hpp"
#include "latgen/subset_mask.hpp"
#include "latgen/symbolic.hpp"
#include "latgen/verify.hpp"
