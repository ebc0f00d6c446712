#pragma once

#include "ssa/block_code.hpp"
#include "ssa/clique.hpp"
#include "ssa/composition.hpp"
#include "ssa/dna.hpp"
#include "ssa/errors.hpp"
#include "ssa/oracle.hpp"
#include "ssa/replacement.hpp"
