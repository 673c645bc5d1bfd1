#ifndef MIXBOUND_MIXBOUND_HPP
#define MIXBOUND_MIXBOUND_HPP

#include "mixbound/bounds.hpp"
#include "mixbound/chain_analysis.hpp"
#include "mixbound/config.hpp"
#include "mixbound/distances.hpp"
#include "mixbound/duality.hpp"
#include "mixbound/errors.hpp"
#include "mixbound/example_chains.hpp"
#include "mixbound/io.hpp"
#include "mixbound/schur.hpp"
#include "mixbound/transition_matrix.hpp"

#endif
