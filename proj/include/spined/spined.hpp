#ifndef SPINED_SPINED_HPP
#define SPINED_SPINED_HPP

#include "spined/bits.hpp"
#include "spined/error.hpp"
#include "spined/core.hpp"
#include "spined/graph.hpp"
#include "spined/chordal.hpp"
#include "spined/hypergraph.hpp"
#include "spined/complement.hpp"
#include "spined/induced.hpp"
#include "spined/ndiv.hpp"
#include "spined/poset.hpp"
#include "spined/witness.hpp"
#include "spined/io.hpp"

#endif  // SPINED_SPINED_HPP
