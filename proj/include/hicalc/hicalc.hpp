#ifndef HICALC_HICALC_HPP
#define HICALC_HICALC_HPP

#include "hicalc/rational.hpp"
#include "hicalc/matrix.hpp"
#include "hicalc/polynomial.hpp"
#include "hicalc/parser.hpp"
#include "hicalc/standard_basis.hpp"
#include "hicalc/monodromy.hpp"
#include "hicalc/topology.hpp"
#include "hicalc/chain.hpp"
#include "hicalc/stability.hpp"
#include "hicalc/json_io.hpp"
#include "hicalc/reproduce.hpp"

#endif
