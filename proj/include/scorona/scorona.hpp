#ifndef SCORONA_SCORONA_HPP
#define SCORONA_SCORONA_HPP

#include "scorona/balance_stats.hpp"
#include "scorona/corona.hpp"
#include "scorona/coronal.hpp"
#include "scorona/errors.hpp"
#include "scorona/factorization.hpp"
#include "scorona/families.hpp"
#include "scorona/graph_io.hpp"
#include "scorona/isomorphism.hpp"
#include "scorona/linalg.hpp"
#include "scorona/matrix.hpp"
#include "scorona/polynomial.hpp"
#include "scorona/rational.hpp"
#include "scorona/rational_function.hpp"
#include "scorona/signed_graph.hpp"
#include "scorona/verify.hpp"

#endif  // SCORONA_SCORONA_HPP
