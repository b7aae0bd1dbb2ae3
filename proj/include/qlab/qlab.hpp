#ifndef QLAB_QLAB_HPP
#define QLAB_QLAB_HPP

#include "qlab/bigreal.hpp"
#include "qlab/catalog.hpp"
#include "qlab/error.hpp"
#include "qlab/eta.hpp"
#include "qlab/exponent.hpp"
#include "qlab/expr.hpp"
#include "qlab/int.hpp"
#include "qlab/numeric.hpp"
#include "qlab/rational.hpp"
#include "qlab/series.hpp"
#include "qlab/verifier.hpp"

#endif
