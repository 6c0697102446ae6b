#ifndef RINGCODES_RINGCODES_HPP
#define RINGCODES_RINGCODES_HPP

#include "chain_code.hpp"
#include "chain_ring.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "fields.hpp"
#include "graymap.hpp"
#include "integers.hpp"
#include "linear_code.hpp"
#include "polynomial.hpp"
#include "presets.hpp"
#include "quantum.hpp"

#endif
