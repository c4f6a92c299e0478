// Umbrella header.

#ifndef PERMDL_PERMDL_HPP
#define PERMDL_PERMDL_HPP

#include "permdl/bigint.hpp"
#include "permdl/bijection.hpp"
#include "permdl/duploss.hpp"
#include "permdl/io.hpp"
#include "permdl/minimal.hpp"
#include "permdl/pattern.hpp"
#include "permdl/permutation.hpp"
#include "permdl/poset.hpp"

#endif  // PERMDL_PERMDL_HPP
