#ifndef PMX_PMX_HPP_
#define PMX_PMX_HPP_

#include "pmx/catalog.hpp"
#include "pmx/errors.hpp"
#include "pmx/io.hpp"
#include "pmx/premaniplex.hpp"
#include "pmx/racg.hpp"
#include "pmx/symmetry.hpp"
#include "pmx/voltage.hpp"

#endif  // PMX_PMX_HPP_
