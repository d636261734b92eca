#pragma once

// Umbrella header: leaf functions sleaf_n / cleaf_n, their half-period
// constants, the lemniscate geometry built on the order-2 pair, and the
// table/CSV/SVG renderers.

#include "identities.hpp"
#include "leaf.hpp"
#include "lemniscate.hpp"
#include "ode.hpp"
#include "quadrature.hpp"
#include "render.hpp"
#include "verify.hpp"
