#pragma once

// Umbrella header: CSS code construction from multiple classical codes,
// GF(2) linear algebra, code metrics, classification and lattice analytics.

#include "qcss/alist.hpp"
#include "qcss/analytics.hpp"
#include "qcss/bit_matrix.hpp"
#include "qcss/classical_code.hpp"
#include "qcss/classify.hpp"
#include "qcss/construct.hpp"
#include "qcss/linalg.hpp"
#include "qcss/matrix_market.hpp"
#include "qcss/metrics.hpp"
#include "qcss/rng.hpp"
#include "qcss/version.hpp"
