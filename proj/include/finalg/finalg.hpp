#pragma once

// Finite-dimensional unital complex algebras: structure constants, the
// function / matrix / semigroup-convolution constructors, regular
// representations, norms, spectra, Cayley-Hamilton inverses, and Neumann
// resolvents.

#include "finalg/algebra.hpp"
#include "finalg/core.hpp"
#include "finalg/io.hpp"
#include "finalg/matrix.hpp"
#include "finalg/norms.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/semigroup.hpp"
#include "finalg/spectral.hpp"
