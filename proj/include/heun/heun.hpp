// Umbrella header.
#pragma once

#include "heun/algebraize.hpp"
#include "heun/canonical.hpp"
#include "heun/frobenius.hpp"
#include "heun/generalized_polynomial.hpp"
#include "heun/job.hpp"
#include "heun/numeric.hpp"
#include "heun/polyroots.hpp"
#include "heun/quasi_polynomial.hpp"
#include "heun/reference_matrices.hpp"
#include "heun/reps.hpp"
#include "heun/solvability.hpp"
#include "heun/spectral.hpp"
#include "heun/su11.hpp"
