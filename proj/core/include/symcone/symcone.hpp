#pragma once

#include "symcone/algebra.hpp"
#include "symcone/composition.hpp"
#include "symcone/element.hpp"
#include "symcone/endo.hpp"
#include "symcone/errors.hpp"
#include "symcone/frame.hpp"
#include "symcone/identities.hpp"
#include "symcone/kmatrix.hpp"
#include "symcone/psi.hpp"
#include "symcone/quadratic.hpp"
#include "symcone/random.hpp"
#include "symcone/regression.hpp"
#include "symcone/spectral.hpp"
#include "symcone/wishart.hpp"
