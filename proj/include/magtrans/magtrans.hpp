#pragma once

// Everything, for convenience.

#include "cohomology.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "looptrans.hpp"
#include "magnetic.hpp"
#include "phase.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "runner.hpp"
#include "simplicial.hpp"
#include "theorem1.hpp"
