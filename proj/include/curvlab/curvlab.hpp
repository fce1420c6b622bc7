#pragma once

// Everything at once.

#include "curvlab/error.hpp"
#include "curvlab/scalar.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/thorpe.hpp"
#include "curvlab/pure.hpp"
#include "curvlab/zoo.hpp"
#include "curvlab/normalform4.hpp"
#include "curvlab/io.hpp"
#include "curvlab/verify.hpp"
