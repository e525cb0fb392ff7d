#pragma once

#include "skewlie/algebra.hpp"
#include "skewlie/classify.hpp"
#include "skewlie/cli.hpp"
#include "skewlie/document.hpp"
#include "skewlie/errors.hpp"
#include "skewlie/linalg.hpp"
#include "skewlie/matrix.hpp"
#include "skewlie/rational.hpp"
#include "skewlie/sampler.hpp"
#include "skewlie/structmats.hpp"
