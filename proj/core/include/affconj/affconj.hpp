#pragma once

#include "affconj/affine.hpp"
#include "affconj/classify.hpp"
#include "affconj/decompose.hpp"
#include "affconj/frobenius.hpp"
#include "affconj/harness.hpp"
#include "affconj/matrix.hpp"
#include "affconj/poly.hpp"
#include "affconj/rational.hpp"
