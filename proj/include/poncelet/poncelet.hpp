#pragma once

#include "poncelet/closure_oracle.hpp"
#include "poncelet/common_tangents.hpp"
#include "poncelet/core.hpp"
#include "poncelet/frame.hpp"
#include "poncelet/joachimsthal.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/quad.hpp"
#include "poncelet/triangle.hpp"
