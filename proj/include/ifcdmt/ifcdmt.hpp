#pragma once

#include "ifcdmt/closed_form.hpp"
#include "ifcdmt/montecarlo.hpp"
#include "ifcdmt/oracle.hpp"
#include "ifcdmt/parallel.hpp"
#include "ifcdmt/piecewise.hpp"
#include "ifcdmt/regions.hpp"
#include "ifcdmt/scalar.hpp"
#include "ifcdmt/split_cases.hpp"
#include "ifcdmt/summary.hpp"
#include "ifcdmt/types.hpp"

//! Diversity-multiplexing analysis of two-source block-fading Gaussian
//! interference channels: closed-form exponent bounds, an independent grid
//! oracle, and finite-SNR outage simulation.
namespace ifcdmt {}
