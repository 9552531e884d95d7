#pragma once

// Umbrella header: B-spline evaluation, least-squares fitting, knot-selection
// genomes, the dolphin echolocation and GA optimizers, and the experiment
// harness around them.

#include "benchmark_curves.hpp"
#include "csv.hpp"
#include "curve.hpp"
#include "dea.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "fit.hpp"
#include "ga.hpp"
#include "genome.hpp"
#include "geometry.hpp"
#include "knots.hpp"
#include "number_io.hpp"
#include "parameterize.hpp"
#include "results.hpp"
#include "rng.hpp"
#include "serialize.hpp"
#include "svg.hpp"
