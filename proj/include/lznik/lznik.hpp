#pragma once

#include "lznik/bandlimited.hpp"
#include "lznik/besov.hpp"
#include "lznik/core.hpp"
#include "lznik/fft.hpp"
#include "lznik/log_pair.hpp"
#include "lznik/lz_norm.hpp"
#include "lznik/nikolskii.hpp"
#include "lznik/quadrature.hpp"
#include "lznik/rng.hpp"
#include "lznik/sampled.hpp"
#include "lznik/spaces.hpp"
#include "lznik/spectrum.hpp"
#include "lznik/stats.hpp"
#include "lznik/step_function.hpp"
