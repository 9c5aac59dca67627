#pragma once

#include "graphonlab/clustering.hpp"
#include "graphonlab/colored.hpp"
#include "graphonlab/cut_norm.hpp"
#include "graphonlab/errors.hpp"
#include "graphonlab/homomorphism.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/rng.hpp"
#include "graphonlab/sampling.hpp"
#include "graphonlab/spectral.hpp"
#include "graphonlab/step_graphon.hpp"
