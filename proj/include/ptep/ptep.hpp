#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "lehmer.hpp"
#include "partition.hpp"
#include "polyfactor.hpp"
#include "polynomial.hpp"
#include "ptm_sequence.hpp"
#include "rings.hpp"
