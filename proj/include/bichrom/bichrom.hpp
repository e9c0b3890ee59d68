#pragma once

#include "bichrom/feature_vector.hpp"
#include "bichrom/graphs.hpp"
#include "bichrom/kernel.hpp"
#include "bichrom/oracle.hpp"
#include "bichrom/report.hpp"
#include "bichrom/spectra.hpp"
