#pragma once

// Umbrella header. SOFA support lives in <dirkit/io/sofa.hpp> and needs HDF5.

#include "array3.hpp"
#include "basis_model.hpp"
#include "coords.hpp"
#include "datatype.hpp"
#include "diff.hpp"
#include "directivity.hpp"
#include "error.hpp"
#include "io/dird.hpp"
#include "io/dirm.hpp"
#include "io/synth.hpp"
#include "io/text.hpp"
#include "plot/csv.hpp"
#include "plot/series.hpp"
#include "plot/svg.hpp"
#include "plot/wav.hpp"
#include "raw_irs.hpp"
