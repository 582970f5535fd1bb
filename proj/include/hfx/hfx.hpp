#pragma once

#include "hfx/audit.hpp"
#include "hfx/catalog.hpp"
#include "hfx/facemodel.hpp"
#include "hfx/hallfusion.hpp"
#include "hfx/io/report.hpp"
#include "hfx/io/spec_file.hpp"
#include "hfx/ops.hpp"
#include "hfx/presentation.hpp"
#include "hfx/suite.hpp"
