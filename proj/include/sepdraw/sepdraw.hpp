#pragma once

// Everything except the JSON layer (sepdraw/serialize.hpp), which needs
// nlohmann/json on the include path.

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/geometry.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/io.hpp"
#include "sepdraw/layout.hpp"
#include "sepdraw/oracles.hpp"
#include "sepdraw/partition.hpp"
#include "sepdraw/pointset_embed.hpp"
#include "sepdraw/random.hpp"
#include "sepdraw/ratio.hpp"
#include "sepdraw/separators.hpp"
#include "sepdraw/svg.hpp"
