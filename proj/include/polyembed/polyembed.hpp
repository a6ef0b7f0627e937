#pragma once

#include "polyembed/cli.hpp"
#include "polyembed/core.hpp"
#include "polyembed/embedding.hpp"
#include "polyembed/generators.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/io.hpp"
#include "polyembed/oracle.hpp"
#include "polyembed/pointset.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/polygon_embed.hpp"
#include "polyembed/report.hpp"
#include "polyembed/svg.hpp"
#include "polyembed/verifier.hpp"
#include "polyembed/visibility.hpp"
