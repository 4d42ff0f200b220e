#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/constructions.hpp"
#include "tourlab/contains.hpp"
#include "tourlab/domination.hpp"
#include "tourlab/enumeration/canonical.hpp"
#include "tourlab/enumeration/enumerate.hpp"
#include "tourlab/enumeration/parallel.hpp"
#include "tourlab/enumeration/report.hpp"
#include "tourlab/enumeration/scans.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/graph_solvers.hpp"
#include "tourlab/io.hpp"
#include "tourlab/matching.hpp"
#include "tourlab/structure/complete_pair.hpp"
#include "tourlab/structure/density.hpp"
#include "tourlab/structure/diamond.hpp"
#include "tourlab/structure/numbering.hpp"
#include "tourlab/structure/ordered.hpp"
#include "tourlab/structure/ring.hpp"
#include "tourlab/submeasure.hpp"
#include "tourlab/tournament.hpp"
#include "tourlab/vertex_set.hpp"
