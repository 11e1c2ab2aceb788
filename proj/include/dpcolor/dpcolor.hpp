#pragma once

#include "constructions.hpp"
#include "cover.hpp"
#include "cover_json.hpp"
#include "degree_cover.hpp"
#include "enhanced.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "recheck.hpp"
#include "recognizers.hpp"
#include "solver.hpp"
#include "verify.hpp"
