#pragma once

#include "palred/word.hpp"
#include "palred/generators.hpp"
#include "palred/pal_length.hpp"
#include "palred/runs.hpp"
#include "palred/reducer.hpp"
#include "palred/std_pal.hpp"
#include "palred/serialize.hpp"
#include "palred/pipeline.hpp"
