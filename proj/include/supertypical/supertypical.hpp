#pragma once

#include "supertypical/blocks.hpp"
#include "supertypical/central_characters.hpp"
#include "supertypical/characters.hpp"
#include "supertypical/equivalence.hpp"
#include "supertypical/flags.hpp"
#include "supertypical/mates.hpp"
#include "supertypical/rational.hpp"
#include "supertypical/root_data.hpp"
#include "supertypical/weight.hpp"
#include "supertypical/weyl.hpp"
