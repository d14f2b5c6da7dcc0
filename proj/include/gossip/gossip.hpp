#pragma once

#include "gossip/constructions.hpp"
#include "gossip/core.hpp"
#include "gossip/errors.hpp"
#include "gossip/fixtures.hpp"
#include "gossip/formulas.hpp"
#include "gossip/graph.hpp"
#include "gossip/io.hpp"
#include "gossip/oracle/enumerate.hpp"
#include "gossip/oracle/lemmas.hpp"
#include "gossip/oracle/search.hpp"
