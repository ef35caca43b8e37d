#pragma once

#include "gemkit/bounds.hpp"
#include "gemkit/catalog.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/complex_invariants.hpp"
#include "gemkit/error.hpp"
#include "gemkit/fixtures.hpp"
#include "gemkit/io.hpp"
#include "gemkit/isomorphism.hpp"
#include "gemkit/rational.hpp"
#include "gemkit/regular_genus.hpp"
