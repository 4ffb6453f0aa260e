#pragma once

#include "chordweight/acceptance.hpp"
#include "chordweight/curvature.hpp"
#include "chordweight/diagram_space.hpp"
#include "chordweight/diagrams.hpp"
#include "chordweight/formal_sum.hpp"
#include "chordweight/json_io.hpp"
#include "chordweight/lie.hpp"
#include "chordweight/linalg.hpp"
#include "chordweight/models.hpp"
#include "chordweight/oracle.hpp"
#include "chordweight/rational.hpp"
#include "chordweight/sparse_rank.hpp"
#include "chordweight/tensor.hpp"
#include "chordweight/yamada.hpp"
