#pragma once

#include "hamseq/degree_sequence.hpp"
#include "hamseq/errors.hpp"
#include "hamseq/graph.hpp"
#include "hamseq/hamilton.hpp"
#include "hamseq/nash_williams.hpp"
#include "hamseq/rational.hpp"
#include "hamseq/realizations.hpp"
#include "hamseq/verify.hpp"
