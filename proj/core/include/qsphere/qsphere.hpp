#pragma once

#include "qsphere/analysis.hpp"
#include "qsphere/constructors.hpp"
#include "qsphere/curves2d.hpp"
#include "qsphere/errors.hpp"
#include "qsphere/meshviz.hpp"
#include "qsphere/multipoly.hpp"
#include "qsphere/poly_text.hpp"
#include "qsphere/rational.hpp"
#include "qsphere/roots.hpp"
#include "qsphere/serialize.hpp"
#include "qsphere/univariate.hpp"
