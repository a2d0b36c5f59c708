#pragma once

#include "confcoh/rational.hpp"
#include "confcoh/poly.hpp"
#include "confcoh/linalg.hpp"
#include "confcoh/algebra.hpp"
#include "confcoh/module.hpp"
#include "confcoh/cochain.hpp"
#include "confcoh/engine.hpp"
#include "confcoh/io.hpp"
