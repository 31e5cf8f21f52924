#pragma once

#include "jumpcon/errors.hpp"
#include "jumpcon/rational.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/form.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/jump_surface.hpp"
#include "jumpcon/poncelet.hpp"
#include "jumpcon/random.hpp"
#include "jumpcon/json_io.hpp"
