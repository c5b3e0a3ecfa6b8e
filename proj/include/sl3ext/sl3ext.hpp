#pragma once

#include "rational.hpp"
#include "weyl.hpp"
#include "charring.hpp"
#include "extring.hpp"
#include "admissible.hpp"
