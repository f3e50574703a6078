#pragma once

#include "rotor/builders.hpp"
#include "rotor/config.hpp"
#include "rotor/dynamics.hpp"
#include "rotor/model.hpp"
#include "rotor/observable.hpp"
#include "rotor/rank.hpp"
#include "rotor/rational.hpp"
#include "rotor/resonance.hpp"
#include "rotor/state.hpp"
#include "rotor/verify.hpp"
