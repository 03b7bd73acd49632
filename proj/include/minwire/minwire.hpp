#pragma once

#include "minwire/datamodel.hpp"
#include "minwire/decompose.hpp"
#include "minwire/design.hpp"
#include "minwire/ideals.hpp"
#include "minwire/oracle.hpp"
#include "minwire/random.hpp"
#include "minwire/uniqueness.hpp"
