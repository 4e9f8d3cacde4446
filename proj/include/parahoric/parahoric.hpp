#pragma once

#include <parahoric/alcove.hpp>
#include <parahoric/errors.hpp>
#include <parahoric/levels.hpp>
#include <parahoric/parabolic.hpp>
#include <parahoric/rational.hpp>
#include <parahoric/report.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/steinberg.hpp>
#include <parahoric/subset.hpp>
#include <parahoric/weyl.hpp>
