#ifndef HOMCOAL_HOMCOAL_HPP
#define HOMCOAL_HOMCOAL_HPP

#include <homcoal/bundle.hpp>
#include <homcoal/constructions.hpp>
#include <homcoal/duality.hpp>
#include <homcoal/errors.hpp>
#include <homcoal/linmap.hpp>
#include <homcoal/rational.hpp>
#include <homcoal/solver.hpp>
#include <homcoal/structures.hpp>

#endif // HOMCOAL_HOMCOAL_HPP
