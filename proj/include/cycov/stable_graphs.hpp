#pragma once

#include <cycov/canonical.hpp>
#include <cycov/enumerate.hpp>
#include <cycov/graph.hpp>
#include <cycov/rewrite.hpp>
