#pragma once

#include "hyperalg/algebra.hpp"
#include "hyperalg/checks.hpp"
#include "hyperalg/chevalley.hpp"
#include "hyperalg/commutation.hpp"
#include "hyperalg/convex_order.hpp"
#include "hyperalg/exponent_table.hpp"
#include "hyperalg/generators.hpp"
#include "hyperalg/hasse.hpp"
#include "hyperalg/monomial.hpp"
#include "hyperalg/ordinary_pbw.hpp"
#include "hyperalg/root_system.hpp"
#include "hyperalg/scalar.hpp"
#include "hyperalg/serialize.hpp"
#include "hyperalg/straighten.hpp"
#include "hyperalg/subspace.hpp"
