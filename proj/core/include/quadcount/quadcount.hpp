#pragma once

#include "quadcount/bigint.hpp"
#include "quadcount/characters.hpp"
#include "quadcount/cyclotomic.hpp"
#include "quadcount/expsums.hpp"
#include "quadcount/field.hpp"
#include "quadcount/formulas.hpp"
#include "quadcount/oracle.hpp"
#include "quadcount/poly.hpp"
