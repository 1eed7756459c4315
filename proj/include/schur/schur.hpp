#pragma once

#include "constructors.hpp"
#include "enumerator.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "group.hpp"
#include "partition.hpp"
#include "reference_table.hpp"
#include "table.hpp"
