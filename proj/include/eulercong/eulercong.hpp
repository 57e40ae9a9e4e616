#pragma once

#include "bigint.hpp"
#include "conjecture.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "identities.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "residue.hpp"
#include "rules.hpp"
