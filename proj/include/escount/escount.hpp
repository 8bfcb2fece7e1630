#pragma once

#include "escount/abelian.hpp"
#include "escount/budget.hpp"
#include "escount/burnside.hpp"
#include "escount/closed_form.hpp"
#include "escount/numtheory.hpp"
#include "escount/report.hpp"
#include "escount/verify.hpp"
