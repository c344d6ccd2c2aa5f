#pragma once

#include "zpsym/bernoulli_euler.hpp"
#include "zpsym/binomial.hpp"
#include "zpsym/errors.hpp"
#include "zpsym/identities.hpp"
#include "zpsym/padic.hpp"
#include "zpsym/padic_integrals.hpp"
#include "zpsym/polynomial.hpp"
#include "zpsym/power_sums.hpp"
#include "zpsym/rational.hpp"
#include "zpsym/report.hpp"
#include "zpsym/series.hpp"
