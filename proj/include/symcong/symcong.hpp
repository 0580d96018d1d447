#pragma once

// Umbrella header.

#include <symcong/rational.hpp>
#include <symcong/bernoulli.hpp>
#include <symcong/symfunc.hpp>
#include <symcong/parse.hpp>
#include <symcong/evaluation.hpp>
#include <symcong/ideal.hpp>
