#pragma once

#include "ncpart/bigint.hpp"
#include "ncpart/core_model.hpp"
#include "ncpart/count_table.hpp"
#include "ncpart/errors.hpp"
#include "ncpart/random_stream.hpp"
#include "ncpart/render.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/tableau.hpp"
#include "ncpart/verify.hpp"
#include "ncpart/walk_engine.hpp"
