#pragma once

#include "letterstat/alphabet.hpp"
#include "letterstat/cipher.hpp"
#include "letterstat/error.hpp"
#include "letterstat/freq.hpp"
#include "letterstat/markov.hpp"
#include "letterstat/model.hpp"
#include "letterstat/rational.hpp"
#include "letterstat/rng.hpp"
#include "letterstat/solver.hpp"
#include "letterstat/stats.hpp"
#include "letterstat/stylometry.hpp"
#include "letterstat/table_io.hpp"
#include "letterstat/zipf.hpp"
