#pragma once

#include "rankmine/bitvector.hpp"
#include "rankmine/closure_forest.hpp"
#include "rankmine/datagen.hpp"
#include "rankmine/dataset_io.hpp"
#include "rankmine/error.hpp"
#include "rankmine/gpminer.hpp"
#include "rankmine/pair_index.hpp"
#include "rankmine/pattern_store.hpp"
#include "rankmine/random.hpp"
#include "rankmine/ranking.hpp"
#include "rankmine/rules.hpp"
#include "rankmine/s1p_matrix.hpp"
#include "rankmine/tesma.hpp"
