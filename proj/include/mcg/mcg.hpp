#pragma once

#include "mcg/error.hpp"
#include "mcg/words.hpp"
#include "mcg/linalg.hpp"
#include "mcg/abelianize.hpp"
#include "mcg/coset.hpp"
#include "mcg/gaction.hpp"
#include "mcg/catalog.hpp"
#include "mcg/twisted.hpp"
#include "mcg/grammar.hpp"
