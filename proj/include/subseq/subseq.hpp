#pragma once

#include "subseq/alternating.hpp"
#include "subseq/asymptotics.hpp"
#include "subseq/bigint.hpp"
#include "subseq/core.hpp"
#include "subseq/enumeration.hpp"
#include "subseq/matchings.hpp"
#include "subseq/painleve.hpp"
#include "subseq/patterns.hpp"
#include "subseq/powerseries.hpp"
#include "subseq/rng.hpp"
#include "subseq/rsk.hpp"
