// digitpow/digitpow.hpp — everything.

#pragma once

#include "digitpow/binary_nat.hpp"
#include "digitpow/bound_engine.hpp"
#include "digitpow/checkpoint.hpp"
#include "digitpow/decimal_nat.hpp"
#include "digitpow/lemma_kernel.hpp"
#include "digitpow/power_state.hpp"
#include "digitpow/sequence_stats.hpp"
#include "digitpow/verifier.hpp"
