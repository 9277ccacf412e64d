#pragma once

// Umbrella header. json_io.hpp is not included; it needs nlohmann/json.

#include "juggle/big_int.hpp"
#include "juggle/diagram.hpp"
#include "juggle/errors.hpp"
#include "juggle/matrix.hpp"
#include "juggle/polynomial.hpp"
#include "juggle/sequences.hpp"
#include "juggle/siteswap.hpp"
#include "juggle/state.hpp"
#include "juggle/transfer.hpp"
#include "juggle/walk_oracle.hpp"
