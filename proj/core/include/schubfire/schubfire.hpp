#pragma once

#include "schubfire/bigint.hpp"
#include "schubfire/bundle.hpp"
#include "schubfire/chow.hpp"
#include "schubfire/errors.hpp"
#include "schubfire/format.hpp"
#include "schubfire/limiting.hpp"
#include "schubfire/partition.hpp"
#include "schubfire/polynomial.hpp"
#include "schubfire/projective_bundle.hpp"
#include "schubfire/symmetric.hpp"
