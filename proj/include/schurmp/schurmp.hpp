#pragma once

#include "schurmp/error.hpp"
#include "schurmp/galois.hpp"
#include "schurmp/matrix.hpp"
#include "schurmp/linear_code.hpp"
#include "schurmp/matrix_product.hpp"
#include "schurmp/cyclic.hpp"
#include "schurmp/hermitian.hpp"
#include "schurmp/random.hpp"
#include "schurmp/tables.hpp"
#include "schurmp/verify.hpp"
#include "schurmp/serialize.hpp"
