#pragma once

#include "knotalg/blanchfield.hpp"
#include "knotalg/certificates.hpp"
#include "knotalg/errors.hpp"
#include "knotalg/fppoly.hpp"
#include "knotalg/fraction.hpp"
#include "knotalg/intmatrix.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"
#include "knotalg/orders.hpp"
#include "knotalg/quadform.hpp"
#include "knotalg/seifert.hpp"
#include "knotalg/table.hpp"
