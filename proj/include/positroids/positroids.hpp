#pragma once

// Umbrella header: everything except the CLI front end, which pulls in the
// heavy vendored parsers and lives in cli_app.hpp.

#include "bivariate_poly.hpp"
#include "bounds.hpp"
#include "catalan.hpp"
#include "diagram.hpp"
#include "dyck.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "positroid.hpp"
#include "set_family.hpp"
#include "subset.hpp"
#include "transversal.hpp"
#include "tutte.hpp"
#include "verify.hpp"
