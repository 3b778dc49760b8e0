#pragma once

#include "pairmds/code.hpp"
#include "pairmds/construct.hpp"
#include "pairmds/errors.hpp"
#include "pairmds/gf.hpp"
#include "pairmds/io.hpp"
#include "pairmds/linalg.hpp"
#include "pairmds/mp.hpp"
#include "pairmds/perm.hpp"
#include "pairmds/sweep.hpp"
#include "pairmds/sympair.hpp"
