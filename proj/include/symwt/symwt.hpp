#pragma once

#include "symwt/bounds.hpp"
#include "symwt/clique.hpp"
#include "symwt/codes.hpp"
#include "symwt/compositions.hpp"
#include "symwt/count.hpp"
#include "symwt/finite_field.hpp"
#include "symwt/io.hpp"
#include "symwt/reed_solomon.hpp"
#include "symwt/spaces.hpp"
