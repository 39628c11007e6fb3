#pragma once

#include "pistar/exact.hpp"
#include "pistar/star_algebra.hpp"
#include "pistar/catalog.hpp"
#include "pistar/free_star.hpp"
#include "pistar/parser.hpp"
#include "pistar/evaluation.hpp"
#include "pistar/codim.hpp"
#include "pistar/cocharacter.hpp"
#include "pistar/tideal.hpp"
#include "pistar/algebra_json.hpp"
#include "pistar/verify.hpp"
