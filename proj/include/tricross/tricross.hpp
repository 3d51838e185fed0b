#pragma once

#include "poly.hpp"
#include "codes.hpp"
#include "maps.hpp"
#include "parallel.hpp"
#include "generate.hpp"
#include "kauffman.hpp"
#include "diagrams.hpp"
#include "identify.hpp"
#include "catalog.hpp"
#include "verify.hpp"
