#pragma once

#include "bier.hpp"
#include "catalog.hpp"
#include "charmap.hpp"
#include "errors.hpp"
#include "facering.hpp"
#include "gf2.hpp"
#include "homology.hpp"
#include "instance_io.hpp"
#include "report.hpp"
#include "shelling.hpp"
#include "simplicial.hpp"
#include "small_cover.hpp"
#include "smith.hpp"
