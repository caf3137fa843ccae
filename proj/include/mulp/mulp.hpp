#pragma once

#include "mulp/core.hpp"
#include "mulp/fusion.hpp"
#include "mulp/io.hpp"
#include "mulp/transforms.hpp"
