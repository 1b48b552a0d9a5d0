#pragma once

#include "ppt/error.hpp"
#include "ppt/integer.hpp"
#include "ppt/triple.hpp"
#include "ppt/generators.hpp"
#include "ppt/tree.hpp"
#include "ppt/symphonic.hpp"
