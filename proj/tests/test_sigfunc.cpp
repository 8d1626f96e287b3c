#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "wittsig/decide.hpp"
#include "wittsig/io.hpp"
TEST_CASE("placeholder") { CHECK(true); }
