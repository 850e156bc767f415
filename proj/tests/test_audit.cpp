#include <catch2/catch_amalgamated.hpp>
#include "eea/eea.hpp"
TEST_CASE("placeholder") { CHECK(true); }
