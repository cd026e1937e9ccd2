#include <doctest.h>
#include "shrinklab/canonical.hpp"
TEST_CASE("icosphere basics") {
    auto m = shrinklab::make_icosphere(2.0, 2);
    CHECK(m.is_closed());
    CHECK(shrinklab::genus(m) == 0);
}
