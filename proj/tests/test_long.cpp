// Long-running search checks, kept out of the fast unit suites: the
// exhaustive pairs search really does find a construction for K_18,
// and the labeling search settles K_10 by refuting the perfect size.
// Both finds certify independently through the verifier.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/search.hpp"

using namespace oddcover;

TEST_CASE("pairs_search discovers a K_18 construction from scratch") {
    SearchOptions opts;
    opts.budget = std::chrono::duration<double>(280.0);
    const PairsResult r = pairs_search(18, opts);
    REQUIRE(r.status == PairsStatus::found);
    CHECK(r.matrix->validate().all());
    CHECK(is_perfect(Graph::complete(18), pairs_to_cover(*r.matrix)));
}

TEST_CASE("K_10 has no perfect odd cover: exhaustive refutation at 5, cover at 6") {
    SearchOptions opts;
    opts.budget = std::chrono::duration<double>(280.0);
    const B2Result r = b2_exact(Graph::complete(10), opts);
    REQUIRE(r.status == SearchStatus::yes);
    CHECK(r.value == 6);
    CHECK(verify(Graph::complete(10), *r.witness).valid);
}
