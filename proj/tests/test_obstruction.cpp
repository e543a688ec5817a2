#include <doctest.h>

#include <filesystem>

#include "cmtheta/errors.hpp"
#include "cmtheta/obstruction.hpp"

using namespace cmtheta;

namespace {

RunConfig no_cache()
{
    RunConfig c;
    c.cache_path.clear();
    return c;
}

// One provider per process: chi values are memoized across test cases.
ValueProvider & shared()
{
    static ValueProvider p(no_cache());
    return p;
}

} // namespace

TEST_CASE("obstruction verdicts")
{
    auto v = obstruction_for(shared(), 19, 1, 47, 1);
    CHECK(v.status == ObstructionStatus::twist_is_jacobian);
    // -2^11 * 19^14 mod 47
    CHECK(*v.chi_mod == mod_pos(-pow_mod(2, 11, 47) * pow_mod(19, 14, 47), 47));
    CHECK_FALSE(v.conjecture_flag);

    for (long p : {11L, 29L, 37L, 43L, 53L})
        CHECK(obstruction_for(shared(), 7, 1, p, 1).status ==
              ObstructionStatus::jacobian_non_hyperelliptic);

    auto z = obstruction_for(shared(), 43, 1, 47, 1);
    CHECK(z.status == ObstructionStatus::undetermined_zero);
    CHECK_FALSE(z.chi_mod);
    CHECK(*z.sigma_nonzero);
    CHECK(z.conjecture_flag);
    CHECK(z.note.find("hyperelliptic") != std::string::npos);

    CHECK_THROWS_AS(obstruction_for(shared(), 19, 1, 2, 1), unsupported_error);
    CHECK_THROWS_AS(obstruction_for(shared(), 19, 1, 19, 1), unsupported_error);
    CHECK_THROWS_AS(obstruction_for(shared(), 43, 4, 47, 1), unsupported_error);
    CHECK_THROWS_AS(obstruction_for(shared(), 19, 1, 49, 1), domain_error);
}

TEST_CASE("verdicts follow the square class of chi")
{
    // chi(19#1) has square class -2
    for (long p = 3; p < 400; p += 2) {
        if (p == 19 || !is_probable_prime(p))
            continue;
        bool square = legendre(-2, p) == 1;
        auto v1 = obstruction_for(shared(), 19, 1, p, 1);
        CHECK(v1.status == (square ? ObstructionStatus::jacobian_non_hyperelliptic
                                   : ObstructionStatus::twist_is_jacobian));
        CHECK(obstruction_for(shared(), 19, 1, p, 2).status ==
              ObstructionStatus::jacobian_non_hyperelliptic);
        CHECK(obstruction_for(shared(), 19, 1, p, 3).status == v1.status);
    }
}

TEST_CASE("optimal curve decisions")
{
    for (long q : {47L, 61L, 137L, 277L, 12167L}) {
        INFO("q = " << q);
        OptimalReport r = decide_optimal(shared(), q);
        CHECK(r.optimal_exists == Existence::yes);
        CHECK(r.optimal_points == q + 1 + 3 * r.m);
    }
    OptimalReport r47 = decide_optimal(shared(), 47);
    CHECK(r47.minimal_exists == Existence::no);
    CHECK(r47.m == 13);
    CHECK(r47.d == 19);
    CHECK(r47.trace == 13);

    OptimalReport r311 = decide_optimal(shared(), 311);
    CHECK(r311.optimal_exists == Existence::no);
    CHECK(r311.minimal_exists == Existence::yes);
    CHECK(r311.minimal_points == 311 + 1 - 3 * 35);

    OptimalReport r23 = decide_optimal(shared(), 12167);
    CHECK(r23.p == 23);
    CHECK(r23.n == 3);
    CHECK(r23.d == 67);
    CHECK(r23.f == 2);
    bool maximal_note = false;
    for (auto const & n : r23.notes)
        maximal_note |= n.find("maximal") != std::string::npos;
    CHECK(maximal_note);
    bool form3 = false, form7 = false;
    for (auto const & v : r23.verdicts) {
        form3 |= v.form == 3;
        form7 |= v.form == 7;
    }
    CHECK(form3);
    CHECK(form7);

    CHECK_THROWS_AS(decide_optimal(shared(), 49), unsupported_error);
    CHECK_THROWS_AS(decide_optimal(shared(), 2), unsupported_error);
    CHECK_THROWS_AS(decide_optimal(shared(), 15), unsupported_error);
    CHECK_THROWS_AS(decide_optimal(shared(), 101), unsupported_error);
}

TEST_CASE("decisions do not depend on the embedding")
{
    RunConfig c = no_cache();
    c.embedding = Embedding::conjugate;
    ValueProvider conj(c);
    for (long q : {47L, 61L, 137L, 277L, 311L, 12167L}) {
        OptimalReport a = decide_optimal(shared(), q), b = decide_optimal(conj, q);
        CHECK(a.optimal_exists == b.optimal_exists);
        CHECK(a.minimal_exists == b.minimal_exists);
        REQUIRE(a.verdicts.size() == b.verdicts.size());
        for (std::size_t i = 0; i < a.verdicts.size(); ++i)
            CHECK(a.verdicts[i].status == b.verdicts[i].status);
    }
}

TEST_CASE("cached values reproduce fresh ones")
{
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / ("cmtheta-obs-" + std::to_string(::getpid()) + ".jsonl");
    fs::remove(p);
    RunConfig c;
    c.cache_path = p.string();
    json cold, warm, cold_sigma, warm_sigma;
    {
        ValueProvider v(c);
        auto r = v.chi(67, 13);
        CHECK_FALSE(r.cached);
        cold = to_json(r.value, 67, 13, r.cached);
        auto s = v.sigma(7, 1);
        cold_sigma = to_json(s.value, 7, 1, s.cached);
    }
    {
        ValueProvider v(c);
        auto r = v.chi(67, 13);
        CHECK(r.cached);
        warm = to_json(r.value, 67, 13, r.cached);
        auto s = v.sigma(7, 1);
        warm_sigma = to_json(s.value, 7, 1, s.cached);
    }
    CHECK(cold["cached"] == false);
    CHECK(warm["cached"] == true);
    cold.erase("cached");
    warm.erase("cached");
    cold_sigma.erase("cached");
    warm_sigma.erase("cached");
    CHECK(cold.dump() == warm.dump());
    CHECK(cold_sigma.dump() == warm_sigma.dump());
    fs::remove(p);
}

TEST_CASE("table reproduction")
{
    auto rows = reproduce_tables(shared(), [](CatalogEntry const & e) {
        return (e.d == 7 && e.index == 1) || (e.d == 67 && e.index == 13) ||
               (e.d == 163 && e.index == 85);
    });
    REQUIRE(rows.size() == 3);
    for (auto const & r : rows) {
        CHECK(r.passed());
        CHECK(r.match == "exact");
    }
    json j = to_json(rows[0]);
    CHECK(j["expected"]["a"] == "678223072849");
}
