#include "cycsig/error.hpp"
#include "cycsig/resgroup.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace cycsig;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected cycsig::Error");
    return Errc::ParseError;
}

} // namespace

TEST_CASE("make_modulus") {
    const Modulus m163 = make_modulus(163, 1);
    CHECK(m163.N() == 163);
    CHECK(m163.half_degree() == 81);
    CHECK(make_modulus(29, 1).half_degree() == 14);
    CHECK(make_modulus(2, 5).half_degree() == 8);
    CHECK(make_modulus(3, 4).half_degree() == 27);

    CHECK(error_of([] { make_modulus(2, 1); }) == Errc::BadExponent);
    CHECK(error_of([] { make_modulus(15, 1); }) == Errc::CompositeP);
    CHECK(error_of([] { make_modulus(1, 1); }) == Errc::CompositeP);
    CHECK(error_of([] { make_modulus(7, 0); }) == Errc::BadExponent);
    CHECK(error_of([] { make_modulus(2, 40); }) == Errc::BadExponent);
}

TEST_CASE("embedding_set") {
    std::vector<std::int64_t> one_to_14(14);
    std::iota(one_to_14.begin(), one_to_14.end(), 1);
    CHECK(embedding_set(make_modulus(29, 1)) == one_to_14);
    CHECK(embedding_set(make_modulus(2, 3)) == std::vector<std::int64_t>{1, 3});
    CHECK(embedding_set(make_modulus(163, 1)).size() == 81);
    CHECK(embedding_set(make_modulus(3, 2)) == std::vector<std::int64_t>{1, 2, 4});

    for (auto [p, n] : oracle::prime_powers_up_to(500)) {
        const Modulus m(p, n);
        const auto B = embedding_set(m);
        CHECK(static_cast<std::int64_t>(B.size()) == m.half_degree());
        CHECK(std::is_sorted(B.begin(), B.end()));
    }
}

TEST_CASE("fold is 2-to-1 from units onto B") {
    for (auto [p, n] : oracle::prime_powers_up_to(300)) {
        const Modulus m(p, n);
        const auto B = embedding_set(m);
        std::map<std::int64_t, int> hits;
        for (std::int64_t x = 1; x < m.N(); ++x) {
            if (m.is_unit(x)) ++hits[m.fold(x)];
        }
        REQUIRE(hits.size() == B.size());
        for (std::int64_t b : B) CHECK(hits[b] == 2);
    }
}

TEST_CASE("group_generator") {
    const auto g5 = group_generator(make_modulus(5, 1));
    CHECK(g5.generator == 2);
    CHECK(g5.order == 2);
    const auto g16 = group_generator(make_modulus(2, 4));
    CHECK(g16.generator == 3);
    CHECK(g16.order == 4);

    for (auto [p, n] : oracle::prime_powers_up_to(1000)) {
        const Modulus m(p, n);
        const auto g = group_generator(m);
        std::set<std::int64_t> seen;
        for (std::int64_t k = 0; k < g.order; ++k) seen.insert(g.power(k));
        const auto B = embedding_set(m);
        CHECK(seen == std::set<std::int64_t>(B.begin(), B.end()));
        // Smallest: no smaller unit generates.
        if (p != 2) {
            for (std::int64_t c = 1; c < g.generator; ++c) {
                if (!m.is_unit(c)) continue;
                std::set<std::int64_t> orbit;
                std::int64_t x = 1;
                for (std::int64_t k = 0; k < g.order; ++k, x = m.mul(x, c)) orbit.insert(m.fold(x));
                CHECK(orbit.size() < B.size());
            }
        }
    }
    // The N = 163 generator verified by enumeration.
    const Modulus m163(163, 1);
    const auto g = group_generator(m163);
    std::set<std::int64_t> seen;
    for (std::int64_t k = 0; k < 81; ++k) seen.insert(g.power(k));
    CHECK(seen.size() == 81);
}

TEST_CASE("coset_decomposition") {
    const auto g163 = group_generator(make_modulus(163, 1));
    const auto c3 = coset_decomposition(g163, 3);
    REQUIRE(c3.cosets.size() == 3);
    for (const auto& c : c3.cosets) CHECK(c.size() == 27);
    CHECK(c3.cosets[0] == c3.subgroup);

    const auto c1 = coset_decomposition(g163, 1);
    REQUIRE(c1.cosets.size() == 1);
    auto all = c1.cosets[0];
    std::sort(all.begin(), all.end());
    CHECK(all == embedding_set(g163.modulus));

    const auto g29 = group_generator(make_modulus(29, 1));
    const auto c7 = coset_decomposition(g29, 7);
    REQUIRE(c7.cosets.size() == 7);
    for (const auto& c : c7.cosets) CHECK(c.size() == 2);
    auto h = c7.subgroup;
    std::sort(h.begin(), h.end());
    CHECK(h == oracle::subgroup_by_exponent(29, 29, 2));
    CHECK(h == std::vector<std::int64_t>{1, 12});

    CHECK_THROWS_AS(coset_decomposition(g29, 3), Error);
    try {
        coset_decomposition(g29, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadDegree);
    }
}

TEST_CASE("cosets partition B and are stable under H") {
    for (auto [p, n] : oracle::prime_powers_up_to(200)) {
        const Modulus m(p, n);
        const auto g = group_generator(m);
        for (std::int64_t d = 1; d <= g.order; ++d) {
            if (g.order % d != 0) continue;
            const auto cd = coset_decomposition(g, d);
            std::vector<std::int64_t> all;
            for (const auto& c : cd.cosets) all.insert(all.end(), c.begin(), c.end());
            std::sort(all.begin(), all.end());
            CHECK(all == embedding_set(m));

            auto h_sorted = cd.subgroup;
            std::sort(h_sorted.begin(), h_sorted.end());
            CHECK(h_sorted == oracle::subgroup_by_exponent(m.N(), p, g.order / d));

            for (const auto& c : cd.cosets) {
                std::set<std::int64_t> cs(c.begin(), c.end());
                for (std::int64_t h : cd.subgroup) {
                    std::set<std::int64_t> moved;
                    for (std::int64_t x : c) moved.insert(m.fold(m.mul(x, h)));
                    CHECK(moved == cs);
                }
            }
        }
    }
}
