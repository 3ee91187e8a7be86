#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbhrp/radio.hpp"
#include "cbhrp/types.hpp"

using namespace cbhrp;

static const RadioParams P; // default constants

TEST_CASE("transmit cost: electronics plus d^2 amplifier") {
    // Expected values computed independently (exact IEEE doubles).
    CHECK(tx_energy(P, 1000, 100.0) == 0.00014999999999999999);
    CHECK(tx_energy(P, 1000, 0.0) == 4.9999999999999996e-05);
    CHECK(tx_energy(P, 4000, 100.0) == 0.00059999999999999995);
    CHECK(tx_energy(P, 4000, 150.0) == 0.0010999999999999998);
    CHECK(tx_energy(P, 0, 50.0) == 0.0);
    CHECK_THROWS_AS(tx_energy(P, -1, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(tx_energy(P, 10, -1.0), std::invalid_argument);
}

TEST_CASE("receive cost: electronics only") {
    CHECK(rx_energy(P, 2000) == 9.9999999999999991e-05);
    CHECK(rx_energy(P, 1) == 4.9999999999999998e-08);
    CHECK(rx_energy(P, 0) == 0.0);
    CHECK_THROWS_AS(rx_energy(P, -5), std::invalid_argument);
}

TEST_CASE("aggregation cost scales with signal count") {
    CHECK(aggregate_energy(P, 1000, 10) == 5.0000000000000002e-05);
    CHECK(aggregate_energy(P, 500, 1) == 2.5000000000000002e-06);
    CHECK(aggregate_energy(P, 500, 0) == 0.0);
    CHECK_THROWS_AS(aggregate_energy(P, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_energy(P, 1, -1), std::invalid_argument);
}

TEST_CASE("charge drains, clamps at zero and kills") {
    Node nd;
    nd.id = 3;
    nd.energy = 0.5;
    nd.state = NodeState::Candidate;

    auto r = charge(nd, 0.125);
    CHECK(r.remaining == 0.375);
    CHECK_FALSE(r.died);
    CHECK(nd.energy == 0.375);
    CHECK(nd.state == NodeState::Candidate);

    // Draining to exactly zero counts as exhaustion.
    r = charge(nd, 0.375);
    CHECK(r.remaining == 0.0);
    CHECK(r.died);
    CHECK(nd.state == NodeState::Dead);

    // Dead nodes absorb nothing.
    r = charge(nd, 1.0);
    CHECK(r.remaining == 0.0);
    CHECK_FALSE(r.died);
    CHECK(nd.energy == 0.0);
    CHECK(nd.state == NodeState::Dead);
}

TEST_CASE("charge clamps overdraws and clears the head-set rank") {
    Node nd;
    nd.energy = 1e-6;
    nd.state = NodeState::Active;
    nd.headset_rank = 2;
    auto r = charge(nd, 5.0);
    CHECK(r.died);
    CHECK(nd.energy == 0.0);
    CHECK(nd.state == NodeState::Dead);
    CHECK_FALSE(nd.headset_rank.has_value());
    CHECK_THROWS_AS(charge(nd, -1.0), std::invalid_argument);
}
