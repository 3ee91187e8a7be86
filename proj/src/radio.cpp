#include "cbhrp/radio.hpp"

namespace cbhrp {

ChargeResult charge(Node& node, double amount) {
    if (amount < 0.0) throw std::invalid_argument("charge: negative amount");
    if (!node.alive()) return {0.0, false};
    node.energy -= amount;
    if (node.energy <= 0.0) {
        node.energy = 0.0;
        node.state = transition(node.state, StateEvent::EnergyExhausted);
        node.headset_rank.reset();
        return {0.0, true};
    }
    return {node.energy, false};
}

}  // namespace cbhrp
