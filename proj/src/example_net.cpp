#include "sexticnet/example_net.hpp"

#include "sexticnet/polytext.hpp"

namespace sexticnet {

SlotAssignment example_net_assignment() {
    auto quad = [](const char* text) { return QuadraticForm(parse_polynomial(text, x_vars(6))); };
    return SlotAssignment({{0, quad(kExampleQ0)}, {1, quad(kExampleQ1)}, {2, quad(kExampleQ2)}});
}

}  // namespace sexticnet
