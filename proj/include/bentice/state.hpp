#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/weights.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bentice {

struct IceState {
    std::vector<uint8_t> bits;  // per edge: 1 = right / down
    std::vector<uint8_t> cfg;   // per vertex: index into configs_for(type)
    bool operator==(const IceState&) const = default;
};

Kind state_kind(const Diagram& d, const IceState& s, int v);
std::map<Kind, int> kind_counts(const Diagram& d, const IceState& s);

// Visits every admissible state in a fixed order; the callback may return false to stop.
void for_each_state(const Diagram& d, const std::function<bool(const IceState&)>& visit);
std::vector<IceState> enumerate_states(const Diagram& d);
std::vector<IceState> enumerate_states(const ModelSpec& spec, const Caps& caps = Caps::from_env());

Poly state_weight(const Diagram& d, const IceState& s, const WeightScheme& w);

// Row-by-row contraction over the edge frontier; zero weights prune branches.
Poly partition_function(const Diagram& d, const WeightScheme& w, int workers = 1);
Poly partition_function(const ModelSpec& spec, const WeightScheme& w, int workers = 1,
                        const Caps& caps = Caps::from_env());
// Sum of state_weight over enumerate_states; slower, used as a cross-check.
Poly partition_function_by_states(const Diagram& d, const WeightScheme& w, int workers = 1);

nlohmann::json state_to_json(const ModelSpec& spec, const IceState& s);
std::string state_to_tikz(const ModelSpec& spec, const IceState& s);
std::string describe_vertex(const Diagram& d, int v);

}  // namespace bentice
