#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bentice {

// A small diagram with named free boundary edges.
struct LocalDiagram {
    std::string shape;
    Diagram diagram;
    std::vector<std::string> slots;  // free boundary edges, in reporting order
};

struct ConfigResult {
    std::string boundary;  // e.g. "a=R b=L"
    bool pass = true;
    std::string lhs, rhs;  // rendered sides, for failures
};

struct Verdict {
    std::string relation;
    bool pass = true;
    std::vector<ConfigResult> configs;
    std::optional<std::string> witness;
    std::optional<Poly> ratio;
    std::optional<Poly> expected_ratio;
    nlohmann::json to_json(bool include_passing = false) const;
};

// Partition function of a local diagram with slot edges set from the low bits of `assignment`.
Poly local_partition(const LocalDiagram& ld, const WeightScheme& w, unsigned assignment);

// left-hand and right-hand diagrams of each relation
std::pair<LocalDiagram, LocalDiagram> ybe_diagrams(RowLabel j, RowLabel k);
std::pair<LocalDiagram, LocalDiagram> bend_ybe_diagrams(int j, int k);
std::pair<LocalDiagram, LocalDiagram> caduceus_diagrams(int j, RowLabel star);
enum class FishVariant { B, Cstar_D_no1, D_with1 };
enum class JellyfishVariant { C, Bstar, BC };
std::pair<LocalDiagram, LocalDiagram> fish_diagrams(int j, FishVariant v);
std::pair<LocalDiagram, LocalDiagram> jellyfish_diagrams(int j, JellyfishVariant v, int central_index);

std::string fish_name(FishVariant v);
std::string jellyfish_name(JellyfishVariant v);

Verdict ybe_check(const RowWeights& wj, const RowWeights& wk);
Verdict bend_ybe_check(const WeightScheme& s, int j, int k);
Verdict caduceus_check(const WeightScheme& s, int j);
Verdict fish_check(const WeightScheme& s, int j, FishVariant v);
Verdict jellyfish_check(const WeightScheme& s, int j, JellyfishVariant v);

// closed forms of the ratios, in row j's weights (and the central row's for jellyfish)
Poly fish_closed_form(const WeightScheme& s, int j, FishVariant v);
Poly jellyfish_closed_form(const WeightScheme& s, int j, JellyfishVariant v);

// generic symbolic weights on a single plain row
RowWeights generic_row(int j);

}  // namespace bentice
