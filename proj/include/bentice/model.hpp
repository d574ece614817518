#pragma once

#include "bentice/labels.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bentice {

enum class Family { A, B, Bstar, C, Cstar, D, BC };

std::string family_name(Family f);
Family parse_family(const std::string& s);
const std::vector<Family>& all_families();
// families whose rows come in pairs (j, j-bar) joined by bends
bool is_bent(Family f);

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);  // validates
    static StrictPartition parse(const std::string& s);
    static StrictPartition rho(int n);

    int n() const { return (int)parts.size(); }
    int first() const { return parts.front(); }
    bool contains(int c) const;
    int size() const;  // |lambda|
    std::string str() const;
    bool operator==(const StrictPartition&) const = default;
};

// weight / shape of a local vertex
enum class Kind : uint8_t { a1, a2, b1, b2, c1, c2, U, D, L, R, X1, X2, X3, X4, X5, X6 };
std::string kind_name(Kind k);

enum class VType : uint8_t { grid, cross, bend, corner };

// Edge bit convention: 1 means the arrow points right (horizontal) or down (vertical).
struct Edge {
    bool horizontal = true;
    int8_t fixed = -1;
    std::array<int, 2> v{-1, -1};
    std::string name;
    // arrow position for drawing; the segment spans half a unit either side
    double ax = 0, ay = 0;
};

// Slots: grid (N,S,W,E); cross (LT,LB,RT,RB); bend (T,B); corner (W,S).
struct Vertex {
    VType type = VType::grid;
    RowLabel row;   // grid row; cross top-left strand j; bend top row
    RowLabel row2;  // cross bottom-left strand k
    int col = 0;    // column label (grid)
    int grid_r = -1, grid_c = -1;
    std::array<int, 4> e{-1, -1, -1, -1};
    double x = 0, y = 0;
};

struct Config {
    std::array<uint8_t, 4> bits;
    Kind kind;
};
const std::vector<Config>& configs_for(VType t);
int arity(VType t);

struct Diagram {
    std::vector<Vertex> vertices;  // processing order
    std::vector<Edge> edges;

    int add_edge(bool horizontal, std::string name = "", int8_t fixed = -1);
    int add_vertex(const Vertex& v);  // attaches endpoints
    int edge_by_name(const std::string& name) const;
};

struct ModelSpec {
    Family family;
    StrictPartition lambda;
    int n = 0;
    std::vector<RowLabel> rows;  // top to bottom
    std::vector<int> columns;    // labels left to right
    int full_columns = 0;        // the rest (at most one) is the half column
    bool has_half_column = false;
    std::vector<std::pair<int, int>> bends;  // (top row index, bottom row index)
    bool has_corner = false;
    int central_row = -1;                    // row index, or -1
    Diagram diagram;
    std::vector<std::vector<int>> grid;      // [row][col] -> vertex id or -1

    nlohmann::json to_json() const;
};

ModelSpec build_model(Family f, const StrictPartition& lambda);
int vertex_count(const ModelSpec& spec);

struct Caps {
    int max_n = 4;
    int max_cols = 8;
    static Caps from_env();
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_caps(Family f, const StrictPartition& lambda, const Caps& caps);

}  // namespace bentice
