#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quadres/ring.hpp"

namespace quadres {

/// The completion templates derived from a ring spec:
///   Column(top j over bottom i)   for each generator x_i*x_j, i != j (both orders),
///   RepeatedColumn(i)             for each generator x_i^2,
///   Diamond(i, j), i < j          for each missing mixed product x_i*x_j.
struct Template {
    enum class Kind { Column, RepeatedColumn, Diamond };
    Kind kind;
    int a = 0;  // Column: top label. RepeatedColumn: the label. Diamond: smaller label.
    int b = 0;  // Column: bottom label. RepeatedColumn: same as a. Diamond: larger label.
    auto operator<=>(const Template&) const = default;
};

std::vector<Template> build_template_set(const RingSpec& spec);

/// Directed edge from a level-(L+1) vertex down to a level-L vertex; the sign
/// belongs to the multiplication map sign * x_label.
struct Edge {
    int from = 0;
    int to = 0;
    int label = 0;
    int sign = +1;
    bool operator==(const Edge&) const = default;
};

/// The graded, edge-labeled, signed graph grown level by level. Vertex ids are
/// sequential and level-major, so each level occupies a contiguous id range.
struct Diagram {
    RingSpec spec;
    int initial_label = 0;
    std::vector<int> vertex_level;           // id -> level
    std::vector<std::vector<int>> levels;    // level -> ascending vertex ids
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out_edges; // id -> indices into edges (downward)
    std::vector<std::vector<int>> in_edges;  // id -> indices into edges (from above)

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    std::vector<int> level_counts() const;
    /// Position of a vertex inside its level (ids are contiguous per level).
    int index_in_level(int id) const;
};

/// A prospective new edge: (existing top vertex it will point to, variable label).
struct DemandKey {
    int target = 0;
    int label = 0;
    auto operator<=>(const DemandKey&) const = default;
};

/// Parity constraint between two demand keys coming from one diamond
/// completion: equal means the two new signs must agree, otherwise differ.
struct ParityLink {
    int a = 0;
    int b = 0;  // indices into Demands::keys
    bool equal = false;
};

struct Demands {
    std::vector<DemandKey> keys;   // sorted, unique (identical demands already merged)
    std::vector<ParityLink> links;
};

/// Demands of the current top level: column demands (target v, label j) for
/// every top edge v->w labeled i and every j with x_j*x_i in I, and linked
/// diamond pairs for every two top edges with a common target, distinct
/// sources, distinct labels i, j and x_i*x_j not in I.
Demands collect_demands(const Diagram& d);

/// Union-find closure of key identity and diamond links. Classes are returned
/// as sorted key indices, ordered by their smallest (target, label) key; each
/// class becomes one new vertex whose edges are the keys of the class.
std::vector<std::vector<int>> merge_demands(const Demands& demands);

/// Signs for every key such that each diamond constraint sigma_a * sigma_b =
/// -s_a * s_b holds. Components whose constraints allow an all-positive
/// solution take it; otherwise the negative side is the one holding the
/// smallest (label, target) key. Throws SignConflictError on an odd cycle.
std::vector<int> assign_signs(const Demands& demands);

Diagram init_diagram(const RingSpec& spec, int initial_label);
void extend_level(Diagram& d);
Diagram build_diagram(const RingSpec& spec, int initial_label, int levels);

std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);
std::string diagram_to_dot(const Diagram& d);

}  // namespace quadres
