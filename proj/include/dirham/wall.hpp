#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/graph_io.hpp"
#include "dirham/oracles.hpp"

namespace dirham {

// Cycle and column indices are 0-based: cycle 0 is the innermost one and
// columns 0, 2, 4, ... run outward (cycle i -> i+1) while columns 1, 3, ...
// run inward. Grid vertex (i, j) has id i * 2 * order + j.
struct CylGrid {
    int order = 0;
    Digraph graph;

    Vertex id(int i, int j) const { return i * 2 * order + j; }
};

// Throws std::invalid_argument for order < 1.
CylGrid build_grid(int order);

// Each degree-4 grid vertex v is split into v_in (keeps the grid id) and
// v_out (appended in grid id order) joined by (v_in, v_out).
struct CylWall {
    int order = 0;
    Digraph graph;
    std::vector<Vertex> in_of;   // grid id -> wall vertex taking the in-edges
    std::vector<Vertex> out_of;  // grid id -> wall vertex taking the out-edges
    std::vector<int> layer;      // wall vertex -> cycle index
    std::vector<int> column;     // wall vertex -> column index

    int grid_vertex_count() const { return 2 * order * order; }
    bool is_split(Vertex grid_id) const { return in_of[grid_id] != out_of[grid_id]; }
    // Wall vertices of cycle i in cyclic order starting at column 0.
    std::vector<Vertex> cycle(int i) const;
};

CylWall build_wall(int order);

// Provenance of a host vertex: a wall vertex, or the position-th inserted
// vertex (1-based) on wall edge `edge` (index into wall_edges).
struct VertexOrigin {
    Vertex wall_vertex = -1;
    int edge = -1;
    int position = 0;
};

// Wall ids are preserved; for each wall edge in sorted order its inserted
// vertices are appended.
struct WallSubdivision {
    CylWall wall;
    std::vector<Edge> wall_edges;               // sorted
    std::vector<int> plan;                      // inserted vertices per wall edge
    Digraph graph;
    std::vector<VertexOrigin> provenance;
    std::vector<std::vector<Vertex>> edge_paths;  // per wall edge, endpoints included

    int order() const { return wall.order; }
    // Cycle index of a host vertex, or -1 for the interior of a rung.
    int layer(Vertex v) const;
    bool is_wall_vertex(Vertex v) const { return provenance[v].wall_vertex >= 0; }
    // C^H_i in cyclic order starting at the wall vertex of column 0.
    std::vector<Vertex> host_cycle(int i) const;
};

// Throws std::invalid_argument if the plan has the wrong size or a negative
// entry.
WallSubdivision subdivide_wall(const CylWall& w, const std::vector<int>& plan);

// Contracts every edge path back to a single edge and compares the result
// with the wall, also checking that provenance is complete and consistent.
bool contraction_recovers_wall(const WallSubdivision& h);

struct Segment {
    int cycle = 0;
    std::vector<Vertex> vertices;
    // Internal wall vertices receiving a rung from cycle - 1. For the
    // outermost cycle the segment ends at such a vertex instead.
    std::vector<Vertex> entry_candidates;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

// Segments of C^H_i in cyclic order, starting at the column-0 delimiter.
// For i below the outermost cycle, segments are delimited by the wall
// vertices with a rung to cycle i+1; on the outermost cycle by the vertices
// receiving a rung from cycle i-1. Throws std::invalid_argument for an
// order below 2 or i out of range.
std::vector<Segment> decompose_segments(const WallSubdivision& h, int i);

struct SegmentChoice {
    Segment segment;
    std::vector<Vertex> complement;  // from segment.back() around to segment.front()

    int complement_length() const { return static_cast<int>(complement.size()) - 1; }
};

// Minimum-length segment; ties go to the smallest starting vertex id.
SegmentChoice shortest_segment(const WallSubdivision& h, int i);

struct LongPathExtraction {
    PathWitness path;
    int girth = 0;
    int k = 0;
    long long required = 0;               // girth * k
    std::vector<std::vector<Vertex>> pieces;  // R_i for every cycle i
    std::vector<SegmentChoice> choices;       // per even (0-based) cycle index

    bool meets_bound() const { return static_cast<long long>(path.length()) >= required; }
};

// h must subdivide a wall of odd order 2k + 1 >= 3; throws
// std::invalid_argument otherwise or if the provenance check fails.
LongPathExtraction extract_long_path(const WallSubdivision& h);

// A subdivided wall inside g: embedding[h vertex] = g vertex.
struct WallCertificate {
    WallSubdivision subdivision;
    std::vector<Vertex> embedding;
};

struct WinWinResult {
    SolveStatus status = SolveStatus::no;
    std::optional<PathWitness> witness;
    bool used_certificate = false;
    int girth = 0;
    long long required = 0;  // girth(g) * k
};

// Throws std::invalid_argument for acyclic g, k < 1, or a certificate that
// is not a wall of order 2k + 1 embedded in g.
WinWinResult winwin_longest_path(const Digraph& g, int k, const WallCertificate* certificate,
                                 const SolverBudget& budget = {});

// {"order", "plan", "graph", "wall_edges", "provenance", "layers"}
json to_json(const WallSubdivision& h);
// Rebuilds from "order" and "plan"; if "graph" is present it must match.
WallSubdivision wall_subdivision_from_json(const json& j);
json to_json(const LongPathExtraction& x);
json to_json(const WallCertificate& c);
WallCertificate wall_certificate_from_json(const json& j);

std::string wall_to_dot(const WallSubdivision& h, const PathWitness* overlay = nullptr);

}  // namespace dirham
