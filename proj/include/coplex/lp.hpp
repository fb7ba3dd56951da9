#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "coplex/chordal.hpp"
#include "coplex/graph.hpp"
#include "coplex/structures.hpp"

namespace coplex {

enum class ColKind { x, t, p };

struct Column {
    ColKind kind;
    VertexSet set;
    Rat objective;
    std::vector<std::pair<int, Rat>> coeffs;  // sparse (row index, value)
};

enum class RowKind { clique, star };

struct Row {
    RowKind kind;
    int index;  // clique index, or vertex id for star rows
    Rat rhs;
};

struct DualValues {
    std::vector<Rat> lambda;  // per clique row, in CliqueSet order
    std::vector<Rat> mu;      // per vertex, 1-indexed
};

// Maximization master over x/t/p columns with <= rows:
//   clique rows:  x(K) + sum over t,p with i = |set ∩ K| >= 1 of -(i-1)  <= 1
//   star rows:    -x_v + sum of t,p containing v                         <= 0
// Path columns may meet each clique at most twice.
struct MasterModel {
    int n = 0;
    CliqueSet cliques;
    std::vector<Row> rows;        // clique rows first, then star rows
    std::vector<Column> columns;  // x, then t, then p in admission order
    std::map<VertexSet, int> path_columns;  // key -> column index

    int row_count() const { return static_cast<int>(rows.size()); }
    int column_count() const { return static_cast<int>(columns.size()); }

    Column make_column(ColKind kind, const VertexSet& set, Rat objective) const;
    bool has_path_column(const VertexSet& key) const;
    int add_path_column(const VertexSet& key);  // appends, returns index
};

MasterModel build_master(const Graph& g, const CliqueSet& k,
                         const std::vector<VertexSet>& triangles,
                         const std::vector<InducedPath>& paths);

// Basis entries: column index j >= 0, or -(r+1) for the slack of row r.
// Stable under column appends, which is what the warm start relies on.
struct Basis {
    std::vector<int> entries;  // one per row
    bool operator==(const Basis&) const = default;
};

struct LpSolution {
    enum class Status { optimal, unbounded };
    Status status = Status::optimal;
    std::vector<Rat> primal;  // per column
    std::vector<Rat> dual;    // per row, >= 0 at optimality
    Basis basis;
    Rat objective;
    long pivots = 0;
};

// Exact primal simplex, Bland's smallest-index rule throughout; requires
// nonnegative right-hand sides (every master has rhs 0 or 1). Deterministic.
// An optional warm basis is re-established by exact pivoting and silently
// replaced by the slack basis if it turned out singular.
LpSolution solve_lp(const MasterModel& m, const Basis* warm = nullptr,
                    long max_pivots = 1'000'000);

DualValues duals_of(const MasterModel& m, const LpSolution& s);

// c_j - dual . column, the kernel-side ground truth for pricing.
Rat reduced_cost(const MasterModel& m, const DualValues& duals, const Column& candidate);

// CPLEX LP text dump; non-integer values get their exact fraction in a comment.
void write_lp(const MasterModel& m, std::ostream& out);

}  // namespace coplex
