#include "coplex/verify.hpp"

#include <algorithm>
#include <random>

#include "coplex/chordal.hpp"
#include "coplex/structures.hpp"

namespace coplex {

static std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

FractionalPointReport check_c4_fractional_point() {
    Graph c4(4);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(4, 1);

    FractionalPointReport rep;
    const CliqueSet cliques = maximal_cliques_general(c4);  // the 4 edges
    const ComponentCatalog cat = enumerate_catalog(c4);
    rep.model = build_master(c4, cliques, cat.triangles, cat.paths);
    const MasterModel& m = rep.model;
    rep.variable_count = m.column_count();

    // x = 1/2 on every vertex, 1/2 on the path {3,4}, all else 0.
    rep.point.assign(m.column_count(), Rat(0));
    for (int v = 1; v <= 4; ++v) rep.point[v - 1] = rat(1, 2);
    rep.point[m.path_columns.at({3, 4})] = rat(1, 2);

    // Row activities: feasibility, and equality marks a tight inequality.
    std::vector<std::vector<Rat>> tight_normals;
    rep.feasible = true;
    for (int r = 0; r < m.row_count(); ++r) {
        std::vector<Rat> normal(m.column_count(), Rat(0));
        for (int j = 0; j < m.column_count(); ++j)
            for (const auto& [rr, v] : m.columns[j].coeffs)
                if (rr == r) normal[j] = v;
        Rat activity(0);
        for (int j = 0; j < m.column_count(); ++j) activity += normal[j] * rep.point[j];
        if (activity > m.rows[r].rhs) {
            rep.feasible = false;
            rep.failures.push_back("row " + std::to_string(r) + " violated");
        } else if (activity == m.rows[r].rhs) {
            const Row& row = m.rows[r];
            rep.tight.push_back(row.kind == RowKind::clique
                                    ? "clique " + set_str(m.cliques.cliques[row.index])
                                    : "star " + std::to_string(row.index));
            tight_normals.push_back(std::move(normal));
        }
    }
    // Nonnegativity is valid for every variable; tight exactly on the zeros.
    for (int j = 0; j < m.column_count(); ++j) {
        if (rep.point[j] < 0) {
            rep.feasible = false;
            rep.failures.push_back("negative coordinate " + std::to_string(j));
        } else if (rep.point[j] == 0) {
            rep.tight.push_back("nonneg " + set_str(m.columns[j].set));
            std::vector<Rat> normal(m.column_count(), Rat(0));
            normal[j] = -1;
            tight_normals.push_back(std::move(normal));
        }
    }

    rep.tight_rank = matrix_rank(tight_normals);
    rep.fractional = std::any_of(rep.point.begin(), rep.point.end(),
                                 [](const Rat& v) { return !is_integer(v); });

    if (!rep.feasible) rep.failures.push_back("point is not feasible");
    if (rep.tight_rank != rep.variable_count)
        rep.failures.push_back("tight system rank " + std::to_string(rep.tight_rank) +
                               " != " + std::to_string(rep.variable_count));
    if (!rep.fractional) rep.failures.push_back("point is not fractional");
    return rep;
}

StressReport integrality_stress(const Graph& g, int trials, std::uint64_t seed,
                                bool randomize_tp, long cap) {
    const auto order = peo(g);
    const CliqueSet cliques =
        order ? maximal_cliques_chordal(g, *order) : maximal_cliques_general(g);
    const ComponentCatalog cat = enumerate_catalog(g, cap);
    MasterModel m = build_master(g, cliques, cat.triangles, cat.paths);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 6);

    StressReport rep;
    Basis warm;
    bool have_warm = false;
    for (int trial = 0; trial < trials; ++trial) {
        for (auto& col : m.columns) {
            if (col.kind == ColKind::x || randomize_tp)
                col.objective = rat(num(rng), den(rng));
        }
        const LpSolution sol = solve_lp(m, have_warm ? &warm : nullptr);
        warm = sol.basis;
        have_warm = true;
        ++rep.trials;
        if (!std::all_of(sol.primal.begin(), sol.primal.end(), is_zero_or_one))
            ++rep.fractional_hits;
    }
    return rep;
}

}  // namespace coplex
