#include "coplex/colgen.hpp"

#include <algorithm>
#include <stdexcept>

#include "coplex/chordal.hpp"

namespace coplex {

static std::vector<InducedPath> single_edge_paths(const Graph& g) {
    std::vector<InducedPath> out;
    for (const auto& [u, v] : g.edges()) out.push_back(InducedPath{{u, v}, {u, v}});
    return out;
}

// Positive-reduced-cost path columns absent from the model, best first; the
// fallback when the oracle's argmax is not usable (paper pricing convention).
static std::vector<std::pair<Rat, VertexSet>> scan_missing_columns(
    const Graph& g, const MasterModel& m, const DualValues& duals, long cap) {
    std::vector<std::pair<Rat, VertexSet>> found;
    for (const auto& p : enumerate_induced_paths(g, cap)) {
        if (m.has_path_column(p.key)) continue;
        Rat rc = reduced_cost(m, duals, m.make_column(ColKind::p, p.key, Rat(0)));
        if (rc > 0) found.emplace_back(std::move(rc), p.key);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    return found;
}

ConnectedSolve solve_connected(const Graph& g, const ColgenConfig& config) {
    auto order = peo(g);
    if (!order) throw std::invalid_argument("input graph is not chordal");
    const CliqueSet cliques = maximal_cliques_chordal(g, *order);

    ConnectedSolve out;
    out.model = build_master(g, cliques, enumerate_triangles(g), single_edge_paths(g));
    MasterModel& m = out.model;

    Basis warm;
    bool have_warm = false;
    Rat prev_objective;
    bool have_prev = false;

    while (true) {
        const LpSolution sol =
            solve_lp(m, config.warm_start && have_warm ? &warm : nullptr, config.max_pivots);
        if (sol.status != LpSolution::Status::optimal)
            throw std::logic_error("master LP reported unbounded; the model is ill-formed");
        if (have_prev && sol.objective < prev_objective)
            throw std::logic_error("restricted master objective decreased");
        prev_objective = sol.objective;
        have_prev = true;
        warm = sol.basis;
        have_warm = true;

        const DualValues duals = duals_of(m, sol);
        ++out.report.iterations;
        IterationLog entry{sol.objective, Rat(0), m.column_count()};

        const PricingWeights pw =
            pricing_weights_from_duals(g, cliques, duals, config.convention);
        auto candidates = top_weight_induced_paths(g, pw, config.columns_per_iteration);

        long admitted = 0;
        bool saw_duplicate = false;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& cand = candidates[i];
            const Column col = m.make_column(ColKind::p, cand.key, Rat(0));
            const Rat rc = reduced_cost(m, duals, col);
            if (config.convention == PricingConvention::dual && rc != cand.value)
                throw std::logic_error("pricing value disagrees with kernel reduced cost");
            if (i == 0) entry.best_reduced_cost = rc;
            if (rc <= 0) continue;
            if (m.has_path_column(cand.key)) {
                saw_duplicate = true;  // unreachable under the dual convention
                continue;
            }
            m.add_path_column(cand.key);
            ++admitted;
        }

        // The paper-formula weights do not rank by reduced cost, so before
        // stopping make sure no improving column was missed.
        if (admitted == 0 &&
            (saw_duplicate || config.convention == PricingConvention::paper)) {
            auto missing = scan_missing_columns(g, m, duals, config.enumeration_cap);
            for (const auto& [rc, key] : missing) {
                if (admitted >= config.columns_per_iteration) break;
                if (admitted == 0) entry.best_reduced_cost = rc;
                m.add_path_column(key);
                ++admitted;
            }
        }

        out.report.columns_added += admitted;
        out.report.log.push_back(std::move(entry));
        if (admitted == 0) {
            out.duals = duals;
            out.lp = sol;
            break;
        }
    }

    for (int j = 0; j < m.column_count(); ++j)
        if (!is_zero_or_one(out.lp.primal[j]))
            throw std::runtime_error("optimal basic solution is not 0/1 at column " +
                                     std::to_string(j) + " = " + rat_str(out.lp.primal[j]) +
                                     "; integrality of the chordal master is violated");

    VertexSet members;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (out.lp.primal[v - 1] == 1) members.push_back(v);
    if (!is_co3plex(g, members))
        throw std::logic_error("extracted solution is not a co-3-plex");
    if (set_weight(g, members) != out.lp.objective)
        throw std::logic_error("solution weight does not match the LP objective");

    out.report.objective = out.lp.objective;
    out.report.solution = make_co3plex(g, members);
    out.report.certificate = CertificateKind::duality;
    return out;
}

ColgenReport solve_co3plex(const Graph& g, const ColgenConfig& config) {
    if (!is_chordal(g)) throw std::invalid_argument("input graph is not chordal");
    const auto comps = connected_components(g);
    if (comps.size() <= 1) return solve_connected(g, config).report;

    ColgenReport merged;
    merged.objective = Rat(0);
    VertexSet members;
    for (const auto& comp : comps) {
        const Graph sub = induced_subgraph(g, comp);
        ColgenReport part = solve_connected(sub, config).report;
        merged.iterations += part.iterations;
        merged.columns_added += part.columns_added;
        merged.objective += part.objective;
        for (auto& e : part.log) merged.log.push_back(std::move(e));
        for (int v : part.solution.members) {
            const VertexSet& lbl = sub.label(v);
            members.insert(members.end(), lbl.begin(), lbl.end());
        }
    }
    std::sort(members.begin(), members.end());
    merged.solution = make_co3plex(g, members);
    if (set_weight(g, members) != merged.objective)
        throw std::logic_error("merged solution weight does not match the objective");
    return merged;
}

bool certify_optimality(const Graph& g, const MasterModel& m, const DualValues& duals,
                        long cap) {
    for (const auto& p : enumerate_induced_paths(g, cap)) {
        if (m.has_path_column(p.key)) continue;
        if (reduced_cost(m, duals, m.make_column(ColKind::p, p.key, Rat(0))) > 0) return false;
    }
    return true;
}

}  // namespace coplex
