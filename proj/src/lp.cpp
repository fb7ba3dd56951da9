#include "coplex/lp.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace coplex {

// --- model -----------------------------------------------------------------

Column MasterModel::make_column(ColKind kind, const VertexSet& set, Rat objective) const {
    if (!is_vertex_set(set)) throw std::invalid_argument("column set is not a vertex set");
    Column col{kind, set, std::move(objective), {}};
    const int nk = cliques.size();
    for (int i = 0; i < nk; ++i) {
        const auto& k = cliques.cliques[i];
        int meet = 0;
        for (int v : set)
            if (std::binary_search(k.begin(), k.end(), v)) ++meet;
        if (kind == ColKind::x) {
            if (meet == 1) col.coeffs.emplace_back(i, Rat(1));
        } else {
            if (kind == ColKind::p && meet > 2)
                throw std::invalid_argument("path column meets a clique " +
                                            std::to_string(meet) + " times");
            if (meet >= 2) col.coeffs.emplace_back(i, Rat(1 - meet));
        }
    }
    if (kind == ColKind::x) {
        col.coeffs.emplace_back(nk + set[0] - 1, Rat(-1));
    } else {
        for (int v : set) col.coeffs.emplace_back(nk + v - 1, Rat(1));
    }
    return col;
}

bool MasterModel::has_path_column(const VertexSet& key) const {
    return path_columns.count(key) > 0;
}

int MasterModel::add_path_column(const VertexSet& key) {
    if (has_path_column(key)) throw std::invalid_argument("duplicate path column");
    columns.push_back(make_column(ColKind::p, key, Rat(0)));
    const int idx = column_count() - 1;
    path_columns.emplace(key, idx);
    return idx;
}

MasterModel build_master(const Graph& g, const CliqueSet& k,
                         const std::vector<VertexSet>& triangles,
                         const std::vector<InducedPath>& paths) {
    MasterModel m;
    m.n = g.vertex_count();
    m.cliques = k;
    for (int i = 0; i < k.size(); ++i) m.rows.push_back(Row{RowKind::clique, i, Rat(1)});
    for (int v = 1; v <= m.n; ++v) m.rows.push_back(Row{RowKind::star, v, Rat(0)});
    for (int v = 1; v <= m.n; ++v)
        m.columns.push_back(m.make_column(ColKind::x, {v}, g.weight(v)));
    for (const auto& t : triangles) m.columns.push_back(m.make_column(ColKind::t, t, Rat(0)));
    for (const auto& p : paths) m.add_path_column(p.key);
    return m;
}

// --- simplex ---------------------------------------------------------------

namespace {

// Dense tableau over exact rationals. Internal variable ids: structural
// columns 0..N-1, slack of row r is N+r. The z-row holds reduced costs.
struct Tableau {
    int ncols, nrows;
    std::vector<std::vector<Rat>> a;  // nrows x (N + M), slack part included
    std::vector<Rat> rhs;
    std::vector<Rat> zrow;  // N + M reduced costs
    Rat zrhs;               // -objective
    std::vector<int> basis; // internal id per row

    Tableau(const MasterModel& m)
        : ncols(m.column_count()), nrows(m.row_count()),
          a(nrows, std::vector<Rat>(ncols + nrows, Rat(0))), rhs(nrows),
          zrow(ncols + nrows, Rat(0)), zrhs(0), basis(nrows) {
        for (int r = 0; r < nrows; ++r) {
            rhs[r] = m.rows[r].rhs;
            if (rhs[r] < 0)
                throw std::invalid_argument("kernel requires nonnegative right-hand sides");
            a[r][ncols + r] = 1;
            basis[r] = ncols + r;
        }
        for (int j = 0; j < ncols; ++j) {
            for (const auto& [r, v] : m.columns[j].coeffs) a[r][j] = v;
            zrow[j] = m.columns[j].objective;
        }
    }

    void pivot(int row, int col) {
        const Rat p = a[row][col];
        for (auto& v : a[row]) v /= p;
        rhs[row] /= p;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int j = 0; j < ncols + nrows; ++j) a[r][j] -= f * a[row][j];
            rhs[r] -= f * rhs[row];
        }
        if (zrow[col] != 0) {
            const Rat f = zrow[col];
            for (int j = 0; j < ncols + nrows; ++j) zrow[j] -= f * a[row][j];
            zrhs -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Re-establish a basis by Gauss-Jordan; false if it is singular.
    bool restore(const std::vector<int>& target) {
        std::vector<bool> claimed(nrows, false);
        for (int var : target) {
            int row = -1;
            for (int r = 0; r < nrows; ++r)
                if (!claimed[r] && a[r][var] != 0 &&
                    (basis[r] == var || std::find(target.begin(), target.end(), basis[r]) ==
                                            target.end())) {
                    row = r;
                    break;
                }
            if (row < 0) return false;
            pivot(row, var);
            claimed[row] = true;
        }
        for (const Rat& b : rhs)
            if (b < 0) return false;  // stale basis no longer primal feasible
        return true;
    }
};

}  // namespace

LpSolution solve_lp(const MasterModel& m, const Basis* warm, long max_pivots) {
    Tableau t(m);
    const int total = t.ncols + t.nrows;
    if (warm) {
        if (static_cast<int>(warm->entries.size()) != t.nrows)
            throw std::invalid_argument("warm basis has wrong size");
        std::vector<int> target;
        for (int e : warm->entries) {
            const int var = e >= 0 ? e : t.ncols + (-e - 1);
            if (var < 0 || var >= total) throw std::invalid_argument("warm basis out of range");
            target.push_back(var);
        }
        Tableau fresh(m);
        if (fresh.restore(target)) t = std::move(fresh);
    }

    LpSolution sol;
    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (t.zrow[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;  // optimal
        int leave = -1;
        Rat best_ratio;
        for (int r = 0; r < t.nrows; ++r) {
            if (t.a[r][enter] <= 0) continue;
            Rat ratio = t.rhs[r] / t.a[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            sol.status = LpSolution::Status::unbounded;
            return sol;
        }
        t.pivot(leave, enter);
        if (++sol.pivots > max_pivots)
            throw std::runtime_error("simplex exceeded pivot bound " +
                                     std::to_string(max_pivots));
    }

    sol.status = LpSolution::Status::optimal;
    sol.primal.assign(t.ncols, Rat(0));
    for (int r = 0; r < t.nrows; ++r)
        if (t.basis[r] < t.ncols) sol.primal[t.basis[r]] = t.rhs[r];
    sol.dual.reserve(t.nrows);
    for (int r = 0; r < t.nrows; ++r) sol.dual.push_back(-t.zrow[t.ncols + r]);
    sol.objective = -t.zrhs;
    for (int r = 0; r < t.nrows; ++r)
        sol.basis.entries.push_back(t.basis[r] < t.ncols ? t.basis[r]
                                                         : -(t.basis[r] - t.ncols + 1));
    return sol;
}

DualValues duals_of(const MasterModel& m, const LpSolution& s) {
    DualValues d;
    d.mu.assign(m.n + 1, Rat(0));
    for (int r = 0; r < m.row_count(); ++r) {
        if (m.rows[r].kind == RowKind::clique)
            d.lambda.push_back(s.dual[r]);
        else
            d.mu[m.rows[r].index] = s.dual[r];
    }
    return d;
}

Rat reduced_cost(const MasterModel& m, const DualValues& duals, const Column& candidate) {
    Rat rc = candidate.objective;
    for (const auto& [r, v] : candidate.coeffs) {
        const Row& row = m.rows[r];
        rc -= (row.kind == RowKind::clique ? duals.lambda[row.index] : duals.mu[row.index]) * v;
    }
    return rc;
}

// --- LP text dump ----------------------------------------------------------

static std::string column_name(const MasterModel& m, int j) {
    const Column& c = m.columns[j];
    switch (c.kind) {
        case ColKind::x: return "x" + std::to_string(c.set[0]);
        case ColKind::t: return "t" + std::to_string(j);
        default: return "p" + std::to_string(j);
    }
}

static std::string lp_number(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return std::to_string(r.get_d());
}

void write_lp(const MasterModel& m, std::ostream& out) {
    out << "\\ master model: " << m.column_count() << " columns, " << m.row_count()
        << " rows\n";
    for (int j = 0; j < m.column_count(); ++j)
        if (!is_integer(m.columns[j].objective))
            out << "\\ objective of " << column_name(m, j) << " = "
                << rat_str(m.columns[j].objective) << " exactly\n";
    out << "Maximize\n obj:";
    bool first = true;
    for (int j = 0; j < m.column_count(); ++j) {
        const Rat& c = m.columns[j].objective;
        if (c == 0) continue;
        out << (c < 0 ? " - " : first ? " " : " + ") << lp_number(abs(c)) << " "
            << column_name(m, j);
        first = false;
    }
    if (first) out << " 0 x1";
    out << "\nSubject To\n";
    for (int r = 0; r < m.row_count(); ++r) {
        const Row& row = m.rows[r];
        out << (row.kind == RowKind::clique ? " K" : " S") << row.index << ":";
        bool lead = true;
        for (int j = 0; j < m.column_count(); ++j) {
            for (const auto& [rr, v] : m.columns[j].coeffs) {
                if (rr != r) continue;
                out << (v < 0 ? " - " : lead ? " " : " + ") << lp_number(abs(v)) << " "
                    << column_name(m, j);
                lead = false;
            }
        }
        out << " <= " << lp_number(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < m.column_count(); ++j) out << " " << column_name(m, j) << " >= 0\n";
    out << "End\n";
}

}  // namespace coplex
