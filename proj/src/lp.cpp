#include "ksg/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "ksg/colorer.hpp"

namespace ksg {

void LinearProgram::add_row(const std::vector<Rational>& a, const Rational& b, bool eq) {
    if (static_cast<int>(a.size()) != nvars) throw std::invalid_argument("LinearProgram: row width mismatch");
    rows.push_back(a);
    rhs.push_back(b);
    is_eq.push_back(eq);
}

namespace {

// Dense tableau simplex. Columns: structural vars, one slack per inequality
// row, one artificial per equality row, then the rhs. Every rhs in the
// polytopes built here is nonnegative, so slacks plus artificials form the
// starting basis directly. Pivot choice is most-negative reduced cost with a
// Bland fallback after a run of degenerate pivots, which keeps the method
// finite and deterministic.
class Tableau {
public:
    Tableau(const LinearProgram& lp) : lp_(lp) {
        m_ = static_cast<int>(lp.rows.size());
        slack_col_.assign(m_, -1);
        art_col_.assign(m_, -1);
        int nslack = 0, nart = 0;
        for (int i = 0; i < m_; ++i) (lp.is_eq[i] ? nart : nslack)++;
        cols_ = lp.nvars + nslack + nart;
        nslack_ = nslack;
        t_.assign(m_ + 1, std::vector<Rational>(cols_ + 1));
        basis_.assign(m_, -1);
        int sl = 0, ar = 0;
        for (int i = 0; i < m_; ++i) {
            Rational sign = lp.rhs[i] >= Rational(0) ? Rational(1) : Rational(-1);
            sign_.push_back(sign);
            for (int j = 0; j < lp.nvars; ++j) t_[i][j] = lp.rows[i][j] * sign;
            t_[i][cols_] = lp.rhs[i] * sign;
            if (lp.is_eq[i]) {
                art_col_[i] = lp.nvars + nslack + ar++;
                t_[i][art_col_[i]] = Rational(1);
                basis_[i] = art_col_[i];
            } else {
                slack_col_[i] = lp.nvars + sl++;
                t_[i][slack_col_[i]] = sign;
                if (sign.sign() > 0) {
                    basis_[i] = slack_col_[i];
                } else {
                    // negative slack cannot start basic; use an artificial
                    art_col_[i] = lp.nvars + nslack + ar++;
                    t_[i][art_col_[i]] = Rational(1);
                    basis_[i] = art_col_[i];
                }
            }
        }
        // trim unused artificial columns (possible when a flipped inequality
        // claimed one): cols_ already counts the worst case, harmless
    }

    bool phase1(int& pivots) {
        bool any_art = false;
        std::vector<Rational> cost(cols_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (art_col_[i] >= 0) {
                cost[art_col_[i]] = Rational(-1);
                any_art = true;
            }
        if (!any_art) return true;
        set_cost(cost);
        run(pivots, lp_.nvars + nslack_ + 1000000);
        if (t_[m_][cols_].sign() != 0) return false;
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < lp_.nvars + nslack_) continue;
            int enter = -1;
            for (int j = 0; j < lp_.nvars + nslack_; ++j)
                if (!t_[i][j].is_zero()) {
                    enter = j;
                    break;
                }
            if (enter >= 0) {
                pivot(i, enter);
                ++pivots;
            }
        }
        return true;
    }

    void phase2(const std::vector<Rational>& objective, int& pivots) {
        std::vector<Rational> cost(cols_, Rational(0));
        for (int j = 0; j < lp_.nvars; ++j) cost[j] = objective[j];
        set_cost(cost);
        run(pivots, lp_.nvars + nslack_);  // artificials may not re-enter
    }

    Rational objective_value() const { return t_[m_][cols_]; }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(lp_.nvars, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < lp_.nvars) x[basis_[i]] = t_[i][cols_];
        return x;
    }

    // dual multipliers of the original rows at phase-I optimum
    std::vector<Rational> farkas_ray() const {
        std::vector<Rational> y(m_);
        for (int i = 0; i < m_; ++i) {
            if (art_col_[i] >= 0)
                y[i] = (t_[m_][art_col_[i]] - Rational(1)) * sign_[i];
            else
                y[i] = t_[m_][slack_col_[i]];  // slack column equals sign * e_i, signs cancel
        }
        return y;
    }

private:
    const LinearProgram& lp_;
    int m_ = 0, cols_ = 0, nslack_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_, slack_col_, art_col_;
    std::vector<Rational> sign_;

    void set_cost(const std::vector<Rational>& cost) {
        for (int j = 0; j <= cols_; ++j) t_[m_][j] = Rational(0);
        for (int j = 0; j < cols_; ++j) t_[m_][j] = -cost[j];
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb.is_zero()) continue;
            for (int j = 0; j <= cols_; ++j) t_[m_][j] += cb * t_[i][j];
        }
    }

    void pivot(int row, int col) {
        Rational p = t_[row][col];
        for (int j = 0; j <= cols_; ++j)
            if (!t_[row][j].is_zero()) t_[row][j] /= p;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            const Rational f = t_[i][col];
            if (f.is_zero()) continue;
            for (int j = 0; j <= cols_; ++j) {
                if (t_[row][j].is_zero()) continue;
                t_[i][j] -= f * t_[row][j];
            }
        }
        basis_[row] = col;
    }

    void run(int& pivots, int enter_limit) {
        int limit = std::min(enter_limit, cols_);
        int degenerate_streak = 0;
        for (;;) {
            Rational before = t_[m_][cols_];
            int enter = -1;
            if (degenerate_streak < 12) {
                // Dantzig: most negative cost-row entry, lowest index on ties
                for (int j = 0; j < limit; ++j)
                    if (t_[m_][j].sign() < 0 && (enter < 0 || t_[m_][j] < t_[m_][enter])) enter = j;
            } else {
                // Bland: lowest-index eligible column (anti-cycling)
                for (int j = 0; j < limit; ++j)
                    if (t_[m_][j].sign() < 0) {
                        enter = j;
                        break;
                    }
            }
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter].sign() <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) throw std::runtime_error("simplex: unbounded (polytope rows missing?)");
            pivot(leave, enter);
            ++pivots;
            if (t_[m_][cols_] == before)
                ++degenerate_streak;
            else
                degenerate_streak = 0;
        }
    }
};

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& y) {
    if (static_cast<int>(y.size()) != static_cast<int>(lp.rows.size())) return false;
    for (size_t i = 0; i < y.size(); ++i)
        if (!lp.is_eq[i] && y[i].sign() < 0) return false;
    for (int j = 0; j < lp.nvars; ++j) {
        Rational s;
        for (size_t i = 0; i < y.size(); ++i)
            if (!y[i].is_zero() && !lp.rows[i][j].is_zero()) s += y[i] * lp.rows[i][j];
        if (s.sign() < 0) return false;  // need y^T A >= 0 against x >= 0
    }
    Rational yb;
    for (size_t i = 0; i < y.size(); ++i) yb += y[i] * lp.rhs[i];
    return yb.sign() < 0;
}

std::vector<Rational> lowest_terms_ray(std::vector<Rational> y) {
    BigInt den(1);
    for (const auto& r : y) den = den * r.den() / BigInt::gcd(den, r.den());
    BigInt g(0);
    for (const auto& r : y) g = BigInt::gcd(g, r.num() * (den / r.den()));
    if (g.is_zero()) return y;
    for (auto& r : y) r = Rational(r.num() * (den / r.den()) / g, BigInt(1));
    return y;
}

LPResult solve_lp(const LinearProgram& lp, const std::vector<Rational>& objective) {
    LPResult res;
    Tableau t(lp);
    if (!t.phase1(res.pivots)) {
        res.status = LPStatus::Infeasible;
        std::vector<Rational> y = t.farkas_ray();
        if (verify_farkas(lp, y)) res.farkas = lowest_terms_ray(y);
        return res;
    }
    t.phase2(objective, res.pivots);
    res.status = LPStatus::Optimal;
    res.optimum = t.objective_value();
    res.primal.values = t.primal();
    return res;
}

LinearProgram permuted(const LinearProgram& lp) {
    LinearProgram out;
    out.nvars = lp.nvars;
    size_t m = lp.rows.size();
    for (size_t k = 0; k < m; ++k) {
        size_t i = m - 1 - k;
        out.add_row(lp.rows[i], lp.rhs[i], lp.is_eq[i]);
    }
    return out;
}

}  // namespace

LPResult simplex_maximize(const LinearProgram& lp, const std::vector<Rational>& objective) {
    if (static_cast<int>(objective.size()) != lp.nvars)
        throw std::invalid_argument("simplex_maximize: objective width mismatch");
    return solve_lp(lp, objective);
}

LinearProgram assignment_polytope(const Graph& g, const std::vector<std::pair<int, int>>& pins) {
    LinearProgram lp;
    lp.nvars = g.n();
    CliqueReport rep = maximal_cliques(g);
    for (const auto& q : rep.maximal_cliques) {
        std::vector<Rational> row(g.n(), Rational(0));
        for (int v : q) row[v] = Rational(1);
        lp.add_row(row, Rational(1), static_cast<int>(q.size()) == rep.omega);
    }
    // exclusivity graph cliques: a set of pairwise-exclusive vertices carries
    // at most one unit of weight in the abstracted model
    if (!g.exclusive_pairs().empty()) {
        Graph ex(g.n());
        for (auto [a, b] : g.exclusive_pairs()) ex.add_edge(a, b);
        for (const auto& q : maximal_cliques(ex).maximal_cliques) {
            if (q.size() < 2) continue;
            std::vector<Rational> row(g.n(), Rational(0));
            for (int v : q) row[v] = Rational(1);
            lp.add_row(row, Rational(1), false);
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        std::vector<Rational> row(g.n(), Rational(0));
        row[v] = Rational(1);
        lp.add_row(row, Rational(1), false);
    }
    for (auto [v, val] : pins) {
        if (v < 0 || v >= g.n() || (val != 0 && val != 1))
            throw std::invalid_argument("assignment_polytope: bad pin");
        std::vector<Rational> row(g.n(), Rational(0));
        row[v] = Rational(1);
        lp.add_row(row, Rational(val), true);
    }
    return lp;
}

LPResult lp_maximize(const Graph& g, const std::vector<Rational>& objective,
                     const std::vector<std::pair<int, int>>& pins) {
    LinearProgram lp = assignment_polytope(g, pins);
    LPResult res = simplex_maximize(lp, objective);
    if (res.status == LPStatus::Infeasible && res.farkas.empty()) {
        // no machine-checked certificate came out: fall back to an
        // independent re-solve with permuted constraint order
        LPResult again = simplex_maximize(permuted(lp), objective);
        if (again.status != LPStatus::Infeasible)
            throw std::runtime_error("lp_maximize: infeasibility verdict failed the permuted re-solve");
        res.farkas = again.farkas;
    }
    return res;
}

bool lp_feasible(const Graph& g, const std::vector<std::pair<int, int>>& pins) {
    std::vector<Rational> zero(g.n(), Rational(0));
    return lp_maximize(g, zero, pins).status == LPStatus::Optimal;
}

ExtendedGadgetCheck is_extended_gadget(const Graph& g, int v1, int v2) {
    if (v1 == v2 || v1 < 0 || v2 < 0 || v1 >= g.n() || v2 >= g.n())
        throw std::invalid_argument("is_extended_gadget: bad vertex pair");
    if (g.adjacent(v1, v2)) throw std::invalid_argument("is_extended_gadget: adjacent pair");
    ExtendedGadgetCheck out;
    out.base_colorable = solve(g).status == SolveStatus::Colorable;
    std::vector<Rational> zero(g.n(), Rational(0));
    LPResult pinned = lp_maximize(g, zero, {{v1, 1}, {v2, 1}});
    if (pinned.status == LPStatus::Optimal) {
        out.counterexample = pinned.primal;
        return out;
    }
    out.farkas = pinned.farkas;
    out.is_extended_gadget = out.base_colorable;
    return out;
}

std::array<std::array<bool, 2>, 2> indeterminacy_table(const Graph& g, int v1, int v2) {
    if (v1 == v2 || g.adjacent(v1, v2)) throw std::invalid_argument("indeterminacy_table: bad pair");
    std::array<std::array<bool, 2>, 2> t;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) t[a][b] = lp_feasible(g, {{v1, a}, {v2, b}});
    return t;
}

}  // namespace ksg
