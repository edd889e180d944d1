#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace modulislope::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

/// maximize objective·x subject to rows, x >= 0. An empty objective means
/// a pure feasibility question.
struct Program {
    std::size_t num_vars = 0;
    std::vector<Constraint> rows;
    std::vector<Rational> objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Optimal:
            return "optimal";
        case Status::Infeasible:
            return "infeasible";
        case Status::Unbounded:
            return "unbounded";
    }
    return "?";
}

/// `dual` holds one multiplier per row. For Optimal it proves
/// objective·x <= value; for Infeasible it is a Farkas vector.
struct Solution {
    Status status = Status::Infeasible;
    std::vector<Rational> x;
    Rational value;
    std::vector<Rational> dual;
};

namespace detail {

inline Rational row_dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size() && j < x.size(); ++j)
        if (a[j] != 0 && x[j] != 0) s += a[j] * x[j];
    return s;
}

/// y sign pattern admissible for each row's relation (y >= 0 on <=, y <= 0 on >=).
inline bool dual_signs_ok(const Program& p, const std::vector<Rational>& y) {
    if (y.size() != p.rows.size()) return false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (p.rows[i].rel == Relation::LessEqual && y[i] < 0) return false;
        if (p.rows[i].rel == Relation::GreaterEqual && y[i] > 0) return false;
    }
    return true;
}

inline std::vector<Rational> combine_columns(const Program& p, const std::vector<Rational>& y) {
    std::vector<Rational> out(p.num_vars, Rational(0));
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (y[i] == 0) continue;
        const auto& a = p.rows[i].coeffs;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) out[j] += y[i] * a[j];
    }
    return out;
}

}  // namespace detail

inline bool verify_primal(const Program& p, const std::vector<Rational>& x) {
    if (x.size() != p.num_vars) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (const auto& row : p.rows) {
        const Rational lhs = detail::row_dot(row.coeffs, x);
        if (row.rel == Relation::LessEqual && lhs > row.rhs) return false;
        if (row.rel == Relation::GreaterEqual && lhs < row.rhs) return false;
        if (row.rel == Relation::Equal && lhs != row.rhs) return false;
    }
    return true;
}

/// y^T A >= 0 columnwise, y^T b < 0, with row-wise sign conditions.
inline bool verify_farkas(const Program& p, const std::vector<Rational>& y) {
    if (!detail::dual_signs_ok(p, y)) return false;
    for (const auto& v : detail::combine_columns(p, y))
        if (v < 0) return false;
    Rational yb = 0;
    for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * p.rows[i].rhs;
    return yb < 0;
}

/// y^T A >= c columnwise and y^T b == bound: every feasible x has c·x <= bound.
inline bool verify_dual_bound(const Program& p, const std::vector<Rational>& y, const Rational& bound) {
    if (!detail::dual_signs_ok(p, y)) return false;
    const auto col = detail::combine_columns(p, y);
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        const Rational c = j < p.objective.size() ? p.objective[j] : Rational(0);
        if (col[j] < c) return false;
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * p.rows[i].rhs;
    return yb == bound;
}

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule.
class Tableau {
public:
    explicit Tableau(const Program& p) : prog_(p) {
        m_ = p.rows.size();
        n_ = p.num_vars;
        flip_.assign(m_, false);
        std::vector<Relation> rel(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (p.rows[i].coeffs.size() > n_) throw std::invalid_argument("row longer than variable count");
            rel[i] = p.rows[i].rel;
            if (p.rows[i].rhs < 0) {
                flip_[i] = true;
                if (rel[i] == Relation::LessEqual)
                    rel[i] = Relation::GreaterEqual;
                else if (rel[i] == Relation::GreaterEqual)
                    rel[i] = Relation::LessEqual;
            }
        }
        // Columns: originals, one slack/surplus per inequality, one artificial per >= or = row.
        std::size_t col = n_;
        slack_col_.assign(m_, npos);
        art_col_.assign(m_, npos);
        for (std::size_t i = 0; i < m_; ++i)
            if (rel[i] != Relation::Equal) slack_col_[i] = col++;
        art_begin_ = col;
        for (std::size_t i = 0; i < m_; ++i)
            if (rel[i] != Relation::LessEqual) art_col_[i] = col++;
        cols_ = col;

        t_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(m_, npos);
        unit_col_.assign(m_, npos);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational s = flip_[i] ? Rational(-1) : Rational(1);
            const auto& a = p.rows[i].coeffs;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] != 0) t_[i][j] = s * a[j];
            t_[i][cols_] = s * p.rows[i].rhs;
            if (slack_col_[i] != npos) t_[i][slack_col_[i]] = rel[i] == Relation::LessEqual ? 1 : -1;
            if (art_col_[i] != npos) {
                t_[i][art_col_[i]] = 1;
                basis_[i] = unit_col_[i] = art_col_[i];
            } else {
                basis_[i] = unit_col_[i] = slack_col_[i];
            }
        }
    }

    Solution run() {
        Solution sol;
        // Phase I: minimise the sum of artificials, i.e. maximise its negative.
        std::vector<Rational> phase1(cols_, Rational(0));
        for (std::size_t j = art_begin_; j < cols_; ++j) phase1[j] = -1;
        optimise(phase1, cols_);
        const Rational infeas = objective_value(phase1);
        if (infeas < 0) {
            sol.status = Status::Infeasible;
            sol.dual = original_duals(phase1);
            if (!verify_farkas(prog_, sol.dual)) throw std::logic_error("simplex produced an invalid Farkas certificate");
            return sol;
        }
        drive_out_artificials();

        std::vector<Rational> phase2(cols_, Rational(0));
        for (std::size_t j = 0; j < n_ && j < prog_.objective.size(); ++j) phase2[j] = prog_.objective[j];
        if (!optimise(phase2, art_begin_)) {
            sol.status = Status::Unbounded;
            sol.x = primal();
            return sol;
        }
        sol.status = Status::Optimal;
        sol.x = primal();
        sol.value = objective_value(phase2);
        sol.dual = original_duals(phase2);
        if (!verify_primal(prog_, sol.x)) throw std::logic_error("simplex produced an infeasible point");
        if (!verify_dual_bound(prog_, sol.dual, sol.value))
            throw std::logic_error("simplex produced an invalid optimality certificate");
        return sol;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Rational reduced_cost(const std::vector<Rational>& c, std::size_t j) const {
        Rational r = c[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (t_[i][j] != 0 && c[basis_[i]] != 0) r -= c[basis_[i]] * t_[i][j];
        return r;
    }

    Rational objective_value(const std::vector<Rational>& c) const {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (c[basis_[i]] != 0) v += c[basis_[i]] * t_[i][cols_];
        return v;
    }

    /// Maximises c over columns [0, limit). Returns false when unbounded.
    bool optimise(const std::vector<Rational>& c, std::size_t limit) {
        while (true) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < limit; ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(c, j) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return true;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                const Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == npos) return false;
            pivot(leave, enter);
        }
    }

    bool is_basic(std::size_t j) const {
        for (std::size_t b : basis_)
            if (b == j) return true;
        return false;
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_[r][c];
        for (auto& v : t_[r])
            if (v != 0) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < art_begin_) continue;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (t_[i][j] != 0 && !is_basic(j)) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    /// Simplex multipliers c_B B^{-1}, mapped back to the unflipped rows.
    std::vector<Rational> original_duals(const std::vector<Rational>& c) const {
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t k = 0; k < m_; ++k) {
            Rational v = 0;
            for (std::size_t i = 0; i < m_; ++i)
                if (c[basis_[i]] != 0 && t_[i][unit_col_[k]] != 0) v += c[basis_[i]] * t_[i][unit_col_[k]];
            y[k] = flip_[k] ? Rational(-v) : v;
        }
        return y;
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
        return x;
    }

    const Program& prog_;
    std::size_t m_ = 0, n_ = 0, cols_ = 0, art_begin_ = 0;
    std::vector<bool> flip_;
    std::vector<std::size_t> slack_col_, art_col_, unit_col_, basis_;
    std::vector<std::vector<Rational>> t_;
};

}  // namespace detail

/// Exact solve; every returned certificate has been re-verified.
inline Solution solve(const Program& p) {
    for (const auto& row : p.rows)
        if (row.coeffs.size() > p.num_vars) throw std::invalid_argument("row longer than variable count");
    if (p.objective.size() > p.num_vars) throw std::invalid_argument("objective longer than variable count");
    detail::Tableau t(p);
    return t.run();
}

}  // namespace modulislope::lp
