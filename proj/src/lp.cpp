#include "lp.hpp"

#include <stdexcept>

namespace satake::detail {

namespace {

// Tableau layout follows the usual dictionary form: rows 0..m-1 are the basic
// variables, row m the objective, row m+1 the phase-one objective; column n is
// the auxiliary variable x0 and column n+1 the right-hand side.
class Tableau {
public:
    Tableau(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c)
        : m_(static_cast<int>(b.size())),
          n_(static_cast<int>(c.size())),
          basic_(m_),
          nonbasic_(n_ + 1),
          d_(m_ + 2, RationalVector(n_ + 2)) {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            d_[i][n_] = -1;
            d_[i][n_ + 1] = b[i];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            d_[m_][j] = -c[j];
        }
        nonbasic_[n_] = -1;
        d_[m_ + 1][n_] = 1;
    }

    LpResult solve() {
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
        if (m_ > 0 && d_[r][n_ + 1].sign() < 0) {
            pivot(r, n_);
            if (!run(1) || d_[m_ + 1][n_ + 1].sign() < 0) return {LpResult::Status::Infeasible, 0, {}};
            for (int i = 0; i < m_; ++i) {
                if (basic_[i] != -1) continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j)
                    if (!d_[i][j].is_zero() && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
                if (s != -1) pivot(i, s);
            }
        }
        if (!run(2)) return {LpResult::Status::Unbounded, 0, {}};
        RationalVector x(n_);
        for (int i = 0; i < m_; ++i)
            if (basic_[i] >= 0 && basic_[i] < n_) x[basic_[i]] = d_[i][n_ + 1];
        return {LpResult::Status::Optimal, d_[m_][n_ + 1], x};
    }

private:
    void pivot(int r, int s) {
        const Rational inv = Rational(1) / d_[r][s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || d_[i][s].is_zero()) continue;
            const Rational f = d_[i][s] * inv;
            for (int j = 0; j < n_ + 2; ++j)
                if (j != s && !d_[r][j].is_zero()) d_[i][j] -= d_[r][j] * f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s) d_[r][j] *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r) d_[i][s] *= -inv;
        d_[r][s] = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    // Bland's rule: entering variable of smallest index with negative reduced
    // cost, leaving row by minimum ratio with ties broken by smallest index.
    bool run(int phase) {
        const int x = phase == 1 ? m_ + 1 : m_;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasic_[j] == -1) continue;
                if (d_[x][j].sign() < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
            }
            if (s == -1) return true;
            int r = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s].sign() <= 0) continue;
                Rational ratio = d_[i][n_ + 1] / d_[i][s];
                if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }

    int m_, n_;
    std::vector<int> basic_, nonbasic_;
    std::vector<RationalVector> d_;
};

}  // namespace

LpResult maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
    if (a.size() != b.size()) throw std::invalid_argument("constraint/bound size mismatch");
    for (auto& row : a)
        if (row.size() != c.size()) throw std::invalid_argument("constraint width mismatch");
    return Tableau(a, b, c).solve();
}

}  // namespace satake::detail
