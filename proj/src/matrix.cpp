#include "hirz/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hirz/error.hpp"

namespace hirz {

MatQ::MatQ(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

int MatQ::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return (rows_ <= 128 && cols_ <= 128) ? rank_bareiss() : rank_sparse();
}

int MatQ::rank_bareiss() const {
    // Scale each row integral first; row scaling does not change the rank.
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Integer l = 1;
        for (int j = 0; j < cols_; ++j) {
            const Integer d = at(i, j).denominator();
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        m[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) {
            const Rational& q = at(i, j);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                q.numerator() * (l / q.denominator());
        }
    }

    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        // Smallest nonzero pivot keeps the fraction-free growth modest.
        int pr = -1;
        for (int i = r; i < rows_; ++i) {
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) == 0) continue;
            if (pr < 0 || mpz_cmpabs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get_mpz_t(),
                                     m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)].get_mpz_t()) < 0)
                pr = i;
        }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
        const auto& pivot_row = m[static_cast<std::size_t>(r)];
        const Integer& p = pivot_row[static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows_; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const Integer f = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols_; ++j) {
                Integer t = p * row[static_cast<std::size_t>(j)] - f * pivot_row[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

int MatQ::rank_sparse() const {
    // rows as sparse maps, plus a column -> rows occupancy index.
    std::vector<std::map<int, Rational>> row(static_cast<std::size_t>(rows_));
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                row[static_cast<std::size_t>(i)][j] = at(i, j);
                col_rows[static_cast<std::size_t>(j)].insert(i);
            }

    std::set<int> active;
    for (int i = 0; i < rows_; ++i)
        if (!row[static_cast<std::size_t>(i)].empty()) active.insert(i);

    int rank = 0;
    while (!active.empty()) {
        // Pivot on the shortest active row, in its least-occupied column.
        int pr = -1;
        std::size_t best = 0;
        for (int i : active) {
            std::size_t n = row[static_cast<std::size_t>(i)].size();
            if (pr < 0 || n < best) { pr = i; best = n; }
        }
        int pc = -1;
        std::size_t occ = 0;
        for (const auto& [j, v] : row[static_cast<std::size_t>(pr)]) {
            std::size_t n = col_rows[static_cast<std::size_t>(j)].size();
            if (pc < 0 || n < occ) { pc = j; occ = n; }
        }
        ++rank;
        active.erase(pr);
        const Rational pv = row[static_cast<std::size_t>(pr)][pc];

        std::vector<int> victims(col_rows[static_cast<std::size_t>(pc)].begin(),
                                 col_rows[static_cast<std::size_t>(pc)].end());
        for (int i : victims) {
            if (i == pr || !active.count(i)) continue;
            auto& ri = row[static_cast<std::size_t>(i)];
            const Rational f = ri[pc] / pv;
            for (const auto& [j, v] : row[static_cast<std::size_t>(pr)]) {
                auto it = ri.find(j);
                if (it == ri.end()) {
                    Rational nv = -(f * v);
                    if (!nv.is_zero()) {
                        ri[j] = nv;
                        col_rows[static_cast<std::size_t>(j)].insert(i);
                    }
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) {
                        ri.erase(it);
                        col_rows[static_cast<std::size_t>(j)].erase(i);
                    }
                }
            }
            if (ri.empty()) active.erase(i);
        }
        // Retire the pivot row's entries from the occupancy index.
        for (const auto& [j, v] : row[static_cast<std::size_t>(pr)])
            col_rows[static_cast<std::size_t>(j)].erase(pr);
        row[static_cast<std::size_t>(pr)].clear();
    }
    return rank;
}

namespace {

// Plain rational row echelon on an explicit working copy; returns pivot columns.
std::vector<int> echelon(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
        const Rational p = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int j = c; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

bool MatQ::solvable(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DomainError("rhs length does not match matrix rows");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        auto& row = m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(cols_) + 1);
        for (int j = 0; j < cols_; ++j) row[static_cast<std::size_t>(j)] = at(i, j);
        row[static_cast<std::size_t>(cols_)] = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = echelon(m);
    return pivots.empty() || pivots.back() != cols_;
}

std::vector<std::vector<Rational>> MatQ::kernel_basis() const {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        m[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    }
    std::vector<int> pivots = echelon(m);

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
        v[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hirz
