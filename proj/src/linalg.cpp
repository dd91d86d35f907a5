#include "codegraph/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace codegraph {

namespace {

void check_same_ambient(const Subspace& x, const Subspace& y) {
    if (x.n() != y.n() || !x.field()->same_as(*y.field()))
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

}  // namespace

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix a = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(pivot, c), a.at(rank, c));
        Elem scale = f.inv(a.at(rank, col));
        if (scale != 1)
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(rank, c) = f.mul(a.at(rank, c), scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col) == 0) continue;
            Elem factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(rank, c)));
        }
        ++rank;
    }
    return {std::move(a), rank};
}

Subspace Subspace::from_matrix(const Matrix& m) {
    auto [red, rank] = rref(m);
    Matrix basis(m.field(), rank, m.cols());
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            basis.at(r, c) = red.at(r, c);
    return Subspace(std::move(basis), m.cols(), rank);
}

Subspace Subspace::from_rows(FieldPtr field, std::size_t n,
                             const std::vector<Vec>& rows) {
    for (const auto& row : rows)
        if (row.size() != n) throw std::invalid_argument("row length mismatch");
    Matrix m(std::move(field), rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
    return from_matrix(m);
}

Subspace Subspace::full_space(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return Subspace(std::move(m), n, n);
}

std::size_t intersection_dim(const Subspace& x, const Subspace& y) {
    check_same_ambient(x, y);
    Matrix stack(x.field(), x.k() + y.k(), x.n());
    for (std::size_t r = 0; r < x.k(); ++r)
        for (std::size_t c = 0; c < x.n(); ++c) stack.at(r, c) = x.basis().at(r, c);
    for (std::size_t r = 0; r < y.k(); ++r)
        for (std::size_t c = 0; c < x.n(); ++c)
            stack.at(x.k() + r, c) = y.basis().at(r, c);
    std::size_t sum_rank = rref(stack).rank;
    return x.k() + y.k() - sum_rank;
}

Subspace intersection(const Subspace& x, const Subspace& y) {
    check_same_ambient(x, y);
    const std::size_t n = x.n();
    // Zassenhaus: reduce [B_x | B_x; B_y | 0]; rows with zero left half
    // carry an intersection basis in the right half.
    Matrix z(x.field(), x.k() + y.k(), 2 * n);
    for (std::size_t r = 0; r < x.k(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z.at(r, c) = x.basis().at(r, c);
            z.at(r, n + c) = x.basis().at(r, c);
        }
    for (std::size_t r = 0; r < y.k(); ++r)
        for (std::size_t c = 0; c < n; ++c) z.at(x.k() + r, c) = y.basis().at(r, c);
    auto [red, rank] = rref(z);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < rank; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (red.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = red.at(r, n + c);
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(x.field(), n, rows);
}

Subspace sum(const Subspace& x, const Subspace& y) {
    check_same_ambient(x, y);
    std::vector<Vec> rows;
    rows.reserve(x.k() + y.k());
    for (std::size_t r = 0; r < x.k(); ++r) {
        auto row = x.basis().row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    for (std::size_t r = 0; r < y.k(); ++r) {
        auto row = y.basis().row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    return Subspace::from_rows(x.field(), x.n(), rows);
}

bool contains_vector(const Subspace& x, std::span<const Elem> v) {
    if (v.size() != x.n()) throw std::invalid_argument("vector length mismatch");
    const Field& f = *x.field();
    Vec w(v.begin(), v.end());
    for (std::size_t r = 0; r < x.k(); ++r) {
        // pivot column of row r: first nonzero entry
        std::size_t pc = 0;
        while (pc < x.n() && x.basis().at(r, pc) == 0) ++pc;
        if (pc == x.n() || w[pc] == 0) continue;
        Elem factor = w[pc];
        for (std::size_t c = pc; c < x.n(); ++c)
            w[c] = f.sub(w[c], f.mul(factor, x.basis().at(r, c)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool contains_subspace(const Subspace& x, const Subspace& s) {
    for (std::size_t r = 0; r < s.k(); ++r)
        if (!contains_vector(x, s.basis().row(r))) return false;
    return true;
}

Subspace extend(const Subspace& s, std::span<const Elem> v) {
    std::vector<Vec> rows;
    rows.reserve(s.k() + 1);
    for (std::size_t r = 0; r < s.k(); ++r) {
        auto row = s.basis().row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    rows.emplace_back(v.begin(), v.end());
    return Subspace::from_rows(s.field(), s.n(), rows);
}

std::vector<Vec> lines_of(const Subspace& x) {
    if (x.k() < 1) throw std::invalid_argument("lines_of needs dimension >= 1");
    const Field& f = *x.field();
    const std::uint32_t q = f.q();
    const std::size_t k = x.k(), n = x.n();
    std::vector<Vec> out;
    std::vector<Elem> c(k, 0);
    // odometer over coefficient tuples, index 0 fastest
    while (true) {
        std::size_t pos = 0;
        while (pos < k && c[pos] == q - 1) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++c[pos];
        std::size_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] != 1) continue;  // one representative per line
        Vec v(n, 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (c[r] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.add(v[j], f.mul(c[r], x.basis().at(r, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Subspace> hyperplanes_of(const Subspace& x) {
    if (x.k() < 1) throw std::invalid_argument("hyperplanes_of needs dimension >= 1");
    const Field& f = *x.field();
    const std::uint32_t q = f.q();
    const std::size_t k = x.k(), n = x.n();
    std::vector<Subspace> out;
    std::vector<Elem> c(k, 0);
    // Dual lines of X in the same normalized-tuple order as lines_of: the
    // functional c kills the hyperplane spanned by e_i - c_i e_j (i != j),
    // j the pivot of c.
    while (true) {
        std::size_t pos = 0;
        while (pos < k && c[pos] == q - 1) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++c[pos];
        std::size_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] != 1) continue;
        std::vector<Vec> rows;
        rows.reserve(k - 1);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == lead) continue;
            Vec v(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                Elem a = x.basis().at(i, j);
                Elem b = f.mul(c[i], x.basis().at(lead, j));
                v[j] = f.sub(a, b);
            }
            rows.push_back(std::move(v));
        }
        out.push_back(Subspace::from_rows(x.field(), n, rows));
    }
    return out;
}

std::size_t weight(std::span<const Elem> v) {
    std::size_t w = 0;
    for (Elem e : v)
        if (e != 0) ++w;
    return w;
}

void enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t k,
                         const std::function<void(const Subspace&)>& fn) {
    if (k > n) throw std::invalid_argument("k exceeds ambient dimension");
    const std::uint32_t q = field->q();
    if (k == 0) {
        fn(Subspace::from_rows(field, n, {}));
        return;
    }
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // free cells: (r, c) with c > pivots[r] and c not a pivot column
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);

        Matrix m(field, k, n);
        for (std::size_t r = 0; r < k; ++r) m.at(r, pivots[r]) = 1;
        std::vector<Elem> vals(free_cells.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                m.at(free_cells[i].first, free_cells[i].second) = vals[i];
            fn(Subspace::from_matrix(m));
            std::size_t pos = 0;
            while (pos < vals.size() && vals[pos] == q - 1) {
                vals[pos] = 0;
                ++pos;
            }
            if (pos == vals.size()) break;
            ++vals[pos];
        }

        // next pivot combination, lexicographic
        std::size_t i = k;
        while (i-- > 0) {
            if (pivots[i] + (k - i) <= n - 1) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace codegraph
