#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "codegraph/field.hpp"

namespace codegraph {

using Vec = std::vector<Elem>;

// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<Elem>& data() const { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank;
};

// Unique reduced row echelon form: pivots are 1, pivot columns cleared,
// pivot columns strictly increasing, zero rows at the bottom.
RrefResult rref(const Matrix& m);

// A k-dimensional subspace of F_q^n in canonical (RREF) form; doubles as
// a linear [n,k]_q code with the basis as generator matrix. Immutable.
class Subspace {
public:
    static Subspace from_rows(FieldPtr field, std::size_t n,
                              const std::vector<Vec>& rows);
    static Subspace from_matrix(const Matrix& m);
    static Subspace full_space(FieldPtr field, std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const Matrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const {
        return n_ == o.n_ && k_ == o.k_ && basis_.data() == o.basis_.data();
    }
    bool operator<(const Subspace& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (k_ != o.k_) return k_ < o.k_;
        return basis_.data() < o.basis_.data();
    }

private:
    Subspace(Matrix basis, std::size_t n, std::size_t k)
        : basis_(std::move(basis)), n_(n), k_(k) {}

    Matrix basis_;  // k x n, RREF
    std::size_t n_, k_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const {
        std::size_t h = s.k() * 1000003u + s.n();
        for (Elem e : s.basis().data()) h = h * 1315423911u + e + 1;
        return h;
    }
};

std::size_t intersection_dim(const Subspace& x, const Subspace& y);

// The canonical subspace X ∩ Y (Zassenhaus).
Subspace intersection(const Subspace& x, const Subspace& y);

Subspace sum(const Subspace& x, const Subspace& y);

bool contains_vector(const Subspace& x, std::span<const Elem> v);
bool contains_subspace(const Subspace& x, const Subspace& s);

// Span of s plus one extra vector; equals s when v already lies in it.
Subspace extend(const Subspace& s, std::span<const Elem> v);

// All [k]_q hyperplanes ((k-1)-subspaces) of X, one per dual line, in the
// deterministic normalized-functional order.
std::vector<Subspace> hyperplanes_of(const Subspace& x);

// Projective representatives of the [k]_q lines of X: the vectors
// c · basis where c runs over the tuples in F_q^k with first nonzero
// coordinate 1, low index varying fastest.
std::vector<Vec> lines_of(const Subspace& x);

std::size_t weight(std::span<const Elem> v);

// Calls fn for every k-subspace of F_q^n, enumerated by pivot-column
// combination then free-entry odometer; deterministic order.
void enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t k,
                         const std::function<void(const Subspace&)>& fn);

}  // namespace codegraph
