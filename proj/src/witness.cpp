#include "codegraph/witness.hpp"

#include <stdexcept>

#include "codegraph/analytics.hpp"

namespace codegraph {

namespace {

// The [k]_q vectors of F_q^k with first nonzero coordinate 1, in the
// lines_of tuple order.
std::vector<Vec> normalized_tuples(const FieldPtr& f, std::size_t k) {
    return lines_of(Subspace::full_space(f, k));
}

Vec y_block(std::uint32_t q) {
    Vec y(q + 1, 1);
    y[0] = 0;
    return y;
}

Vec z_block(const Field& f, std::uint32_t q) {
    // (1, 0, -1, -alpha^{-1}, ..., -alpha^{-(q-2)})
    Vec z(q + 1, 0);
    z[0] = 1;
    for (std::uint32_t i = 0; i + 2 <= q; ++i)
        z[2 + i] = f.neg(f.pow(f.alpha(), -static_cast<long long>(i)));
    return z;
}

std::vector<Vec> basis_rows(const Subspace& s) {
    std::vector<Vec> rows;
    rows.reserve(s.k());
    for (std::size_t r = 0; r < s.k(); ++r) {
        auto row = s.basis().row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    return rows;
}

// Hyperplanes of X containing X ∩ Y and lines of Y outside X, the
// certificate's (h, l) index grid.
struct CertGrid {
    std::vector<Subspace> hyperplanes;
    std::vector<Vec> lines;
};

CertGrid cert_grid(const Subspace& x, const Subspace& y) {
    CertGrid g;
    Subspace inner = intersection(x, y);
    for (const Subspace& h : hyperplanes_of(x))
        if (inner.k() == 0 || contains_subspace(h, inner)) g.hyperplanes.push_back(h);
    for (const Vec& v : lines_of(y))
        if (!contains_vector(x, v)) g.lines.push_back(v);
    return g;
}

// True iff the hyperplane lies inside C_i, i.e. basis column i-1 is zero.
bool hyperplane_in_coordinate(const Subspace& h, std::size_t i) {
    for (std::size_t r = 0; r < h.k(); ++r)
        if (h.basis().at(r, i - 1) != 0) return false;
    return true;
}

}  // namespace

std::pair<Subspace, Subspace> example2_pair(std::uint32_t q) {
    FieldPtr f = make_field_for_q(q);
    const std::size_t n = static_cast<std::size_t>(q + 1) * (q + 1);

    Vec v1(n, 1);
    for (std::uint32_t j = 0; j <= q; ++j) v1[j] = 0;

    Vec v2(n, 0);
    for (std::uint32_t j = 0; j <= q; ++j) v2[j] = 1;
    for (std::uint32_t i = 0; i + 2 <= q; ++i) {
        Elem val = f->neg(f->pow(f->alpha(), -static_cast<long long>(i)));
        for (std::uint32_t j = 0; j <= q; ++j) v2[(i + 2) * (q + 1) + j] = val;
    }

    Vec yb = y_block(q), zb = z_block(*f, q);
    Vec u1(n), u2(n);
    for (std::size_t j = 0; j < n; ++j) {
        u1[j] = yb[j % (q + 1)];
        u2[j] = zb[j % (q + 1)];
    }

    return {Subspace::from_rows(f, n, {v1, v2}),
            Subspace::from_rows(f, n, {u1, u2})};
}

std::pair<Subspace, Subspace> lemma4_pair(std::uint32_t q, std::size_t k) {
    if (k < 2) throw std::invalid_argument("lemma4_pair requires k >= 2");
    if (k == 2) return example2_pair(q);

    FieldPtr f = make_field_for_q(q);
    auto w = normalized_tuples(f, k);
    const std::size_t blocks = w.size();  // [k]_q
    const std::size_t width = q + 1;
    const std::size_t n = blocks * width;

    std::vector<Vec> gx(k, Vec(n, 0));
    for (std::size_t i = 0; i < blocks; ++i)
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < width; ++j)
                gx[r][i * width + j] = w[i][r];

    Vec yb = y_block(q), zb = z_block(*f, q);
    std::vector<Vec> gy(k, Vec(n, 0));
    for (std::size_t j = 1; j <= blocks; ++j) {
        std::size_t ry = std::min(j, k - 1);  // 1-based rows
        for (std::size_t c = 0; c < width; ++c) {
            gy[ry - 1][(j - 1) * width + c] = yb[c];
            gy[ry][(j - 1) * width + c] = zb[c];
        }
    }

    return {Subspace::from_rows(f, n, gx), Subspace::from_rows(f, n, gy)};
}

std::pair<Subspace, Subspace> lemma6_pad(const Subspace& xp, const Subspace& yp,
                                         std::size_t m) {
    if (xp.n() != yp.n() || xp.k() != yp.k() || !xp.field()->same_as(*yp.field()))
        throw std::invalid_argument("lemma6_pad requires matching parameters");
    if (intersection_dim(xp, yp) != 0)
        throw std::invalid_argument("lemma6_pad requires trivial intersection");
    if (m == 0) return {xp, yp};

    const std::size_t np = xp.n(), n = np + m;
    auto pad = [&](const Subspace& s) {
        std::vector<Vec> rows;
        for (auto& row : basis_rows(s)) {
            row.resize(n, 0);
            rows.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < m; ++i) {
            Vec r(n, 0);
            r[np + i] = 1;
            rows.push_back(std::move(r));
        }
        return Subspace::from_rows(s.field(), n, rows);
    };
    return {pad(xp), pad(yp)};
}

std::pair<Subspace, Subspace> ones_extend(const Subspace& x, const Subspace& y,
                                          std::size_t n) {
    if (x.n() != y.n()) throw std::invalid_argument("ones_extend: length mismatch");
    if (n < x.n()) throw std::invalid_argument("ones_extend: n below current length");
    if (n == x.n()) return {x, y};
    auto extend_rows = [&](const Subspace& s) {
        std::vector<Vec> rows;
        for (auto& row : basis_rows(s)) {
            row.resize(n, 1);
            rows.push_back(std::move(row));
        }
        return Subspace::from_rows(s.field(), n, rows);
    };
    return {extend_rows(x), extend_rows(y)};
}

std::optional<BlockingCertificate> blocking_certificate(const Subspace& x,
                                                        const Subspace& y) {
    if (!is_nondegenerate(x) || !is_nondegenerate(y))
        throw std::invalid_argument("blocking_certificate requires non-degenerate codes");
    if (grassmann_distance(x, y) < 2)
        throw std::invalid_argument("blocking_certificate requires d >= 2");

    CertGrid g = cert_grid(x, y);
    BlockingCertificate cert;
    cert.num_hyperplanes = g.hyperplanes.size();
    cert.num_lines = g.lines.size();
    for (std::size_t h = 0; h < g.hyperplanes.size(); ++h) {
        for (std::size_t l = 0; l < g.lines.size(); ++l) {
            std::size_t found = 0;
            for (std::size_t i = 1; i <= x.n(); ++i) {
                if (g.lines[l][i - 1] != 0) continue;
                if (!hyperplane_in_coordinate(g.hyperplanes[h], i)) continue;
                found = i;
                break;
            }
            if (found == 0) return std::nullopt;
            cert.entries[{h + 1, l + 1}] = found;
        }
    }
    return cert;
}

bool verify_certificate(const Subspace& x, const Subspace& y,
                        const BlockingCertificate& cert, std::string* defect) {
    auto fail = [&](const std::string& why) {
        if (defect) *defect = why;
        return false;
    };
    CertGrid g = cert_grid(x, y);
    if (cert.num_hyperplanes != g.hyperplanes.size() ||
        cert.num_lines != g.lines.size())
        return fail("certificate grid dimensions do not match the pair");
    for (std::size_t h = 1; h <= g.hyperplanes.size(); ++h) {
        for (std::size_t l = 1; l <= g.lines.size(); ++l) {
            auto it = cert.entries.find({h, l});
            if (it == cert.entries.end())
                return fail("missing entry for hyperplane " + std::to_string(h) +
                            ", line " + std::to_string(l));
            std::size_t i = it->second;
            if (i < 1 || i > x.n())
                return fail("coordinate out of range at (" + std::to_string(h) + "," +
                            std::to_string(l) + ")");
            if (g.lines[l - 1][i - 1] != 0)
                return fail("line " + std::to_string(l) + " does not vanish at " +
                            std::to_string(i));
            if (!hyperplane_in_coordinate(g.hyperplanes[h - 1], i))
                return fail("hyperplane " + std::to_string(h) +
                            " does not vanish at " + std::to_string(i));
        }
    }
    return true;
}

WitnessPair construct_witness(std::uint32_t q, std::size_t k, std::size_t m,
                              std::size_t n) {
    CodeParams params{n, k, q};
    params.validate();
    if (m + 2 > k) throw std::invalid_argument("witness requires m <= k-2");
    if (m < m_min(n, k)) throw std::invalid_argument("witness requires m >= m(n,k)");
    if (BigCount(n) < theorem2_bound(k, m, q))
        throw std::invalid_argument("witness requires n >= [k-m]_q (q+1) + m");

    const std::size_t kappa = k - m;
    auto base = kappa == 2 ? example2_pair(q) : lemma4_pair(q, kappa);
    auto padded = lemma6_pad(base.first, base.second, m);
    auto [x, y] = ones_extend(padded.first, padded.second, n);

    // Construction invariants; a failure here is a bug, not bad input.
    if (!is_nondegenerate(x) || !is_nondegenerate(y))
        throw std::logic_error("witness construction produced a degenerate code");
    if (intersection_dim(x, y) != m)
        throw std::logic_error("witness construction missed the intersection dimension");
    auto cert = blocking_certificate(x, y);
    if (!cert)
        throw std::logic_error("witness construction yielded no blocking certificate");
    std::string why;
    if (!verify_certificate(x, y, *cert, &why))
        throw std::logic_error("witness certificate failed verification: " + why);

    return {std::move(x), std::move(y), params, m, kappa, std::move(*cert)};
}

}  // namespace codegraph
