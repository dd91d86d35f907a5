#include "codegraph/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "codegraph/errors.hpp"

namespace codegraph {

Subspace read_matrix(std::istream& in) {
    long long p, e, k, n;
    if (!(in >> p >> e >> k >> n))
        throw parse_error("matrix header must be four integers: p e k n");
    if (p < 2 || e < 1 || k < 0 || n < 1)
        throw parse_error("matrix header values out of range");
    FieldPtr field;
    try {
        field = Field::make(static_cast<std::uint32_t>(p),
                            static_cast<std::uint32_t>(e));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("bad field parameters: ") + ex.what());
    }
    std::vector<Vec> rows(k, Vec(n));
    for (long long r = 0; r < k; ++r) {
        for (long long c = 0; c < n; ++c) {
            long long code;
            if (!(in >> code)) throw parse_error("matrix body truncated");
            if (code < 0 || code >= field->q())
                throw parse_error("element code out of range at row " +
                                  std::to_string(r + 1));
            rows[r][c] = static_cast<Elem>(code);
        }
    }
    Subspace s = Subspace::from_rows(field, static_cast<std::size_t>(n), rows);
    if (s.k() != static_cast<std::size_t>(k))
        throw parse_error("matrix rows are linearly dependent (rank < k)");
    return s;
}

Subspace read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Subspace& s) {
    out << s.field()->p() << ' ' << s.field()->e() << ' ' << s.k() << ' ' << s.n()
        << '\n';
    for (std::size_t r = 0; r < s.k(); ++r) {
        for (std::size_t c = 0; c < s.n(); ++c) {
            if (c) out << ' ';
            out << s.basis().at(r, c);
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Subspace& s) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_matrix(out, s);
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json certificate_to_json(const WitnessPair& w) {
    nlohmann::json j;
    j["p"] = w.x.field()->p();
    j["e"] = w.x.field()->e();
    j["q"] = w.params.q;
    j["n"] = w.params.n;
    j["k"] = w.params.k;
    j["m"] = w.m;
    j["d"] = w.d;
    j["d_c"] = w.d + 1;
    j["X"] = matrix_to_json(w.x.basis());
    j["Y"] = matrix_to_json(w.y.basis());
    j["num_hyperplanes"] = w.certificate.num_hyperplanes;
    j["num_lines"] = w.certificate.num_lines;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [hl, i] : w.certificate.entries)
        entries.push_back({{"h", hl.first}, {"l", hl.second}, {"i", i}});
    j["entries"] = std::move(entries);
    return j;
}

BlockingCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        BlockingCertificate cert;
        cert.num_hyperplanes = j.at("num_hyperplanes").get<std::size_t>();
        cert.num_lines = j.at("num_lines").get<std::size_t>();
        for (const auto& entry : j.at("entries")) {
            std::size_t h = entry.at("h").get<std::size_t>();
            std::size_t l = entry.at("l").get<std::size_t>();
            cert.entries[{h, l}] = entry.at("i").get<std::size_t>();
        }
        return cert;
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("bad certificate document: ") + ex.what());
    }
}

}  // namespace codegraph
