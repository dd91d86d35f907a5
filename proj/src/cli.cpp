#include "codegraph/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "codegraph/analytics.hpp"
#include "codegraph/errors.hpp"
#include "codegraph/graph.hpp"
#include "codegraph/io.hpp"
#include "codegraph/scan.hpp"
#include "codegraph/witness.hpp"

namespace codegraph::cli {

namespace {

using nlohmann::json;

Subspace load_code(const std::string& path) {
    Subspace s = read_matrix_file(path);
    CodeParams params{s.n(), s.k(), s.field()->q()};
    params.validate();
    return s;
}

int cmd_distance(const std::string& file_x, const std::string& file_y,
                 bool use_oracle, bool as_json, std::size_t cap, std::ostream& out) {
    Subspace x = load_code(file_x);
    Subspace y = load_code(file_y);
    if (x.n() != y.n() || x.k() != y.k() || !x.field()->same_as(*y.field()))
        throw std::invalid_argument("input codes have different parameters");
    if (!is_nondegenerate(x))
        throw degenerate_input(file_x + " spans a degenerate code");
    if (!is_nondegenerate(y))
        throw degenerate_input(file_y + " spans a degenerate code");
    DistanceResult r = restricted_distance(x, y);
    std::optional<std::size_t> oracle_dc;
    if (use_oracle) oracle_dc = bfs_oracle(x, y, cap);

    if (as_json) {
        json j;
        j["command"] = "distance";
        j["p"] = x.field()->p();
        j["e"] = x.field()->e();
        j["q"] = x.field()->q();
        j["n"] = x.n();
        j["k"] = x.k();
        j["d"] = r.d;
        j["d_c"] = r.dc;
        j["evidence"] = to_string(r.evidence);
        if (r.path) {
            json path = json::array();
            for (const Subspace& s : *r.path) path.push_back(matrix_to_json(s.basis()));
            j["path"] = std::move(path);
        }
        if (oracle_dc) {
            j["oracle_d_c"] = *oracle_dc;
            j["oracle_match"] = (*oracle_dc == r.dc);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "d=" << r.d << " d_c=" << r.dc << " evidence=" << to_string(r.evidence)
            << '\n';
        if (oracle_dc)
            out << "oracle d_c=" << *oracle_dc
                << (*oracle_dc == r.dc ? " (match)" : " (MISMATCH)") << '\n';
    }
    if (oracle_dc && *oracle_dc != r.dc) return 1;
    return exit_ok;
}

int cmd_witness(std::uint32_t q, std::size_t k, std::size_t m, std::size_t n,
                const std::string& prefix, std::ostream& out) {
    WitnessPair w = construct_witness(q, k, m, n);
    write_matrix_file(prefix + "_X.mat", w.x);
    write_matrix_file(prefix + "_Y.mat", w.y);
    std::ofstream cert(prefix + "_cert.json");
    if (!cert) throw parse_error("cannot open " + prefix + "_cert.json for writing");
    cert << certificate_to_json(w).dump(2) << '\n';
    out << "wrote " << prefix << "_X.mat, " << prefix << "_Y.mat, " << prefix
        << "_cert.json\n";
    out << "d=" << w.d << " d_c=" << (w.d + 1) << '\n';
    return exit_ok;
}

int cmd_count(std::size_t n, std::size_t k, std::uint32_t q, bool enumerate,
              bool as_json, std::size_t cap, std::ostream& out) {
    if (k > n) throw std::invalid_argument("count requires 0 <= k <= n");
    BigCount subspaces = gaussian_binomial(n, k, q);
    BigCount nondeg = count_nondegenerate(n, k, q);
    std::optional<std::size_t> enumerated;
    if (enumerate) {
        if (subspaces > cap) throw cap_exceeded("[n k]_q exceeds the enumeration cap");
        std::size_t hit = 0;
        enumerate_subspaces(make_field_for_q(q), n, k, [&](const Subspace& s) {
            if (is_nondegenerate(s)) ++hit;
        });
        enumerated = hit;
    }
    bool match = !enumerated || BigCount(*enumerated) == nondeg;
    if (as_json) {
        json j;
        j["command"] = "count";
        j["n"] = n;
        j["k"] = k;
        j["q"] = q;
        j["subspaces"] = subspaces.str();
        j["nondegenerate"] = nondeg.str();
        if (enumerated) {
            j["enumerated"] = *enumerated;
            j["match"] = match;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "[n k]_q = " << subspaces << '\n';
        out << "|C(n,k)_q| = " << nondeg << '\n';
        if (enumerated)
            out << "enumerated = " << *enumerated << (match ? " (match)" : " (MISMATCH)")
                << '\n';
    }
    return match ? exit_ok : 1;
}

int cmd_scan(std::size_t n, std::size_t k, std::uint32_t q, unsigned threads,
             bool as_json, std::size_t cap, std::ostream& out) {
    ScanResult r = scan_theorem1(n, k, q, threads, cap);
    constexpr std::size_t sample_limit = 10;
    if (as_json) {
        json j;
        j["command"] = "scan-theorem1";
        j["n"] = n;
        j["k"] = k;
        j["q"] = q;
        j["codes"] = r.num_codes;
        j["pairs"] = r.pairs;
        j["exceptional"] = r.exceptional;
        j["theorem1_predicate"] = r.predicate;
        j["consistent"] = r.consistent;
        json sample = json::array();
        for (std::size_t i = 0; i < r.exceptional_pairs.size() && i < sample_limit; ++i)
            sample.push_back({r.exceptional_pairs[i].first,
                              r.exceptional_pairs[i].second});
        j["sample_exceptional"] = std::move(sample);
        out << j.dump(2) << '\n';
    } else {
        out << "codes=" << r.num_codes << " pairs=" << r.pairs
            << " exceptional=" << r.exceptional
            << " predicate=" << (r.predicate ? "true" : "false")
            << " consistent=" << (r.consistent ? "yes" : "NO") << '\n';
    }
    return r.consistent ? exit_ok : 1;
}

int cmd_certify(const std::string& file_x, const std::string& file_y,
                const std::string& cert_path, std::ostream& out) {
    Subspace x = load_code(file_x);
    Subspace y = load_code(file_y);
    std::ifstream in(cert_path);
    if (!in) throw parse_error("cannot open " + cert_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("bad certificate JSON: ") + ex.what());
    }
    BlockingCertificate cert = certificate_from_json(j);
    std::string defect;
    if (verify_certificate(x, y, cert, &defect)) {
        out << "certificate OK: d_c = d + 1 is proven\n";
        return exit_ok;
    }
    out << "certificate INVALID: " << defect << '\n';
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distances between linear [n,k]_q codes in the Grassmann graph "
                 "and its restriction to non-degenerate codes"};
    app.require_subcommand(1);

    std::string file_x, file_y, cert_path, prefix;
    std::size_t n = 0, k = 0, m = 0;
    std::uint32_t q = 2;
    unsigned threads = 1;
    std::size_t cap = 0;
    bool as_json = false, use_oracle = false, enumerate = false;

    auto* dist = app.add_subcommand("distance", "Grassmann and restricted distance "
                                                "between two codes");
    dist->add_option("fileX", file_x)->required();
    dist->add_option("fileY", file_y)->required();
    dist->add_flag("--json", as_json);
    dist->add_flag("--oracle", use_oracle, "cross-check with the BFS oracle");
    dist->add_option("--cap", cap, "BFS oracle vertex cap");

    auto* wit = app.add_subcommand("witness", "construct a pair with d_c = d + 1 "
                                              "and its blocking certificate");
    wit->add_option("q", q)->required();
    wit->add_option("k", k)->required();
    wit->add_option("m", m)->required();
    wit->add_option("n", n)->required();
    wit->add_option("out_prefix", prefix)->required();

    auto* cnt = app.add_subcommand("count", "subspace and non-degenerate code counts");
    cnt->add_option("n", n)->required();
    cnt->add_option("k", k)->required();
    cnt->add_option("q", q)->required();
    cnt->add_flag("--enumerate", enumerate, "brute-force recount within cap");
    cnt->add_flag("--json", as_json);
    cnt->add_option("--cap", cap, "enumeration cap");

    auto* scan = app.add_subcommand("scan-theorem1",
                                    "exhaust all pairs of non-degenerate codes and "
                                    "count those with d_c > d");
    scan->add_option("n", n)->required();
    scan->add_option("k", k)->required();
    scan->add_option("q", q)->required();
    scan->add_option("--parallel", threads, "worker thread count");
    scan->add_flag("--json", as_json);
    scan->add_option("--cap", cap, "code enumeration cap");

    auto* cert = app.add_subcommand("certify", "verify a blocking certificate against "
                                               "two code files");
    cert->add_option("fileX", file_x)->required();
    cert->add_option("fileY", file_y)->required();
    cert->add_option("cert", cert_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        err << e.what() << '\n';
        return exit_params;
    }

    try {
        if (*dist)
            return cmd_distance(file_x, file_y, use_oracle, as_json,
                                cap ? cap : default_bfs_cap, out);
        if (*wit) return cmd_witness(q, k, m, n, prefix, out);
        if (*cnt)
            return cmd_count(n, k, q, enumerate, as_json,
                             cap ? cap : default_scan_cap, out);
        if (*scan)
            return cmd_scan(n, k, q, threads, as_json, cap ? cap : default_scan_cap,
                            out);
        if (*cert) return cmd_certify(file_x, file_y, cert_path, out);
    } catch (const parse_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_parse;
    } catch (const degenerate_input& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_degenerate;
    } catch (const cap_exceeded& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_cap;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_params;
    }
    return exit_params;
}

}  // namespace codegraph::cli
