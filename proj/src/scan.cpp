#include "codegraph/scan.hpp"

#include <thread>

#include "codegraph/analytics.hpp"
#include "codegraph/errors.hpp"
#include "codegraph/graph.hpp"

namespace codegraph {

std::vector<Subspace> enumerate_nondegenerate(const FieldPtr& field, std::size_t n,
                                              std::size_t k, std::size_t cap) {
    if (count_nondegenerate(n, k, field->q()) > cap)
        throw cap_exceeded("|C(n,k)_q| exceeds the scan cap");
    std::vector<Subspace> codes;
    enumerate_subspaces(field, n, k, [&](const Subspace& s) {
        if (is_nondegenerate(s)) codes.push_back(s);
    });
    return codes;
}

ScanResult scan_theorem1(std::size_t n, std::size_t k, std::uint32_t q,
                         unsigned threads, std::size_t cap) {
    CodeParams params{n, k, q};
    params.validate();
    FieldPtr field = make_field_for_q(q);
    std::vector<Subspace> codes = enumerate_nondegenerate(field, n, k, cap);

    const std::size_t count = codes.size();
    const std::uint64_t total = static_cast<std::uint64_t>(count) * (count - 1) / 2;
    if (threads == 0) threads = 1;

    struct Chunk {
        std::uint64_t exceptional = 0;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
    };
    std::vector<Chunk> chunks(threads);

    auto worker = [&](unsigned t) {
        Chunk& out = chunks[t];
        std::uint64_t begin = total * t / threads;
        std::uint64_t end = total * (t + 1) / threads;
        // locate the (i,j) of the flattened pair index `begin`
        std::size_t i = 0;
        std::uint64_t row_start = 0;
        while (row_start + (count - 1 - i) <= begin) {
            row_start += count - 1 - i;
            ++i;
        }
        std::size_t j = i + 1 + static_cast<std::size_t>(begin - row_start);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            DistanceResult r = restricted_distance(codes[i], codes[j]);
            if (r.dc > r.d) {
                ++out.exceptional;
                out.pairs.emplace_back(i, j);
            }
            if (++j == count) {
                ++i;
                j = i + 1;
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    ScanResult result;
    result.params = params;
    result.num_codes = count;
    result.pairs = total;
    for (auto& c : chunks) {
        result.exceptional += c.exceptional;
        // chunks cover ascending index ranges, so concatenation stays sorted
        result.exceptional_pairs.insert(result.exceptional_pairs.end(),
                                        c.pairs.begin(), c.pairs.end());
    }
    result.predicate = theorem1_predicate(n, k, q);
    result.consistent = (result.exceptional == 0) == result.predicate;
    return result;
}

}  // namespace codegraph
