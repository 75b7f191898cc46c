#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmzv/partitions.hpp"
#include "qmzv/word.hpp"

namespace qmzv {

/// Gluing pairing on marked partitions: the horizontal blocks of both inputs
/// are merged in decreasing width order, blocks from the first argument going
/// above blocks of equal width from the second; row marks travel with their
/// blocks and a column is marked in the result iff it is marked in either
/// input. Identity on the empty marked partition from both sides. The result
/// is revalidated; failure would be an implementation bug and throws
/// std::logic_error.
MarkedPartition phi(const MarkedPartition& a, const MarkedPartition& b);

/// Smallest part length. Throws std::domain_error on the empty marked
/// partition, as do the three functions below.
std::uint32_t min_part(const MarkedPartition& mp);

/// Column marks landing in the horizontal block of minimal length, i.e. the
/// marked column indices <= min_part(mp).
std::vector<std::uint32_t> min_block_col_marks(const MarkedPartition& mp);

/// The minimal-length horizontal block as a marked partition of its own: row
/// marks preserved, column marks exactly min_block_col_marks(mp).
MarkedPartition split_lower(const MarkedPartition& mp);

/// Everything above the minimal-length block, with the column marks of
/// min_block_col_marks(mp) removed. phi(split_rest(mp), split_lower(mp))
/// recombines to mp.
MarkedPartition split_rest(const MarkedPartition& mp);

/// Outcome of the brute-force preimage count m_{W1,W2;p} for one target.
struct PhiReport {
    Word w1, w2;
    MarkedPartition target;
    std::vector<std::pair<MarkedPartition, MarkedPartition>> preimages;
    std::uint64_t count = 0;  // preimages.size()
    Integer expected;         // multiplicity of the target's type in w1 * w2
    bool agrees = false;

    /// Preimage pairs as interchange lines under "pair <i>:" headers,
    /// followed by "count=... expected=... agrees=...".
    std::string str() const;
};

/// Enumerates every split N1 + N2 = weight(target) and every pair from
/// MP_{w1}(N1) x MP_{w2}(N2), listing the pairs that glue to the target in
/// the canonical order.
PhiReport mp_multiplicity(const Word& w1, const Word& w2, const MarkedPartition& target);

struct VerifyOptions {
    unsigned jobs = 1;
    /// Testing hook: perturbs one expected multiplicity so that the mismatch
    /// reporting path runs. Never set outside the exit-code fixture.
    bool inject_fault = false;
};

/// Exhaustive check of m_{W1,W2;p} = m_{W1,W2;W}: every admissible pair
/// within the length/index bounds, every target of weight <= max_weight whose
/// type has nonzero multiplicity in the product. Preimage pairs are tallied
/// by the min-part comparison between the halves; any glued result whose type
/// is absent from the product counts as a mismatch as well.
struct TheoremSummary {
    std::uint64_t cells = 0;      // processed (w1, w2, N) triples
    std::uint64_t preimages = 0;  // glued pairs examined
    std::uint64_t mismatches = 0;
    std::uint64_t case_lt = 0;     // min_part(p1) < min_part(p2)
    std::uint64_t case_gt = 0;     // min_part(p1) > min_part(p2)
    std::uint64_t case_eq = 0;     // equal min parts
    std::uint64_t case_empty = 0;  // one half empty
    std::vector<std::string> counterexamples;

    std::string str() const;
};

TheoremSummary verify_theorem(std::size_t max_len, Letter max_index, std::uint64_t max_weight,
                              const VerifyOptions& options = {});

}  // namespace qmzv
