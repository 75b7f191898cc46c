#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/word.hpp"

namespace qmzv {

/// Integer partition; parts are the row lengths of the Young diagram, top to
/// bottom, weakly decreasing and positive. The empty partition has weight 0.
class Partition {
  public:
    Partition() = default;

    /// Throws std::domain_error unless parts are weakly decreasing positive.
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t weight() const;
    std::uint32_t largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    std::uint32_t smallest_part() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Distinct part lengths m_1 > ... > m_d with multiplicities, top to bottom.
    struct Group {
        std::uint32_t part = 0;
        std::uint32_t multiplicity = 0;
        friend bool operator==(const Group&, const Group&) = default;
    };
    std::vector<Group> groups() const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<std::uint32_t> parts_;
};

/// Column heights of the Young diagram (diagram transpose).
Partition conjugate(const Partition& p);

/// Maximal run of equal-length rows. When sliced from a marked partition the
/// block carries its row marks, renumbered 1-based within the block, and the
/// bottom row is always marked.
struct HorizontalBlock {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint32_t> row_marks;  // ascending; empty for bare partitions
    friend bool operator==(const HorizontalBlock&, const HorizontalBlock&) = default;
};

/// Blocks of a bare partition, top to bottom (widths strictly decreasing);
/// the row-mark lists stay empty.
std::vector<HorizontalBlock> horizontal_blocks(const Partition& p);

/// Young diagram with marked rows and columns, 1-based, rows counted from the
/// top and columns from the left. The marking is distinct when the lowest row
/// of every part length and the rightmost column of every column group are
/// marked; validate() checks this. Construction is permissive so that
/// arbitrary input data can be inspected.
class MarkedPartition {
  public:
    MarkedPartition() = default;
    MarkedPartition(Partition partition, std::vector<std::uint32_t> row_marks,
                    std::vector<std::uint32_t> col_marks);

    const Partition& partition() const { return partition_; }
    const std::vector<std::uint32_t>& row_marks() const { return row_marks_; }
    const std::vector<std::uint32_t>& col_marks() const { return col_marks_; }

    bool empty() const { return partition_.empty(); }
    std::uint64_t weight() const { return partition_.weight(); }

    bool row_marked(std::uint32_t row) const;
    bool col_marked(std::uint32_t col) const;

    friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;

    /// Canonical order: lexicographic on (distinct parts, multiplicities,
    /// row marks, column marks). Enumerations list results in this order.
    friend std::strong_ordering operator<=>(const MarkedPartition& a, const MarkedPartition& b);

  private:
    Partition partition_;
    std::vector<std::uint32_t> row_marks_;  // ascending
    std::vector<std::uint32_t> col_marks_;  // ascending
};

/// Blocks of a marked partition with their local row marks, top to bottom.
std::vector<HorizontalBlock> marked_blocks(const MarkedPartition& mp);

struct ValidationResult {
    bool ok = true;
    std::string message;  // names the first violated row or column group
};

/// Checks both distinctness invariants plus mark bounds. Violations are
/// reported, not thrown.
ValidationResult validate(const MarkedPartition& mp);

/// Type word u_{k1}u_0^{z1-1}...u_{kd}u_0^{zd-1} where k_j counts marked rows
/// of length m_j and z_j counts marked columns in the j-th column group
/// (columns m_{j+1}+1 .. m_j). The empty marked partition has the empty type.
/// Throws std::domain_error when the marking is not distinct.
Word type_word(const MarkedPartition& mp);

/// All marked partitions of weight n and type w, in the canonical order.
std::vector<MarkedPartition> enumerate_marked(const Word& w, std::uint64_t n);

/// Number of marked partitions of weight n and type w.
std::uint64_t psi_census(const Word& w, std::uint64_t n);

/// All marked partitions of weight n, any type, in the canonical order.
std::vector<MarkedPartition> enumerate_all_marked(std::uint64_t n);

/// One-line interchange format {"parts":[...],"rows":[...],"cols":[...]}
/// with ascending mark lists.
std::string mp_line(const MarkedPartition& mp);

/// Parses the interchange format; throws std::invalid_argument on malformed
/// input.
MarkedPartition parse_mp_line(std::string_view line);

}  // namespace qmzv
