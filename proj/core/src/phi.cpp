#include "qmzv/phi.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

#include "qmzv/stuffle.hpp"

namespace qmzv {

namespace {

MarkedPartition assemble(const std::vector<HorizontalBlock>& blocks,
                         std::vector<std::uint32_t> col_marks) {
    std::vector<std::uint32_t> parts;
    std::vector<std::uint32_t> row_marks;
    std::uint32_t row_offset = 0;
    for (const auto& block : blocks) {
        parts.insert(parts.end(), block.height, block.width);
        for (std::uint32_t r : block.row_marks) row_marks.push_back(row_offset + r);
        row_offset += block.height;
    }
    return MarkedPartition(Partition(std::move(parts)), std::move(row_marks),
                           std::move(col_marks));
}

}  // namespace

MarkedPartition phi(const MarkedPartition& a, const MarkedPartition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;

    const auto blocks_a = marked_blocks(a);
    const auto blocks_b = marked_blocks(b);
    std::vector<HorizontalBlock> merged;
    merged.reserve(blocks_a.size() + blocks_b.size());
    std::size_t ia = 0, ib = 0;
    while (ia < blocks_a.size() || ib < blocks_b.size()) {
        // equal widths: the block of the first argument goes on top
        if (ib == blocks_b.size() ||
            (ia < blocks_a.size() && blocks_a[ia].width >= blocks_b[ib].width))
            merged.push_back(blocks_a[ia++]);
        else
            merged.push_back(blocks_b[ib++]);
    }

    std::vector<std::uint32_t> cols = a.col_marks();
    cols.insert(cols.end(), b.col_marks().begin(), b.col_marks().end());

    MarkedPartition result = assemble(merged, std::move(cols));
    if (const auto check = validate(result); !check.ok)
        throw std::logic_error("phi: glued result is not a marked partition: " + check.message);
    return result;
}

std::uint32_t min_part(const MarkedPartition& mp) {
    if (mp.empty()) throw std::domain_error("min_part: empty marked partition");
    return mp.partition().smallest_part();
}

std::vector<std::uint32_t> min_block_col_marks(const MarkedPartition& mp) {
    const std::uint32_t bound = min_part(mp);
    std::vector<std::uint32_t> out;
    for (std::uint32_t c : mp.col_marks())
        if (c <= bound) out.push_back(c);
    return out;
}

MarkedPartition split_lower(const MarkedPartition& mp) {
    std::vector<std::uint32_t> cols = min_block_col_marks(mp);  // throws on empty input
    const auto blocks = marked_blocks(mp);
    MarkedPartition result = assemble({blocks.back()}, std::move(cols));
    if (const auto check = validate(result); !check.ok)
        throw std::logic_error("split_lower: invalid block: " + check.message);
    return result;
}

MarkedPartition split_rest(const MarkedPartition& mp) {
    const std::uint32_t bound = min_part(mp);
    auto blocks = marked_blocks(mp);
    blocks.pop_back();
    std::vector<std::uint32_t> cols;
    for (std::uint32_t c : mp.col_marks())
        if (c > bound) cols.push_back(c);
    MarkedPartition result = assemble(blocks, std::move(cols));
    if (const auto check = validate(result); !check.ok)
        throw std::logic_error("split_rest: invalid remainder: " + check.message);
    return result;
}

std::string PhiReport::str() const {
    std::string out;
    for (std::size_t i = 0; i < preimages.size(); ++i) {
        out += "pair " + std::to_string(i + 1) + ":\n";
        out += mp_line(preimages[i].first) + '\n';
        out += mp_line(preimages[i].second) + '\n';
    }
    out += "count=" + std::to_string(count) + " expected=" + expected.str() +
           " agrees=" + (agrees ? "true" : "false") + '\n';
    return out;
}

PhiReport mp_multiplicity(const Word& w1, const Word& w2, const MarkedPartition& target) {
    if (const auto check = validate(target); !check.ok)
        throw std::domain_error("mp_multiplicity: invalid target: " + check.message);
    PhiReport report;
    report.w1 = w1;
    report.w2 = w2;
    report.target = target;
    const std::uint64_t total = target.weight();
    for (std::uint64_t n1 = 0; n1 <= total; ++n1) {
        const auto left = enumerate_marked(w1, n1);
        if (left.empty()) continue;
        const auto right = enumerate_marked(w2, total - n1);
        for (const auto& p1 : left)
            for (const auto& p2 : right)
                if (phi(p1, p2) == target) report.preimages.emplace_back(p1, p2);
    }
    std::sort(report.preimages.begin(), report.preimages.end());
    report.count = report.preimages.size();
    report.expected = multiplicity({w1, w2, type_word(target)});
    report.agrees = Integer(report.count) == report.expected;
    return report;
}

std::string TheoremSummary::str() const {
    std::string out;
    for (const auto& line : counterexamples) out += line + '\n';
    out += "cases: lt=" + std::to_string(case_lt) + " gt=" + std::to_string(case_gt) +
           " eq=" + std::to_string(case_eq) + " empty=" + std::to_string(case_empty) + '\n';
    out += "cells=" + std::to_string(cells) + " preimages=" + std::to_string(preimages) +
           " mismatches=" + std::to_string(mismatches) + '\n';
    return out;
}

namespace {

// shared marked-partition enumerations, keyed by (type word, weight)
class EnumerationCache {
  public:
    const std::vector<MarkedPartition>& get(const Word& w, std::uint64_t n) {
        const auto key = std::make_pair(w, n);
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto value = enumerate_marked(w, n);
        std::unique_lock lock(mutex_);
        return cache_.emplace(std::move(key), std::move(value)).first->second;
    }

  private:
    std::map<std::pair<Word, std::uint64_t>, std::vector<MarkedPartition>> cache_;
    std::shared_mutex mutex_;
};

struct Cell {
    Word w1, w2;
    std::uint64_t weight = 0;
};

struct CellResult {
    std::uint64_t preimages = 0;
    std::uint64_t case_lt = 0, case_gt = 0, case_eq = 0, case_empty = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> counterexamples;
};

CellResult run_cell(const Cell& cell, EnumerationCache& cache, bool inject_fault) {
    CellResult result;
    const LinearCombination product = stuffle(cell.w1, cell.w2);

    std::map<MarkedPartition, std::uint64_t> glued;
    for (std::uint64_t n1 = 0; n1 <= cell.weight; ++n1) {
        const auto& left = cache.get(cell.w1, n1);
        if (left.empty()) continue;
        const auto& right = cache.get(cell.w2, cell.weight - n1);
        for (const auto& p1 : left)
            for (const auto& p2 : right) {
                ++glued[phi(p1, p2)];
                ++result.preimages;
                if (p1.empty() || p2.empty())
                    ++result.case_empty;
                else if (min_part(p1) < min_part(p2))
                    ++result.case_lt;
                else if (min_part(p1) > min_part(p2))
                    ++result.case_gt;
                else
                    ++result.case_eq;
            }
    }

    auto report_mismatch = [&](const MarkedPartition& target, std::uint64_t count,
                               const Integer& expected) {
        ++result.mismatches;
        result.counterexamples.push_back(
            "counterexample: w1=" + cell.w1.str() + " w2=" + cell.w2.str() +
            " N=" + std::to_string(cell.weight) + " target=" + mp_line(target) +
            " count=" + std::to_string(count) + " expected=" + expected.str());
    };

    bool fault_pending = inject_fault;
    for (const auto& [type, coeff] : product.terms()) {
        for (const auto& target : cache.get(type, cell.weight)) {
            Integer expected = to_integer(coeff);
            if (fault_pending) {
                expected += 1;
                fault_pending = false;
            }
            const auto it = glued.find(target);
            const std::uint64_t count = it == glued.end() ? 0 : it->second;
            if (Integer(count) != expected) report_mismatch(target, count, expected);
        }
    }

    // every glued result must carry a type present in the product; reaching a
    // target of an absent type would itself contradict the theorem
    for (const auto& [target, count] : glued) {
        const Word type = type_word(target);
        if (product.coefficient_of(type) == 0) report_mismatch(target, count, 0);
    }
    return result;
}

}  // namespace

TheoremSummary verify_theorem(std::size_t max_len, Letter max_index, std::uint64_t max_weight,
                              const VerifyOptions& options) {
    const std::vector<Word> words = admissible_words(max_len, max_index);
    std::vector<Cell> cells;
    for (const auto& w1 : words)
        for (const auto& w2 : words)
            for (std::uint64_t n = 0; n <= max_weight; ++n) cells.push_back({w1, w2, n});

    EnumerationCache cache;
    std::vector<CellResult> results(cells.size());
    const unsigned jobs = std::max(1u, options.jobs);

    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_cell(cells[i], cache, options.inject_fault && i == 0);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    results[i] = run_cell(cells[i], cache, options.inject_fault && i == 0);
                }
            });
        for (auto& worker : workers) worker.join();
    }

    TheoremSummary summary;
    summary.cells = cells.size();
    for (const auto& r : results) {
        summary.preimages += r.preimages;
        summary.case_lt += r.case_lt;
        summary.case_gt += r.case_gt;
        summary.case_eq += r.case_eq;
        summary.case_empty += r.case_empty;
        summary.mismatches += r.mismatches;
        summary.counterexamples.insert(summary.counterexamples.end(), r.counterexamples.begin(),
                                       r.counterexamples.end());
    }
    return summary;
}

}  // namespace qmzv
