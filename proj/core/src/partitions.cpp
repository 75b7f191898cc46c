#include "qmzv/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace qmzv {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::domain_error("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition: parts must be weakly decreasing");
    }
}

std::uint64_t Partition::weight() const {
    std::uint64_t w = 0;
    for (std::uint32_t p : parts_) w += p;
    return w;
}

std::vector<Partition::Group> Partition::groups() const {
    std::vector<Group> out;
    for (std::uint32_t p : parts_) {
        if (!out.empty() && out.back().part == p)
            ++out.back().multiplicity;
        else
            out.push_back({p, 1});
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<std::uint32_t> heights;
    heights.reserve(p.largest_part());
    for (std::uint32_t col = 1; col <= p.largest_part(); ++col) {
        auto count = std::count_if(p.parts().begin(), p.parts().end(),
                                   [col](std::uint32_t part) { return part >= col; });
        heights.push_back(static_cast<std::uint32_t>(count));
    }
    return Partition(std::move(heights));
}

std::vector<HorizontalBlock> horizontal_blocks(const Partition& p) {
    std::vector<HorizontalBlock> blocks;
    for (const auto& g : p.groups()) blocks.push_back({g.part, g.multiplicity, {}});
    return blocks;
}

MarkedPartition::MarkedPartition(Partition partition, std::vector<std::uint32_t> row_marks,
                                 std::vector<std::uint32_t> col_marks)
    : partition_(std::move(partition)),
      row_marks_(std::move(row_marks)),
      col_marks_(std::move(col_marks)) {
    std::sort(row_marks_.begin(), row_marks_.end());
    row_marks_.erase(std::unique(row_marks_.begin(), row_marks_.end()), row_marks_.end());
    std::sort(col_marks_.begin(), col_marks_.end());
    col_marks_.erase(std::unique(col_marks_.begin(), col_marks_.end()), col_marks_.end());
}

bool MarkedPartition::row_marked(std::uint32_t row) const {
    return std::binary_search(row_marks_.begin(), row_marks_.end(), row);
}

bool MarkedPartition::col_marked(std::uint32_t col) const {
    return std::binary_search(col_marks_.begin(), col_marks_.end(), col);
}

std::strong_ordering operator<=>(const MarkedPartition& a, const MarkedPartition& b) {
    const auto ga = a.partition_.groups();
    const auto gb = b.partition_.groups();
    for (std::size_t i = 0; i < std::min(ga.size(), gb.size()); ++i)
        if (auto c = ga[i].part <=> gb[i].part; c != 0) return c;
    if (auto c = ga.size() <=> gb.size(); c != 0) return c;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (auto c = ga[i].multiplicity <=> gb[i].multiplicity; c != 0) return c;
    if (auto c = a.row_marks_ <=> b.row_marks_; c != 0) return c;
    return a.col_marks_ <=> b.col_marks_;
}

std::vector<HorizontalBlock> marked_blocks(const MarkedPartition& mp) {
    std::vector<HorizontalBlock> blocks;
    std::uint32_t row_offset = 0;
    for (const auto& g : mp.partition().groups()) {
        HorizontalBlock block{g.part, g.multiplicity, {}};
        for (std::uint32_t r = 1; r <= g.multiplicity; ++r)
            if (mp.row_marked(row_offset + r)) block.row_marks.push_back(r);
        row_offset += g.multiplicity;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

ValidationResult validate(const MarkedPartition& mp) {
    const auto rows = static_cast<std::uint32_t>(mp.partition().rows());
    const std::uint32_t width = mp.partition().largest_part();
    for (std::uint32_t r : mp.row_marks())
        if (r < 1 || r > rows)
            return {false, "row mark " + std::to_string(r) + " outside rows 1.." +
                               std::to_string(rows)};
    for (std::uint32_t c : mp.col_marks())
        if (c < 1 || c > width)
            return {false, "column mark " + std::to_string(c) + " outside columns 1.." +
                               std::to_string(width)};

    // distinct row marking: the lowest row of each part length is marked
    std::uint32_t row_offset = 0;
    for (const auto& g : mp.partition().groups()) {
        const std::uint32_t lowest = row_offset + g.multiplicity;
        if (!mp.row_marked(lowest))
            return {false, "row group for part length " + std::to_string(g.part) +
                               ": lowest row " + std::to_string(lowest) + " unmarked"};
        row_offset += g.multiplicity;
    }

    // distinct column marking: the rightmost column of each column group is
    // marked; group j spans columns m_{j+1}+1 .. m_j
    const auto groups = mp.partition().groups();
    for (std::size_t j = 0; j < groups.size(); ++j) {
        const std::uint32_t right = groups[j].part;
        const std::uint32_t left = (j + 1 < groups.size() ? groups[j + 1].part : 0) + 1;
        if (!mp.col_marked(right))
            return {false, "column group for columns " + std::to_string(left) + ".." +
                               std::to_string(right) + ": rightmost column " +
                               std::to_string(right) + " unmarked"};
    }
    return {};
}

Word type_word(const MarkedPartition& mp) {
    if (const auto check = validate(mp); !check.ok)
        throw std::domain_error("type_word: " + check.message);
    const auto groups = mp.partition().groups();
    std::vector<Letter> letters;
    std::uint32_t row_offset = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        std::uint64_t k = 0;
        for (std::uint32_t r = 1; r <= groups[j].multiplicity; ++r)
            if (mp.row_marked(row_offset + r)) ++k;
        row_offset += groups[j].multiplicity;

        const std::uint32_t right = groups[j].part;
        const std::uint32_t left = (j + 1 < groups.size() ? groups[j + 1].part : 0) + 1;
        std::uint64_t z = 0;
        for (std::uint32_t c = left; c <= right; ++c)
            if (mp.col_marked(c)) ++z;

        letters.push_back(k);
        letters.insert(letters.end(), z - 1, Letter{0});
    }
    return Word(std::move(letters));
}

namespace {

// all t-subsets of values in lexicographic order
void for_each_combination(const std::vector<std::uint32_t>& values, std::size_t t,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (t > values.size()) return;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    std::vector<std::uint32_t> chosen(t);
    while (true) {
        for (std::size_t i = 0; i < t; ++i) chosen[i] = values[idx[i]];
        fn(chosen);
        std::size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] + (t - i) < values.size()) {
                ++idx[i];
                for (std::size_t l = i + 1; l < t; ++l) idx[l] = idx[l - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (t == 0) return;
    }
}

struct ShapeData {
    std::vector<std::uint64_t> m;  // distinct parts, decreasing
    std::vector<std::uint64_t> n;  // multiplicities
};

void build_marked_partitions(const ShapeData& shape, const std::vector<std::uint64_t>& row_count,
                             const std::vector<std::uint64_t>& col_count,
                             std::vector<MarkedPartition>& out) {
    const std::size_t d = shape.m.size();

    std::vector<std::uint32_t> parts;
    for (std::size_t j = 0; j < d; ++j)
        parts.insert(parts.end(), static_cast<std::size_t>(shape.n[j]),
                     static_cast<std::uint32_t>(shape.m[j]));
    const Partition partition(parts);

    // per-group candidate marks with the forced one excluded
    std::vector<std::vector<std::uint32_t>> row_opts(d), col_opts(d);
    std::vector<std::uint32_t> row_forced(d), col_forced(d);
    std::uint32_t row_offset = 0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::uint32_t r = 1; r < shape.n[j]; ++r) row_opts[j].push_back(row_offset + r);
        row_forced[j] = row_offset + static_cast<std::uint32_t>(shape.n[j]);
        row_offset += static_cast<std::uint32_t>(shape.n[j]);

        const std::uint32_t right = static_cast<std::uint32_t>(shape.m[j]);
        const std::uint32_t left =
            (j + 1 < d ? static_cast<std::uint32_t>(shape.m[j + 1]) : 0) + 1;
        for (std::uint32_t c = left; c < right; ++c) col_opts[j].push_back(c);
        col_forced[j] = right;
    }

    std::vector<std::vector<std::uint32_t>> row_sets, col_sets;
    std::function<void(std::size_t, std::vector<std::uint32_t>&,
                       const std::vector<std::vector<std::uint32_t>>&,
                       const std::vector<std::uint32_t>&, const std::vector<std::uint64_t>&,
                       std::vector<std::vector<std::uint32_t>>&)>
        product = [&](std::size_t j, std::vector<std::uint32_t>& acc,
                      const std::vector<std::vector<std::uint32_t>>& opts,
                      const std::vector<std::uint32_t>& forced,
                      const std::vector<std::uint64_t>& count,
                      std::vector<std::vector<std::uint32_t>>& sink) {
            if (j == d) {
                sink.push_back(acc);
                return;
            }
            for_each_combination(opts[j], static_cast<std::size_t>(count[j]) - 1,
                                 [&](const std::vector<std::uint32_t>& chosen) {
                                     const std::size_t base = acc.size();
                                     acc.insert(acc.end(), chosen.begin(), chosen.end());
                                     acc.push_back(forced[j]);
                                     product(j + 1, acc, opts, forced, count, sink);
                                     acc.resize(base);
                                 });
        };

    std::vector<std::uint32_t> acc;
    product(0, acc, row_opts, row_forced, row_count, row_sets);
    acc.clear();
    product(0, acc, col_opts, col_forced, col_count, col_sets);

    for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) out.emplace_back(partition, rows, cols);
}

}  // namespace

std::vector<MarkedPartition> enumerate_marked(const Word& w, std::uint64_t n) {
    if (!w.is_admissible())
        throw std::domain_error("enumerate_marked: word '" + w.str() + "' starts with u_0");
    std::vector<MarkedPartition> out;
    if (w.empty()) {
        if (n == 0) out.emplace_back();
        return out;
    }
    const CanonicalForm form = canonical_form(w);
    const std::size_t d = form.size();
    std::vector<std::uint64_t> kk(d), zz(d);  // marking types: k_j rows, z_j columns
    for (std::size_t j = 0; j < d; ++j) {
        kk[j] = form[j].k;
        zz[j] = form[j].z + 1;
    }

    // m_j - m_{j+1} >= z_j forces m_j >= z_j + ... + z_{d-1}
    std::vector<std::uint64_t> min_part(d + 1, 0), min_weight(d + 1, 0);
    for (std::size_t j = d; j-- > 0;) {
        min_part[j] = min_part[j + 1] + zz[j];
        min_weight[j] = min_weight[j + 1] + min_part[j] * kk[j];
    }

    ShapeData shape;
    shape.m.resize(d);
    shape.n.resize(d);

    std::function<void(std::size_t, std::uint64_t)> choose_mult;
    std::function<void(std::size_t, std::uint64_t)> choose_part;

    // multiplicities n_j >= k_j with sum m_j n_j = n, chosen in ascending
    // lexicographic order
    choose_mult = [&](std::size_t j, std::uint64_t remaining) {
        if (j + 1 == d) {
            if (remaining % shape.m[j] != 0) return;
            const std::uint64_t mult = remaining / shape.m[j];
            if (mult < kk[j]) return;
            shape.n[j] = mult;
            std::vector<std::uint64_t> row_count(kk.begin(), kk.end());
            std::vector<std::uint64_t> col_count(zz.begin(), zz.end());
            build_marked_partitions(shape, row_count, col_count, out);
            return;
        }
        std::uint64_t deeper_min = 0;
        for (std::size_t i = j + 1; i < d; ++i) deeper_min += shape.m[i] * kk[i];
        for (std::uint64_t mult = kk[j]; mult * shape.m[j] + deeper_min <= remaining; ++mult) {
            shape.n[j] = mult;
            choose_mult(j + 1, remaining - mult * shape.m[j]);
        }
    };

    // distinct parts in ascending lexicographic order on (m_1, ..., m_d)
    choose_part = [&](std::size_t j, std::uint64_t committed) {
        if (j == d) {
            choose_mult(0, n);
            return;
        }
        const std::uint64_t upper_gap =
            j == 0 ? std::uint64_t(-1) : shape.m[j - 1] - zz[j - 1];
        for (std::uint64_t m = min_part[j];
             m <= upper_gap && committed + m * kk[j] + min_weight[j + 1] <= n; ++m) {
            shape.m[j] = m;
            choose_part(j + 1, committed + m * kk[j]);
        }
    };

    choose_part(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t psi_census(const Word& w, std::uint64_t n) {
    return enumerate_marked(w, n).size();
}

namespace {

void subsets_with_forced(const std::vector<std::vector<std::uint32_t>>& opts,
                         const std::vector<std::uint32_t>& forced,
                         std::vector<std::vector<std::uint32_t>>& sink) {
    std::vector<std::uint32_t> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == opts.size()) {
            sink.push_back(acc);
            return;
        }
        const std::size_t t = opts[j].size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
            const std::size_t base = acc.size();
            for (std::size_t b = 0; b < t; ++b)
                if (mask & (std::uint64_t(1) << b)) acc.push_back(opts[j][b]);
            acc.push_back(forced[j]);
            rec(j + 1);
            acc.resize(base);
        }
    };
    rec(0);
}

}  // namespace

std::vector<MarkedPartition> enumerate_all_marked(std::uint64_t n) {
    std::vector<MarkedPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> parts;
    std::function<void(std::uint64_t, std::uint32_t)> rec = [&](std::uint64_t remaining,
                                                                std::uint32_t max_part) {
        if (remaining == 0) {
            const Partition partition(parts);
            const auto groups = partition.groups();
            const std::size_t d = groups.size();
            std::vector<std::vector<std::uint32_t>> row_opts(d), col_opts(d);
            std::vector<std::uint32_t> row_forced(d), col_forced(d);
            std::uint32_t row_offset = 0;
            for (std::size_t j = 0; j < d; ++j) {
                for (std::uint32_t r = 1; r < groups[j].multiplicity; ++r)
                    row_opts[j].push_back(row_offset + r);
                row_forced[j] = row_offset + groups[j].multiplicity;
                row_offset += groups[j].multiplicity;
                const std::uint32_t right = groups[j].part;
                const std::uint32_t left = (j + 1 < d ? groups[j + 1].part : 0) + 1;
                for (std::uint32_t c = left; c < right; ++c) col_opts[j].push_back(c);
                col_forced[j] = right;
            }
            std::vector<std::vector<std::uint32_t>> row_sets, col_sets;
            subsets_with_forced(row_opts, row_forced, row_sets);
            subsets_with_forced(col_opts, col_forced, col_sets);
            for (const auto& rows : row_sets)
                for (const auto& cols : col_sets) out.emplace_back(partition, rows, cols);
            return;
        }
        for (std::uint32_t p = std::min<std::uint64_t>(max_part, remaining); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, static_cast<std::uint32_t>(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::string mp_line(const MarkedPartition& mp) {
    auto join = [](const auto& values) {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(values[i]);
        }
        return s;
    };
    return "{\"parts\":[" + join(mp.partition().parts()) + "],\"rows\":[" +
           join(mp.row_marks()) + "],\"cols\":[" + join(mp.col_marks()) + "]}";
}

MarkedPartition parse_mp_line(std::string_view line) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("marked partition parse error: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("parts") || !parsed.contains("rows") ||
        !parsed.contains("cols"))
        throw std::invalid_argument(
            "marked partition parse error: expected {\"parts\":[],\"rows\":[],\"cols\":[]}");
    auto read_list = [&](const char* key) {
        std::vector<std::uint32_t> values;
        const auto& node = parsed.at(key);
        if (!node.is_array())
            throw std::invalid_argument(std::string("marked partition parse error: '") + key +
                                        "' must be an array");
        for (const auto& v : node) {
            if (!v.is_number_unsigned())
                throw std::invalid_argument(std::string("marked partition parse error: '") +
                                            key + "' entries must be nonnegative integers");
            values.push_back(v.get<std::uint32_t>());
        }
        return values;
    };
    return MarkedPartition(Partition(read_list("parts")), read_list("rows"), read_list("cols"));
}

}  // namespace qmzv
