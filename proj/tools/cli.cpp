#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmzv/duality.hpp"
#include "qmzv/partitions.hpp"
#include "qmzv/phi.hpp"
#include "qmzv/qseries.hpp"
#include "qmzv/relations.hpp"
#include "qmzv/stuffle.hpp"
#include "qmzv/word.hpp"

namespace qmzv {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

MarkedPartition read_single_mp(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.size() != 1)
        throw std::domain_error("expected exactly one marked partition in " + path + ", got " +
                                std::to_string(lines.size()) + " lines");
    return parse_mp_line(lines.front());
}

struct Invocation {
    std::string w1, w2, w3;
    std::string file_a, file_b;
    std::string impl = "front";
    std::uint32_t order = 0;
    std::uint64_t number = 0;
    std::uint64_t max_len = 0, max_index = 0, max_weight = 0;
    unsigned jobs = 1;
    bool recursive = false;
    bool compare_flag = false;
    bool inject_fault = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schlesinger-Zudilin multiple q-zeta value toolkit"};
    app.require_subcommand(1);
    Invocation inv;

    auto* cmd_stuffle = app.add_subcommand("stuffle", "Stuffle product of two words");
    cmd_stuffle->add_option("w1", inv.w1, "first word")->required();
    cmd_stuffle->add_option("w2", inv.w2, "second word")->required();
    cmd_stuffle->add_option("--impl", inv.impl, "recursion to use")
        ->check(CLI::IsMember({"front", "back", "block"}));

    auto* cmd_dual = app.add_subcommand("dual", "Duality involution of an admissible word");
    cmd_dual->add_option("w", inv.w1, "admissible word")->required();

    auto* cmd_sz = app.add_subcommand("sz", "q-expansion of an admissible word");
    cmd_sz->add_option("w", inv.w1, "admissible word")->required();
    cmd_sz->add_option("--order", inv.order, "truncation order Q")->required();

    auto* cmd_psi = app.add_subcommand("psi", "N-th Fourier coefficient of sz(w)");
    cmd_psi->add_option("w", inv.w1, "admissible word")->required();
    cmd_psi->add_option("N", inv.number, "coefficient index")->required();

    auto* cmd_mp = app.add_subcommand("mp", "Marked partition operations");
    cmd_mp->require_subcommand(1);
    auto* cmd_mp_enumerate =
        cmd_mp->add_subcommand("enumerate", "All marked partitions of a type and weight");
    cmd_mp_enumerate->add_option("w", inv.w1, "type word")->required();
    cmd_mp_enumerate->add_option("N", inv.number, "weight")->required();
    auto* cmd_mp_validate =
        cmd_mp->add_subcommand("validate", "Check the distinct-marking invariants");
    cmd_mp_validate->add_option("file", inv.file_a, "marked partitions, one per line")
        ->required();
    auto* cmd_mp_type = cmd_mp->add_subcommand("type", "Type word of each marked partition");
    cmd_mp_type->add_option("file", inv.file_a, "marked partitions, one per line")->required();
    auto* cmd_mp_split =
        cmd_mp->add_subcommand("split", "Remove the minimal horizontal block; prints the "
                                        "remainder, then the block");
    cmd_mp_split->add_option("file", inv.file_a, "marked partitions, one per line")->required();

    auto* cmd_phi = app.add_subcommand("phi", "Glue two marked partitions");
    cmd_phi->add_option("fileA", inv.file_a, "first marked partition")->required();
    cmd_phi->add_option("fileB", inv.file_b, "second marked partition")->required();

    auto* cmd_mult = app.add_subcommand("mult", "Multiplicity of a word in a stuffle product");
    cmd_mult->add_option("w1", inv.w1, "first word")->required();
    cmd_mult->add_option("w2", inv.w2, "second word")->required();
    cmd_mult->add_option("w", inv.w3, "target word")->required();
    cmd_mult->add_flag("--recursive", inv.recursive, "use the tail recursion");

    auto* cmd_verify = app.add_subcommand(
        "verify-theorem", "Exhaustively compare gluing counts with stuffle multiplicities");
    cmd_verify->add_option("--max-len", inv.max_len, "maximal word length")->required();
    cmd_verify->add_option("--max-index", inv.max_index, "maximal letter index")->required();
    cmd_verify->add_option("--max-N", inv.max_weight, "maximal target weight")->required();
    cmd_verify->add_option("--jobs", inv.jobs, "concurrent verification workers");
    cmd_verify->add_flag("--inject-fault", inv.inject_fault)->group("");

    auto* cmd_relations =
        app.add_subcommand("relations", "Kernel of the truncated sz evaluation");
    cmd_relations->add_option("--max-len", inv.max_len, "maximal word length")->required();
    cmd_relations->add_option("--max-index", inv.max_index, "maximal letter index")->required();
    cmd_relations->add_option("--order", inv.order, "truncation order Q")->required();
    cmd_relations->add_flag("--compare", inv.compare_flag,
                            "also print the duality/stuffle span and compare dimensions");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        const auto parsed = app.get_subcommands();
        err << (parsed.empty() ? app.help() : parsed.front()->help());
        return 2;
    }

    try {
        if (cmd_stuffle->parsed()) {
            const Word a = parse_word(inv.w1);
            const Word b = parse_word(inv.w2);
            LinearCombination lc;
            if (inv.impl == "front")
                lc = stuffle(a, b);
            else if (inv.impl == "back")
                lc = stuffle_reversed(a, b);
            else
                lc = stuffle_block(a, b);
            out << lc.str();
        } else if (cmd_dual->parsed()) {
            out << tau(parse_word(inv.w1)).str() << '\n';
        } else if (cmd_sz->parsed()) {
            out << sz(parse_word(inv.w1), inv.order).str();
        } else if (cmd_psi->parsed()) {
            out << rational_str(psi(parse_word(inv.w1), static_cast<std::uint32_t>(inv.number)))
                << '\n';
        } else if (cmd_mp_enumerate->parsed()) {
            for (const auto& mp : enumerate_marked(parse_word(inv.w1), inv.number))
                out << mp_line(mp) << '\n';
        } else if (cmd_mp_validate->parsed()) {
            bool all_ok = true;
            const auto lines = read_lines(inv.file_a);
            for (std::size_t i = 0; i < lines.size(); ++i) {
                const auto check = validate(parse_mp_line(lines[i]));
                out << "line " << (i + 1) << ": "
                    << (check.ok ? "ok" : "violation: " + check.message) << '\n';
                all_ok = all_ok && check.ok;
            }
            return all_ok ? 0 : 1;
        } else if (cmd_mp_type->parsed()) {
            for (const auto& line : read_lines(inv.file_a))
                out << type_word(parse_mp_line(line)).str() << '\n';
        } else if (cmd_mp_split->parsed()) {
            for (const auto& line : read_lines(inv.file_a)) {
                const MarkedPartition mp = parse_mp_line(line);
                out << mp_line(split_rest(mp)) << '\n';
                out << mp_line(split_lower(mp)) << '\n';
            }
        } else if (cmd_phi->parsed()) {
            out << mp_line(phi(read_single_mp(inv.file_a), read_single_mp(inv.file_b))) << '\n';
        } else if (cmd_mult->parsed()) {
            const MultiplicityQuery query{parse_word(inv.w1), parse_word(inv.w2),
                                          parse_word(inv.w3)};
            out << (inv.recursive ? multiplicity_recursive(query) : multiplicity(query)).str()
                << '\n';
        } else if (cmd_verify->parsed()) {
            VerifyOptions options;
            options.jobs = inv.jobs;
            options.inject_fault = inv.inject_fault;
            const TheoremSummary summary =
                verify_theorem(inv.max_len, inv.max_index, inv.max_weight, options);
            out << summary.str();
            return summary.mismatches == 0 ? 0 : 3;
        } else if (cmd_relations->parsed()) {
            if (inv.order < 10 * inv.max_len)
                err << "warning: order " << inv.order << " is below 10*max_len = "
                    << 10 * inv.max_len
                    << "; candidates vanish through q^" << inv.order << " only\n";
            const WordBasis basis = enumerate_basis(inv.max_len, inv.max_index);
            for (const auto& candidate : discover(inv.max_len, inv.max_index, inv.order))
                out << relation_line(candidate, basis) << '\n';
            if (inv.compare_flag) {
                for (const auto& candidate : known_span(inv.max_len, inv.max_index, inv.order))
                    out << relation_line(candidate, basis) << '\n';
                const CompareReport report = compare(inv.max_len, inv.max_index, inv.order);
                out << "dim_kernel=" << report.dim_kernel << " dim_known=" << report.dim_known
                    << " containment=" << (report.containment ? "true" : "false") << '\n';
                if (!report.containment) return 3;
            }
        }
        return 0;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qmzv
