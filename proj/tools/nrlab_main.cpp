// Command-line front end. Subcommands:
//
//   check <file>            validate a structure file and print its profile
//   derivations <file>      enumerate multiplicative derivations
//   theorems <file|dir>     evaluate statement specs, JSONL verdicts on stdout
//   enumerate               generate all near-rings of an order into a directory
//   hunt                    search for counterexamples to a weakened spec
//   report                  merge JSONL verdict files, emit JSONL or CSV
//
// Exit codes: 0 success, 1 usage or input error, 2 when any Refuted
// verdict was produced.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nrlab/catalog_io.hpp"
#include "nrlab/derivations.hpp"
#include "nrlab/enumeration.hpp"
#include "nrlab/identity.hpp"
#include "nrlab/near_ring.hpp"
#include "nrlab/theorems.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace nrlab;

namespace {

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& extension) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == extension)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_check(const std::string& file) {
    StructureTables t = read_structure_tables(file);
    std::string name = t.name.empty() ? fs::path(file).stem().string() : t.name;
    ValidationResult r = validate_near_ring(t.add, t.mul, name);
    if (!r.ok()) {
        std::cout << name << ": " << r.violations.size() << " axiom violation(s)\n";
        for (const Violation& v : r.violations) std::cout << "  " << to_string(v) << "\n";
        return 1;
    }
    const NearRing& n = *r.near_ring;
    const StructuralPredicates preds = structural_predicates(n);
    std::cout << name << ": valid left near-ring of order " << n.order << "\n";
    std::cout << "  zero-symmetric: " << yes_no(is_zero_symmetric(n)) << "\n";
    if (auto p = three_prime_violation(n))
        std::cout << "  3-prime: no (x=" << p->first << ", y=" << p->second
                  << " annihilate through N)\n";
    else
        std::cout << "  3-prime: yes\n";
    std::cout << "  2-torsion-free: " << yes_no(is_2_torsion_free(n)) << "\n";
    std::cout << "  abelian addition: " << yes_no(preds.abelian_addition) << "\n";
    std::cout << "  commutative multiplication: " << yes_no(preds.commutative_mul) << "\n";
    std::cout << "  right distributive: " << yes_no(preds.right_distributive) << "\n";
    std::cout << "  center: {";
    bool first = true;
    for (Element z : center(n)) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << z;
    }
    std::cout << "}\n";
    return 0;
}

int run_derivations(const std::string& file, bool count_only, bool non_additive_only) {
    const NearRing n = read_structure(file);
    std::vector<std::pair<int, DerivationMap>> rows;
    int index = -1;
    for_each_mult_derivation(n, [&](const DerivationMap& d) {
        ++index;
        if (!non_additive_only || !is_additive(n, d)) rows.push_back({index, d});
        return true;
    });
    if (count_only) {
        std::cout << rows.size() << "\n";
        return 0;
    }
    for (const auto& [i, d] : rows) {
        ordered_json row;
        row["index"] = i;
        row["map"] = d;
        row["additive"] = is_additive(n, d);
        std::cout << row.dump() << "\n";
    }
    std::cerr << rows.size() << " derivation(s) on " << n.name << "\n";
    return 0;
}

int run_theorems(const std::string& target, const std::vector<std::string>& spec_ids,
                 const std::string& identity_text, bool canonical) {
    std::vector<fs::path> files;
    if (fs::is_directory(target)) {
        files = sorted_files(target, ".json");
        if (files.empty()) {
            std::cerr << "error: no .json structure files in " << target << "\n";
            return 1;
        }
    } else {
        files.push_back(target);
    }

    std::vector<TheoremSpec> specs;
    for (const std::string& id : spec_ids) {
        auto spec = find_spec(id);
        if (!spec) {
            std::cerr << "error: unknown spec id " << id << " (known:";
            for (const TheoremSpec& s : registry()) std::cerr << " " << s.id;
            std::cerr << ")\n";
            return 1;
        }
        specs.push_back(*std::move(spec));
    }
    if (!identity_text.empty()) {
        try {
            specs.push_back(make_identity_spec(parse_identity(identity_text)));
        } catch (const ParseError& e) {
            std::cerr << "error: --identity parse error at byte " << e.position << ": "
                      << e.what() << "\n";
            return 1;
        }
    }
    if (specs.empty()) specs = registry(); // no selection means the full registry

    // Ingest everything up front so a bad file yields no verdicts.
    std::vector<NearRing> catalog;
    for (const fs::path& f : files) catalog.push_back(read_structure(f));

    CheckOptions opts;
    opts.with_timing = !canonical;
    const std::vector<Verdict> rows = sweep(catalog, specs, opts);
    for (const Verdict& v : rows) std::cout << verdict_to_jsonl(v) << "\n";

    const SweepSummary s = summarize(rows);
    std::cerr << catalog.size() << " structure(s), " << s.total() << " verdict(s): "
              << s.verified << " verified, " << s.skipped << " skipped, " << s.refuted
              << " refuted\n";
    return s.refuted > 0 ? 2 : 0;
}

int run_enumerate(int order, const std::string& group_filter, bool up_to_iso,
                  const std::string& out_dir) {
    std::vector<GroupTable> groups = enumerate_groups(order);
    if (!group_filter.empty()) {
        std::erase_if(groups, [&](const GroupTable& g) { return g.label != group_filter; });
        if (groups.empty()) {
            std::cerr << "error: no group labeled " << group_filter << " at order " << order
                      << " (available:";
            for (const GroupTable& g : enumerate_groups(order)) std::cerr << " " << g.label;
            std::cerr << ")\n";
            return 1;
        }
    }
    fs::create_directories(out_dir);
    std::size_t total = 0;
    for (const GroupTable& g : groups) {
        std::vector<NearRing> nearrings = enumerate_nearrings(g);
        if (up_to_iso) nearrings = dedup_up_to_isomorphism(nearrings);
        for (const NearRing& nr : nearrings)
            write_structure(nr, fs::path(out_dir) / (nr.name + ".json"));
        std::cerr << g.label << ": " << nearrings.size() << " near-ring(s)\n";
        total += nearrings.size();
    }
    std::cerr << "wrote " << total << " structure(s) to " << out_dir << "\n";
    return 0;
}

int run_hunt(const std::string& spec_id, const std::vector<std::string>& drops, int order,
             int max_witnesses, bool canonical) {
    auto spec = find_spec(spec_id);
    if (!spec) {
        std::cerr << "error: unknown spec id " << spec_id << " (known:";
        for (const TheoremSpec& s : registry()) std::cerr << " " << s.id;
        std::cerr << ")\n";
        return 1;
    }
    TheoremSpec weakened;
    try {
        weakened = weaken_spec(*spec, drops);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CheckOptions opts;
    opts.with_timing = !canonical;
    const std::vector<NearRing> candidates = hunt_candidates(order);
    const std::vector<Verdict> rows =
        hunt_counterexamples(candidates, weakened, max_witnesses, opts);
    for (const Verdict& v : rows) std::cout << verdict_to_jsonl(v) << "\n";

    std::cerr << "hunt " << spec_id << " without";
    for (const std::string& d : drops) std::cerr << " " << d;
    std::cerr << " at order " << order << ": " << rows.size() << " counterexample(s) among "
              << candidates.size() << " candidate structure(s)\n";
    return rows.empty() ? 0 : 2;
}

int run_report(const std::string& in_dir, const std::string& format) {
    if (!fs::is_directory(in_dir)) {
        std::cerr << "error: " << in_dir << " is not a directory\n";
        return 1;
    }
    std::vector<std::string> lines;
    for (const fs::path& f : sorted_files(in_dir, ".jsonl"))
        for (std::string& line : read_jsonl_lines(f)) lines.push_back(std::move(line));

    if (format == "json") {
        for (const std::string& line : lines) std::cout << line << "\n";
    } else {
        std::cout << kVerdictCsvHeader << "\n";
        for (const std::string& line : lines) std::cout << jsonl_line_to_csv_row(line) << "\n";
    }
    std::cerr << lines.size() << " report row(s)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"finite left near-ring laboratory"};
    app.require_subcommand(1);

    std::string check_file;
    auto* check = app.add_subcommand("check", "validate a structure file and print its profile");
    check->add_option("file", check_file, "structure JSON file")->required();

    std::string deriv_file;
    bool count_only = false, non_additive_only = false;
    auto* derivations =
        app.add_subcommand("derivations", "enumerate multiplicative derivations");
    derivations->add_option("file", deriv_file, "structure JSON file")->required();
    derivations->add_flag("--count-only", count_only, "print only the count");
    derivations->add_flag("--non-additive-only", non_additive_only,
                          "keep only non-additive derivations");

    std::string theorems_target, identity_text;
    std::vector<std::string> spec_ids;
    bool theorems_canonical = false;
    auto* theorems =
        app.add_subcommand("theorems", "evaluate statement specs over structures");
    theorems->add_option("target", theorems_target, "structure file or directory")->required();
    theorems->add_option("--spec", spec_ids, "spec ids to evaluate (default: all)");
    theorems->add_option("--identity", identity_text,
                         "evaluate an ad-hoc identity per derivation; combines "
                         "with --spec, otherwise replaces the registry");
    theorems->add_flag("--canonical", theorems_canonical,
                       "deterministic output: omit timing fields");

    int enum_order = 0;
    std::string group_filter, out_dir;
    bool up_to_iso = false;
    auto* enumerate = app.add_subcommand("enumerate", "generate all near-rings of an order");
    enumerate->add_option("--order", enum_order, "group order, 1 through 8")->required();
    enumerate->add_option("--group", group_filter, "restrict to one group label");
    enumerate->add_flag("--up-to-iso", up_to_iso, "deduplicate isomorphic structures");
    enumerate->add_option("--out", out_dir, "output directory")->required();

    std::string hunt_spec;
    std::vector<std::string> drops;
    int hunt_order = 4, max_witnesses = 1;
    bool hunt_canonical = false;
    auto* hunt = app.add_subcommand("hunt", "search for counterexamples to a weakened spec");
    hunt->add_option("--spec", hunt_spec, "spec id to weaken")->required();
    hunt->add_option("--drop", drops, "hypothesis to drop: three_prime or nonzero")
        ->required();
    hunt->add_option("--order", hunt_order, "structure order to search (default 4)");
    hunt->add_option("--max", max_witnesses, "stop after this many witnesses (default 1)");
    hunt->add_flag("--canonical", hunt_canonical, "deterministic output: omit timing fields");

    std::string report_dir, report_format;
    auto* report = app.add_subcommand("report", "merge JSONL verdict files");
    report->add_option("--in", report_dir, "directory of .jsonl files")->required();
    report->add_option("--format", report_format, "output format")
        ->required()
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(check)) return run_check(check_file);
        if (app.got_subcommand(derivations))
            return run_derivations(deriv_file, count_only, non_additive_only);
        if (app.got_subcommand(theorems))
            return run_theorems(theorems_target, spec_ids, identity_text, theorems_canonical);
        if (app.got_subcommand(enumerate))
            return run_enumerate(enum_order, group_filter, up_to_iso, out_dir);
        if (app.got_subcommand(hunt))
            return run_hunt(hunt_spec, drops, hunt_order, max_witnesses, hunt_canonical);
        if (app.got_subcommand(report)) return run_report(report_dir, report_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
