// Command-line front end: build, inspect and scan CSS codes constructed from
// classical parity-check inputs. All output is deterministic for a fixed
// (command line, seed) pair; every JSON document carries a reproducibility
// header. Exit codes: 0 ok, 2 usage/input error, 3 legality violation,
// 4 work-budget refusal.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcss/qcss.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonArgs {
    // Construction flags.
    std::size_t d = 0;
    std::string case_name;
    std::string seed_blocks;
    std::string flips;
    std::string rep;
    std::vector<std::string> alist_paths;
    // Knobs.
    uint64_t seed = 0;
    uint64_t trials = 1000;
    std::size_t budget = qcss::kDefaultDistanceBudget;
    std::string format;
    std::string out_dir = ".";
    std::string command_line;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::size_t parse_count(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size() || v < 0) {
            throw std::invalid_argument(text);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("invalid ") + what + ": '" + text + "'");
    }
}

/// Resolves --case / --seed-blocks / --flips into a spec.
qcss::ConstructionSpec resolve_spec(const CommonArgs& args) {
    if (!args.case_name.empty()) {
        if (args.d != 0 && args.d != 3) {
            throw std::invalid_argument("--case presets are three-sector constructions; --d " +
                                        std::to_string(args.d) + " contradicts that");
        }
        return qcss::canonical_spec(qcss::case_from_name(args.case_name));
    }
    if (args.seed_blocks.empty() || args.flips.empty()) {
        throw std::invalid_argument(
            "specify either --case or both --seed-blocks and --flips");
    }
    std::set<qcss::BlockLabel> seed;
    std::size_t dims = 0;
    for (const std::string& pattern : split(args.seed_blocks, ',')) {
        qcss::BlockLabel label(pattern);
        if (dims == 0) {
            dims = label.dims();
        } else if (label.dims() != dims) {
            throw qcss::legality_error("seed blocks disagree on the number of sectors");
        }
        seed.insert(label);
    }
    if (args.d != 0 && args.d != dims) {
        throw qcss::legality_error("--d " + std::to_string(args.d) +
                                   " contradicts seed blocks of length " + std::to_string(dims));
    }
    std::set<std::size_t> flip_counts;
    for (const std::string& f : split(args.flips, ',')) {
        flip_counts.insert(parse_count(f, "flip count"));
    }
    return qcss::ConstructionSpec(dims, std::move(seed), std::move(flip_counts));
}

/// Loads the D classical codes from --rep lengths or per-sector alist files.
std::vector<qcss::ClassicalCode> resolve_codes(const CommonArgs& args, std::size_t dims) {
    if (!args.rep.empty() && !args.alist_paths.empty()) {
        throw std::invalid_argument("--rep and --alist are mutually exclusive");
    }
    std::vector<qcss::ClassicalCode> codes;
    if (!args.rep.empty()) {
        for (const std::string& item : split(args.rep, ',')) {
            codes.push_back(qcss::repetition_code(parse_count(item, "repetition length")));
        }
    } else {
        for (const std::string& path : args.alist_paths) {
            std::ifstream in(path);
            if (!in) {
                throw std::invalid_argument("cannot open alist file: " + path);
            }
            std::ostringstream text;
            text << in.rdbuf();
            qcss::ClassicalCode code = qcss::parse_alist(text.str());
            code.name = path;
            codes.push_back(std::move(code));
        }
    }
    if (codes.size() != dims) {
        throw std::invalid_argument("expected " + std::to_string(dims) +
                                    " classical codes, got " + std::to_string(codes.size()));
    }
    return codes;
}

ordered_json header(const CommonArgs& args, bool with_trials) {
    ordered_json h;
    h["tool_version"] = qcss::kVersion;
    h["command_line"] = args.command_line;
    h["seed"] = args.seed;
    if (with_trials) {
        h["trials"] = args.trials;
    }
    return h;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string join_patterns(const std::vector<qcss::BlockLabel>& blocks) {
    std::string out;
    for (const qcss::BlockLabel& b : blocks) {
        if (!out.empty()) {
            out += ",";
        }
        out += b.pattern;
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

ordered_json ranges_json(const std::vector<qcss::BlockLabel>& order,
                         const std::map<qcss::BlockLabel, qcss::BlockRange>& ranges) {
    ordered_json arr = ordered_json::array();
    for (const qcss::BlockLabel& label : order) {
        const qcss::BlockRange r = ranges.at(label);
        arr.push_back({{"block", label.pattern}, {"begin", r.begin}, {"end", r.end}});
    }
    return arr;
}

int cmd_build(const CommonArgs& args) {
    const qcss::ConstructionSpec spec = resolve_spec(args);
    const qcss::RoleAssignment roles = qcss::derive_roles(spec);
    const qcss::LegalityReport legality = qcss::check_legality(spec, roles);
    if (!legality.legal()) {
        throw qcss::legality_error("construction is not legal: " + legality.str());
    }
    const std::vector<qcss::ClassicalCode> codes = resolve_codes(args, spec.d);
    const qcss::CssCode code = qcss::assemble(spec, codes);

    const std::string format = args.format.empty() ? "alist" : args.format;
    std::filesystem::create_directories(args.out_dir);
    const std::filesystem::path dir(args.out_dir);
    std::string hx_name, hz_name;
    if (format == "alist") {
        hx_name = "hx.alist";
        hz_name = "hz.alist";
        write_file(dir / hx_name, qcss::emit_alist({"hx", code.hx}));
        write_file(dir / hz_name, qcss::emit_alist({"hz", code.hz}));
    } else if (format == "mtx") {
        hx_name = "hx.mtx";
        hz_name = "hz.mtx";
        write_file(dir / hx_name, qcss::emit_matrix_market(code.hx));
        write_file(dir / hz_name, qcss::emit_matrix_market(code.hz));
    } else {
        throw std::invalid_argument("build supports --format alist or mtx, got '" + format + "'");
    }

    ordered_json layout;
    layout["header"] = header(args, false);
    layout["spec"] = {{"d", spec.d},
                      {"seed_blocks", join_patterns(roles.z_blocks)},
                      {"flips", std::vector<std::size_t>(spec.flip_counts.begin(),
                                                         spec.flip_counts.end())}};
    layout["n"] = code.n;
    layout["qubit_blocks"] = ranges_json(roles.qubit_blocks, code.qubit_ranges);
    layout["z_blocks"] = ranges_json(roles.z_blocks, code.z_ranges);
    layout["x_blocks"] = ranges_json(roles.x_blocks, code.x_ranges);
    write_file(dir / "layout.json", layout.dump(2) + "\n");

    ordered_json doc;
    doc["header"] = header(args, false);
    doc["n"] = code.n;
    doc["hx_rows"] = code.hx.rows();
    doc["hz_rows"] = code.hz.rows();
    doc["files"] = {hx_name, hz_name, "layout.json"};
    emit(doc);
    return 0;
}

ordered_json distance_json(const qcss::CodeMetrics& metrics) {
    ordered_json doc;
    doc["n"] = metrics.n;
    doc["k"] = metrics.k;
    if (metrics.distance) {
        const qcss::DistanceResult& dr = *metrics.distance;
        doc["d"] = dr.d;
        doc["d_kind"] = dr.kind == qcss::DistanceKind::exact ? "exact" : "upper_bound";
        doc["d_x"] = dr.d_x ? ordered_json(*dr.d_x) : ordered_json(nullptr);
        doc["d_z"] = dr.d_z ? ordered_json(*dr.d_z) : ordered_json(nullptr);
        ordered_json estimator;
        estimator["method"] = dr.method;
        if (dr.kind == qcss::DistanceKind::upper_bound) {
            estimator["trials"] = dr.trials;
            estimator["seed"] = dr.seed;
        }
        doc["estimator"] = estimator;
    } else {
        doc["d"] = nullptr;
        doc["d_kind"] = "undefined";
        doc["d_x"] = nullptr;
        doc["d_z"] = nullptr;
        doc["estimator"] = nullptr;
    }
    return doc;
}

int cmd_metrics(const CommonArgs& args) {
    const qcss::ConstructionSpec spec = resolve_spec(args);
    const std::vector<qcss::ClassicalCode> codes = resolve_codes(args, spec.d);
    const qcss::CssCode code = qcss::assemble(spec, codes);

    qcss::MetricsOptions options;
    options.budget = args.budget;
    options.trials = args.trials;
    options.seed = args.seed;
    const qcss::CodeMetrics metrics = qcss::compute_metrics(code, options);

    ordered_json doc;
    doc["header"] = header(args, true);
    const ordered_json body = distance_json(metrics);
    for (const auto& [key, value] : body.items()) {
        doc[key] = value;
    }
    emit(doc);
    return 0;
}

int cmd_validate(const CommonArgs& args, const std::string& hx_path, const std::string& hz_path) {
    qcss::CssCode code;
    if (!hx_path.empty() || !hz_path.empty()) {
        if (hx_path.empty() || hz_path.empty()) {
            throw std::invalid_argument("validate needs both --hx and --hz (or neither)");
        }
        auto load = [](const std::string& path) {
            std::ifstream in(path);
            if (!in) {
                throw std::invalid_argument("cannot open alist file: " + path);
            }
            std::ostringstream text;
            text << in.rdbuf();
            return qcss::parse_alist(text.str()).h;
        };
        code.hx = load(hx_path);
        code.hz = load(hz_path);
        if (code.hx.cols() != code.hz.cols()) {
            throw std::invalid_argument("hx and hz have different qubit counts");
        }
        code.n = code.hx.cols();
    } else {
        const qcss::ConstructionSpec spec = resolve_spec(args);
        code = qcss::assemble(spec, resolve_codes(args, spec.d));
    }

    const auto [hx_row, hz_row] = qcss::first_css_violation(code);
    const bool valid = hx_row < 0;
    ordered_json doc;
    doc["header"] = header(args, false);
    doc["valid"] = valid;
    doc["violation"] = valid ? ordered_json(nullptr)
                             : ordered_json{{"hx_row", hx_row}, {"hz_row", hz_row}};
    emit(doc);
    return valid ? 0 : 3;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char ch : value) {
        quoted += ch;
        if (ch == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

int cmd_scan(const CommonArgs& args, std::size_t n, const std::string& cases_arg) {
    std::set<qcss::CodeCase> cases;
    if (cases_arg.empty()) {
        cases = {qcss::CodeCase::A, qcss::CodeCase::B, qcss::CodeCase::C, qcss::CodeCase::D};
    } else {
        for (const std::string& name : split(cases_arg, ',')) {
            cases.insert(qcss::case_from_name(name));
        }
    }
    qcss::ScanOptions options;
    options.distance_trials = args.trials;
    options.seed = args.seed;
    options.budget = args.budget;
    const std::vector<qcss::ScanRow> rows = qcss::scan_fixed_n(n, cases, options);

    const std::string format = args.format.empty() ? "json" : args.format;
    if (format == "csv") {
        std::ostringstream out;
        out << "case,L1,L2,L3,n,k,d,d_kind\n";
        for (const qcss::ScanRow& row : rows) {
            out << csv_field(qcss::case_name(row.code_case)) << ',' << row.L[0] << ',' << row.L[1]
                << ',' << row.L[2] << ',' << row.n << ',' << row.k << ','
                << (row.d ? std::to_string(*row.d) : std::string()) << ','
                << csv_field(row.d_kind) << '\n';
        }
        std::cout << out.str();
        return 0;
    }
    if (format != "json") {
        throw std::invalid_argument("scan supports --format json or csv, got '" + format + "'");
    }
    ordered_json doc;
    doc["header"] = header(args, true);
    doc["n"] = n;
    ordered_json arr = ordered_json::array();
    for (const qcss::ScanRow& row : rows) {
        ordered_json r;
        r["case"] = qcss::case_name(row.code_case);
        r["L"] = row.L;
        r["n"] = row.n;
        r["k"] = row.k;
        r["d"] = row.d ? ordered_json(*row.d) : ordered_json(nullptr);
        r["d_kind"] = row.d_kind;
        arr.push_back(std::move(r));
    }
    doc["rows"] = std::move(arr);
    emit(doc);
    return 0;
}

int cmd_classify(const CommonArgs& args, std::size_t d) {
    const std::vector<qcss::ConstructionClass> classes = qcss::classify(d);
    ordered_json doc;
    doc["header"] = header(args, false);
    doc["d"] = d;
    ordered_json arr = ordered_json::array();
    for (const qcss::ConstructionClass& cls : classes) {
        ordered_json c;
        c["seed_size"] = cls.seed_size;
        c["flips"] = std::vector<std::size_t>(cls.flip_counts.begin(), cls.flip_counts.end());
        c["member_count"] = cls.member_count;
        std::vector<std::string> seed;
        for (const qcss::BlockLabel& b : cls.representative.z_seed) {
            seed.push_back(b.pattern);
        }
        c["representative"] = {{"seed_blocks", seed}};
        arr.push_back(std::move(c));
    }
    doc["classes"] = std::move(arr);
    emit(doc);
    return 0;
}

int cmd_lattice(const CommonArgs& args) {
    if (args.case_name.empty()) {
        throw std::invalid_argument("lattice requires --case");
    }
    const auto lengths = split(args.rep, ',');
    if (lengths.size() != 3) {
        throw std::invalid_argument("lattice requires --rep L1,L2,L3");
    }
    qcss::Lengths L{parse_count(lengths[0], "length"), parse_count(lengths[1], "length"),
                    parse_count(lengths[2], "length")};
    const qcss::LatticeGeometry geometry =
        qcss::lattice_geometry(qcss::case_from_name(args.case_name), L);

    auto sites_json = [](const std::vector<qcss::LatticeSite>& sites, const char* index_name) {
        ordered_json arr = ordered_json::array();
        for (const qcss::LatticeSite& s : sites) {
            ordered_json site;
            site["block"] = s.block.pattern;
            site["index"] = s.index;
            site["coords"] = s.coords;
            site[index_name] = s.matrix_index;
            arr.push_back(std::move(site));
        }
        return arr;
    };

    ordered_json doc;
    doc["header"] = header(args, false);
    doc["case"] = qcss::case_name(geometry.code_case);
    doc["L"] = geometry.L;
    doc["qubits"] = sites_json(geometry.qubits, "column");
    doc["z_checks"] = sites_json(geometry.z_checks, "row");
    doc["x_checks"] = sites_json(geometry.x_checks, "row");
    doc["z_incidence"] = geometry.z_incidence;
    doc["x_incidence"] = geometry.x_incidence;
    emit(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CommonArgs args;
    {
        std::string cmdline;
        for (int i = 0; i < argc; ++i) {
            if (i) {
                cmdline += ' ';
            }
            cmdline += argv[i];
        }
        args.command_line = cmdline;
    }

    CLI::App app{"CSS code construction from classical parity-check inputs"};
    app.require_subcommand(1);

    std::size_t scan_n = 0;
    std::string scan_cases;
    std::size_t classify_d = 3;
    std::string hx_path, hz_path;

    auto add_construction_flags = [&](CLI::App* cmd) {
        cmd->add_option("--d", args.d, "number of classical-code sectors");
        cmd->add_option("--case", args.case_name, "canonical 3-sector construction: A, B, C or D");
        cmd->add_option("--seed-blocks", args.seed_blocks,
                        "comma-separated B/C block patterns for the Z-check seed");
        cmd->add_option("--flips", args.flips, "comma-separated odd flip counts");
        cmd->add_option("--rep", args.rep, "comma-separated repetition-code lengths, one per sector");
        cmd->add_option("--alist", args.alist_paths, "alist file per sector (repeatable)");
    };

    CLI::App* build = app.add_subcommand("build", "assemble hx/hz and write them to files");
    add_construction_flags(build);
    build->add_option("--format", args.format, "output format: alist (default) or mtx");
    build->add_option("--out", args.out_dir, "output directory (default .)");

    CLI::App* metrics = app.add_subcommand("metrics", "n, k and distance of a construction");
    add_construction_flags(metrics);
    metrics->add_option("--trials", args.trials, "estimator trials (default 1000)");
    metrics->add_option("--seed", args.seed, "estimator PRNG seed");
    metrics->add_option("--budget", args.budget, "exact-distance enumeration budget");

    CLI::App* validate = app.add_subcommand("validate", "check hx * hz^T == 0");
    add_construction_flags(validate);
    validate->add_option("--hx", hx_path, "hx alist file (with --hz, instead of construction flags)");
    validate->add_option("--hz", hz_path, "hz alist file");

    CLI::App* scan = app.add_subcommand("scan", "all length triples at a fixed qubit count");
    scan->add_option("--n", scan_n, "total qubit count")->required();
    scan->add_option("--cases", scan_cases, "comma-separated cases (default A,B,C,D)");
    scan->add_option("--trials", args.trials, "estimator trials per row (default 1000)");
    scan->add_option("--seed", args.seed, "estimator PRNG seed");
    scan->add_option("--budget", args.budget, "exact-distance enumeration budget");
    scan->add_option("--format", args.format, "output format: json (default) or csv");

    CLI::App* classify = app.add_subcommand("classify", "census of inequivalent constructions");
    classify->add_option("--d", classify_d, "number of sectors (default 3)");

    CLI::App* lattice = app.add_subcommand("lattice", "site placements and geometric incidence");
    lattice->add_option("--case", args.case_name, "construction case: A, B, C or D");
    lattice->add_option("--rep", args.rep, "repetition lengths L1,L2,L3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (build->parsed()) {
            return cmd_build(args);
        }
        if (metrics->parsed()) {
            return cmd_metrics(args);
        }
        if (validate->parsed()) {
            return cmd_validate(args, hx_path, hz_path);
        }
        if (scan->parsed()) {
            return cmd_scan(args, scan_n, scan_cases);
        }
        if (classify->parsed()) {
            return cmd_classify(args, classify_d);
        }
        if (lattice->parsed()) {
            return cmd_lattice(args);
        }
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const qcss::budget_error& e) {
        std::cerr << e.what() << '\n';
        return 4;
    } catch (const qcss::legality_error& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const qcss::alist_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
