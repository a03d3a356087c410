#include "cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "knights/construct.hpp"
#include "knights/errors.hpp"
#include "knights/render.hpp"
#include "knights/search.hpp"
#include "knights/serialize.hpp"
#include "knights/theorems.hpp"

namespace knights::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNone = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};

ClassTarget parse_target(const std::string &text, Topology topology) {
    if (text == "any") return ClassTarget::any();
    if (text == "identity") return ClassTarget::identity();
    if (text == "generator") return ClassTarget::generator();
    if (text == "longitude") return ClassTarget::longitude();
    if (text.rfind("exact:", 0) == 0) {
        std::string body = text.substr(6);
        try {
            auto comma = body.find(',');
            if (comma == std::string::npos) {
                if (topology != Topology::Cylinder)
                    throw UsageError("exact:K applies to cylinders; use exact:P,Q on tori");
                return ClassTarget::exact_class(HomotopyClass::cylinder(std::stoi(body)));
            }
            if (topology != Topology::Torus)
                throw UsageError("exact:P,Q applies to tori; use exact:K on cylinders");
            int p = std::stoi(body.substr(0, comma));
            int q = std::stoi(body.substr(comma + 1));
            return ClassTarget::exact_class(HomotopyClass::torus(p, q));
        } catch (const std::invalid_argument &) {
        } catch (const std::out_of_range &) {
        }
        throw UsageError("malformed exact target '" + text + "'");
    }
    throw UsageError("unknown target '" + text + "'");
}

std::string target_label(const ClassTarget &target) {
    switch (target.kind) {
    case TargetKind::Identity: return "identity";
    case TargetKind::Generator: return "generator";
    case TargetKind::Longitude: return "longitude";
    case TargetKind::Any: return "any";
    case TargetKind::Exact:
        if (target.exact->topology == Topology::Cylinder)
            return "exact:" + std::to_string(target.exact->k);
        return "exact:" + std::to_string(target.exact->p) + "," + std::to_string(target.exact->q);
    }
    return "?";
}

std::string evidence_label(EvidenceKind kind) {
    switch (kind) {
    case EvidenceKind::FoundTour: return "found-tour";
    case EvidenceKind::ExhaustedNone: return "exhausted-none";
    case EvidenceKind::ParityBlocked: return "parity-blocked";
    case EvidenceKind::Skipped: return "skipped";
    }
    return "?";
}

std::vector<int> parse_extent_range(const std::string &text) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            if (v < 1) throw UsageError("extents must be positive: '" + text + "'");
            return {v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw UsageError("bad extent range '" + text + "'");
        std::vector<int> values;
        for (int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    } catch (const std::invalid_argument &) {
    } catch (const std::out_of_range &) {
    }
    throw UsageError("bad extent range '" + text + "'");
}

std::string slurp(const std::string &path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw UsageError("cannot read '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

std::string class_text(const HomotopyClass &c) {
    if (c.topology == Topology::Cylinder) return "k=" + std::to_string(c.k);
    return "p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
}

std::string tour_text(const Tour &tour) {
    std::ostringstream out;
    out << render(tour, {RenderMode::BoardAscii});
    if (tour.spec.topology != Topology::Regular && tour.closed)
        out << "class: " << class_text(classify(tour)) << '\n';
    out << "checksum: " << tour_checksum(tour) << '\n';
    return out.str();
}

std::string tour_output(const Tour &tour, const std::string &format) {
    if (format == "text") return tour_text(tour);
    return serialize_tour(tour) + "\n";
}

// per-subcommand state filled by CLI11
struct Options {
    std::string topology;
    int m = 0;
    int n = 0;
    std::string target = "any";
    Budget budget;
    std::string out_path;
    std::string in_path;
    std::string format = "json";
    std::string family;
    std::string source;
    std::string m_range;
    std::string n_range;
    std::string method = "construct";
    int jobs = 1;
    std::string mode = "board";
    int cell_px = 24;
    bool no_domains = false;
    std::string dir = "fixtures";
};

void add_board_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--topology", opt.topology, "board topology")
        ->required()
        ->check(CLI::IsMember({"regular", "cylinder", "torus"}));
    cmd->add_option("-m", opt.m, "number of columns")->required()->check(CLI::PositiveNumber);
    cmd->add_option("-n", opt.n, "number of rows")->required()->check(CLI::PositiveNumber);
}

void add_budget_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--budget-nodes", opt.budget.max_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ms", opt.budget.max_wall_ms, "search wall-clock budget (ms)")
        ->check(CLI::PositiveNumber);
}

int report_search_failure(const SearchOutcome &outcome, std::ostream &err) {
    if (outcome.status == SearchStatus::BudgetExceeded) {
        err << "budget exceeded after " << outcome.stats.nodes << " nodes ("
            << outcome.stats.ms << " ms)\n";
        return kExitBudget;
    }
    err << "no tour in the requested class\n";
    return kExitNone;
}

int do_solve(const Options &opt, std::ostream &out, std::ostream &err) {
    SearchProblem problem;
    problem.spec = {topology_from_name(opt.topology), opt.m, opt.n};
    problem.target = parse_target(opt.target, problem.spec.topology);
    SearchOutcome outcome = find_tour(problem, opt.budget);
    if (outcome.status != SearchStatus::Found) return report_search_failure(outcome, err);
    emit(tour_output(*outcome.tour, opt.format), opt.out_path, out);
    return kExitOk;
}

int do_construct(const Options &opt, std::ostream &out, std::ostream &err) {
    if (!opt.family.empty()) {
        auto family = family_from_name(opt.family);
        if (!family) throw UsageError("unknown family '" + opt.family + "'");
        Fixture fixture = get_fixture(*family, opt.m, opt.n);
        emit(tour_output(fixture.tour, opt.format), opt.out_path, out);
        return kExitOk;
    }
    if (opt.topology.empty()) throw UsageError("construct needs --family or --topology");
    BoardSpec spec{topology_from_name(opt.topology), opt.m, opt.n};
    Tour tour = construct(spec, parse_target(opt.target, spec.topology), opt.budget);
    emit(tour_output(tour, opt.format), opt.out_path, out);
    return kExitOk;
    (void)err;
}

int do_count(const Options &opt, std::ostream &out, std::ostream &err) {
    SearchProblem problem;
    problem.spec = {topology_from_name(opt.topology), opt.m, opt.n};
    problem.target = parse_target(opt.target, problem.spec.topology);
    SearchOutcome outcome = count_tours(problem, opt.budget);
    if (outcome.status == SearchStatus::BudgetExceeded) {
        err << "budget exceeded after " << outcome.stats.nodes << " nodes; found "
            << outcome.count << " tours so far\n";
        return kExitBudget;
    }
    if (opt.format == "text") {
        std::ostringstream text;
        text << "tours: " << outcome.count << '\n';
        emit(text.str(), opt.out_path, out);
    } else {
        ordered_json j;
        j["topology"] = opt.topology;
        j["m"] = opt.m;
        j["n"] = opt.n;
        j["target"] = target_label(problem.target);
        j["count"] = outcome.count;
        j["nodes"] = outcome.stats.nodes;
        j["ms"] = outcome.stats.ms;
        emit(j.dump() + "\n", opt.out_path, out);
    }
    return outcome.count > 0 ? kExitOk : kExitNone;
}

int do_classify(const Options &opt, std::ostream &out, std::ostream &err) {
    Tour tour = deserialize_tour(slurp(opt.in_path));
    if (tour.spec.topology == Topology::Regular)
        throw UsageError("plain rectangles carry no homotopy class");
    if (!tour.closed) throw UsageError("open tours carry no homotopy class");
    HomotopyClass c = classify(tour);
    if (opt.format == "text") {
        emit(class_text(c) + "\n", opt.out_path, out);
    } else {
        ordered_json j;
        j["topology"] = topology_name(c.topology);
        if (c.topology == Topology::Cylinder) {
            j["k"] = c.k;
        } else {
            j["p"] = c.p;
            j["q"] = c.q;
        }
        emit(j.dump() + "\n", opt.out_path, out);
    }
    return kExitOk;
    (void)err;
}

int do_render(const Options &opt, std::ostream &out, std::ostream &err) {
    Tour tour = deserialize_tour(slurp(opt.in_path));
    RenderOptions render_opts;
    if (opt.format == "svg" || opt.mode == "svg")
        render_opts.mode = RenderMode::LiftSvg;
    else if (opt.mode == "lift")
        render_opts.mode = RenderMode::LiftAscii;
    else
        render_opts.mode = RenderMode::BoardAscii;
    render_opts.show_fundamental_domains = !opt.no_domains;
    render_opts.cell_px = opt.cell_px;
    emit(render(tour, render_opts), opt.out_path, out);
    return kExitOk;
    (void)err;
}

std::string verdict_table(const std::vector<VerdictRow> &rows) {
    std::vector<std::array<std::string, 8>> cells;
    cells.push_back({"board", "target", "predicted", "evidence", "agree", "detail", "nodes", "ms"});
    for (const VerdictRow &row : rows) {
        const Claim &claim = row.claim;
        cells.push_back({topology_name(claim.spec.topology) + " " + std::to_string(claim.spec.m) +
                             "x" + std::to_string(claim.spec.n),
                         target_label(claim.target), claim.predicted ? "tour" : "none",
                         evidence_label(row.evidence), row.agree ? "yes" : "NO", row.detail,
                         std::to_string(row.stats.nodes), std::to_string(row.stats.ms)});
    }
    std::array<std::size_t, 8> widths{};
    for (const auto &line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            widths[c] = std::max(widths[c], line[c].size());
    std::ostringstream out;
    for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) out << "  ";
            out << line[c] << std::string(widths[c] - line[c].size(), ' ');
        }
        out << '\n';
    }
    std::size_t agreed = 0;
    for (const VerdictRow &row : rows) agreed += row.agree ? 1 : 0;
    out << "agreement: " << agreed << '/' << rows.size() << " cells\n";
    return out.str();
}

std::string verdict_lines(ClaimSource source, const std::vector<VerdictRow> &rows) {
    std::ostringstream out;
    for (const VerdictRow &row : rows) {
        const Claim &claim = row.claim;
        ordered_json j;
        j["source"] = claim_source_name(source);
        j["topology"] = topology_name(claim.spec.topology);
        j["m"] = claim.spec.m;
        j["n"] = claim.spec.n;
        j["target"] = target_label(claim.target);
        j["predicted"] = claim.predicted;
        j["evidence"] = evidence_label(row.evidence);
        j["agree"] = row.agree;
        j["detail"] = row.detail;
        j["nodes"] = row.stats.nodes;
        j["ms"] = row.stats.ms;
        out << j.dump() << '\n';
    }
    return out.str();
}

int do_verify(const Options &opt, std::ostream &out, std::ostream &err) {
    auto source = claim_source_from_name(opt.source);
    if (!source) throw UsageError("unknown source '" + opt.source + "'");
    VerifyMethod method =
        opt.method == "search" ? VerifyMethod::SearchOnly : VerifyMethod::ConstructThenSearch;
    std::vector<VerdictRow> rows =
        verify_range(*source, parse_extent_range(opt.m_range), parse_extent_range(opt.n_range),
                     method, opt.budget, opt.jobs);
    emit(opt.format == "text" ? verdict_table(rows) : verdict_lines(*source, rows), opt.out_path,
         out);

    bool disagreed = false;
    bool gave_up = false;
    for (const VerdictRow &row : rows) {
        if (row.agree) continue;
        if (row.evidence == EvidenceKind::Skipped)
            gave_up = true;
        else
            disagreed = true;
    }
    if (disagreed) {
        err << "predicate and evidence disagree\n";
        return kExitNone;
    }
    if (gave_up) {
        err << "some cells exhausted their budget\n";
        return kExitBudget;
    }
    return kExitOk;
}

int do_fixtures_rebuild(const Options &opt, std::ostream &out, std::ostream &err) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.dir);
    ordered_json manifest;
    manifest["format_version"] = 1;
    manifest["fixtures"] = ordered_json::array();
    for (Family family : all_families()) {
        for (auto [m, n] : base_sizes(family)) {
            Fixture fixture = derive_base_case(family, m, n);
            std::string file = family_name(family) + "_" + std::to_string(m) + "x" +
                               std::to_string(n) + ".json";
            emit(serialize_tour(fixture.tour) + "\n", (fs::path(opt.dir) / file).string(), out);
            ordered_json entry;
            entry["family"] = family_name(family);
            entry["m"] = m;
            entry["n"] = n;
            entry["file"] = file;
            entry["checksum"] = fixture.checksum;
            manifest["fixtures"].push_back(std::move(entry));
        }
    }
    emit(manifest.dump(2) + "\n", (fs::path(opt.dir) / "manifest.json").string(), out);
    out << "wrote " << manifest["fixtures"].size() << " fixtures to " << opt.dir << '\n';
    return kExitOk;
    (void)err;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"knight's tour workbench for rectangular, cylindrical, and toroidal boards"};
    app.require_subcommand(1);
    Options opt;

    CLI::App *solve = app.add_subcommand("solve", "search for a tour in a homotopy class");
    add_board_options(solve, opt);
    solve->add_option("--target", opt.target, "homotopy class target");
    add_budget_options(solve, opt);
    solve->add_option("--out", opt.out_path, "output file (default stdout)");
    solve->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App *classify_cmd = app.add_subcommand("classify", "read a tour document, print its class");
    classify_cmd->add_option("--in", opt.in_path, "tour document (default stdin)");
    classify_cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    classify_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App *verify = app.add_subcommand("verify", "sweep a characterization against evidence");
    verify->add_option("--source", opt.source, "which characterization to sweep")->required();
    verify->add_option("-m", opt.m_range, "column extent or range LO..HI")->required();
    verify->add_option("-n", opt.n_range, "row extent or range LO..HI")->required();
    verify->add_option("--method", opt.method, "evidence method")
        ->check(CLI::IsMember({"search", "construct"}));
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_budget_options(verify, opt);
    verify->add_option("--out", opt.out_path, "output file (default stdout)");
    verify->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App *construct_cmd =
        app.add_subcommand("construct", "build a tour by induction instead of search");
    construct_cmd->add_option("--family", opt.family, "inductive family name");
    construct_cmd->add_option("--topology", opt.topology, "board topology")
        ->check(CLI::IsMember({"regular", "cylinder", "torus"}));
    construct_cmd->add_option("-m", opt.m, "number of columns")
        ->required()
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("-n", opt.n, "number of rows")
        ->required()
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("--target", opt.target, "homotopy class target");
    add_budget_options(construct_cmd, opt);
    construct_cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    construct_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App *count = app.add_subcommand("count", "count all tours in a homotopy class");
    add_board_options(count, opt);
    count->add_option("--target", opt.target, "homotopy class target");
    add_budget_options(count, opt);
    count->add_option("--out", opt.out_path, "output file (default stdout)");
    count->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App *render_cmd = app.add_subcommand("render", "draw a tour document");
    render_cmd->add_option("--in", opt.in_path, "tour document (default stdin)");
    render_cmd->add_option("--mode", opt.mode, "diagram style")
        ->check(CLI::IsMember({"board", "lift", "svg"}));
    render_cmd->add_option("--format", opt.format, "text or svg")
        ->check(CLI::IsMember({"text", "svg"}));
    render_cmd->add_option("--cell-px", opt.cell_px, "svg cell size in pixels");
    render_cmd->add_flag("--no-domains", opt.no_domains, "hide fundamental-domain rulings");
    render_cmd->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App *fixtures = app.add_subcommand("fixtures", "manage the frozen base-case store");
    fixtures->require_subcommand(1);
    CLI::App *rebuild = fixtures->add_subcommand("rebuild", "re-derive every base fixture");
    rebuild->add_option("--dir", opt.dir, "fixture directory");

    opt.format = "json";
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) return do_solve(opt, out, err);
        if (*classify_cmd) return do_classify(opt, out, err);
        if (*verify) return do_verify(opt, out, err);
        if (*construct_cmd) return do_construct(opt, out, err);
        if (*count) return do_count(opt, out, err);
        if (*render_cmd) return do_render(opt, out, err);
        if (*rebuild) return do_fixtures_rebuild(opt, out, err);
        err << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Unsupported &e) {
        err << "no tour: " << e.what() << '\n';
        return kExitNone;
    } catch (const BaseCaseNotFound &e) {
        err << "no tour: " << e.what() << '\n';
        return kExitNone;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace knights::cli
