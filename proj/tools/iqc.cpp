// iqc: generate, compile, verify and sweep generalized-Toffoli circuits.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 capacity, 4 any other failure.

#include "iqc/analyzer.hpp"
#include "iqc/bench.hpp"
#include "iqc/gates.hpp"
#include "iqc/layout.hpp"
#include "iqc/qd_format.hpp"
#include "iqc/router.hpp"
#include "iqc/sim.hpp"
#include "iqc/timing.hpp"
#include "iqc/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

namespace {

using namespace iqc;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitOther = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int to_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
        throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

// "5", "2,3,5", "5-65" or "5-65:5".
std::vector<int> parse_int_list(std::string_view spec, std::string_view what) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const auto item = spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            out.push_back(to_int(item, what));
        } else {
            const auto colon = item.find(':');
            const int lo = to_int(item.substr(0, dash), what);
            const int hi = to_int(item.substr(dash + 1, colon == std::string_view::npos ? colon : colon - dash - 1), what);
            const int step = colon == std::string_view::npos ? 1 : to_int(item.substr(colon + 1), what);
            if (step < 1 || hi < lo) throw UsageError("bad range '" + std::string(item) + "'");
            for (int v = lo; v <= hi; v += step) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

TimingTable load_timing(const std::string& path) {
    TimingTable t = TimingTable::load_default();
    if (path.empty()) return t;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open timing file " + path);
    try {
        t.apply_overrides(in);
    } catch (const TimingError& e) {
        throw UsageError(e.what());
    }
    return t;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return parse_qd(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

nlohmann::ordered_json mapping_json(const Mapping& m) {
    auto arr = nlohmann::ordered_json::array();
    for (SiteId s : m.phi()) arr.push_back(s);
    return arr;
}

nlohmann::ordered_json row_json(const MetricsRow& r) {
    nlohmann::ordered_json j;
    j["controls"] = r.controls;
    j["radix"] = r.radix;
    j["gates_pre"] = r.gates_pre;
    j["gates_post"] = r.gates_post;
    j["swap_count"] = r.swap_count;
    j["depth_pre"] = r.depth_pre;
    j["depth_post"] = r.depth_post;
    j["swap_decomposed_depth_post"] = r.swap_decomposed_depth_post;
    j["duration_ns"] = r.duration_ns;
    j["qudits_used"] = r.qudits_used;
    j["space_time"] = r.space_time;
    j["swap_flips"] = r.swap_flips;
    return j;
}

struct Options {
    int radix = 0;
    int controls = 0;
    std::string radices = "2,3,4,5";
    std::string control_range = "5-65:5";
    std::string grid = "12x12";
    std::string timing;
    std::string out;
    std::string csv;
    std::string report;
    std::string input;
    std::string pre;
    std::string post;
    std::string domain = "binary";
    unsigned threads = 0;
};

int cmd_bench(const Options& o) {
    write_text(o.out, to_qd(gen_cnx(o.controls, o.radix)));
    return 0;
}

int cmd_compile(const Options& o) {
    const Topology topo = Topology::parse_grid(o.grid);
    const TimingTable t = load_timing(o.timing);
    const Circuit input = load_circuit(o.input);
    const CompileResult r = compile(input, topo, t);
    write_text(o.out, to_qd(r.routed));
    if (!o.report.empty()) {
        nlohmann::ordered_json j;
        j["name"] = r.routed.meta().name;
        j["grid"] = {{"rows", topo.rows()}, {"cols", topo.cols()}};
        j["metrics"] = row_json(r.row);
        j["qubit_toffolis"] = r.decomposed.meta().qubit_toffolis;
        j["qudit_toffolis"] = r.decomposed.meta().qudit_toffolis;
        j["initial_mapping"] = mapping_json(*r.routed.initial_mapping());
        j["final_mapping"] = mapping_json(*r.routed.final_mapping());
        write_text(o.report, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const Options& o) {
    Domain domain{};
    if (o.domain == "binary") {
        domain = Domain::Binary;
    } else if (o.domain == "full") {
        domain = Domain::Full;
    } else {
        throw UsageError("domain must be binary or full");
    }
    const Circuit pre = load_circuit(o.pre);
    const Circuit post = load_circuit(o.post);
    Equivalence eq;
    try {
        eq = equivalent(pre, post, domain);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const DomainTooLarge& e) {
        throw UsageError(e.what());
    }
    if (eq.equivalent) {
        std::cout << "equivalent over " << eq.inputs_checked << " inputs\n";
        return 0;
    }
    const auto digits = [](const BasisState& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
        return out;
    };
    std::cout << "NOT equivalent\ninput:  " << digits(*eq.counterexample) << "\n";
    if (!eq.error.empty()) {
        std::cout << "error:  " << eq.error << "\n";
    } else {
        std::cout << "pre:    " << digits(eq.output_a) << "\npost:   " << digits(eq.output_b) << "\n";
    }
    return kExitVerify;
}

int cmd_sweep(const Options& o) {
    const Topology topo = Topology::parse_grid(o.grid);
    const TimingTable t = load_timing(o.timing);
    const auto radices = parse_int_list(o.radices, "radix");
    const auto controls = parse_int_list(o.control_range, "controls");
    for (int r : radices) {
        if (r < 2 || r > kMaxDim) throw UsageError("radix must be in [2, 7]");
    }
    for (int n : controls) {
        if (n < 2) throw UsageError("controls must be >= 2");
    }
    const auto rows = sweep(radices, controls, topo, t, o.threads);
    write_text(o.csv, to_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intermediate-qudit circuit compiler"};
    app.require_subcommand(1);
    Options o;

    auto* bench = app.add_subcommand("bench", "Emit a generalized Toffoli benchmark in QD format");
    bench->add_option("--radix", o.radix, "Qudit radix (2-7)")->required()->check(CLI::Range(2, kMaxDim));
    bench->add_option("--controls", o.controls, "Number of controls")->required()->check(CLI::Range(2, 10000));
    bench->add_option("--out", o.out, "Output file (default stdout)");

    auto* comp = app.add_subcommand("compile", "Decompose, place and route a QD circuit");
    comp->add_option("input", o.input, "Input QD file")->required();
    comp->add_option("--grid", o.grid, "Grid as RxC")->capture_default_str();
    comp->add_option("--timing", o.timing, "Timing override CSV");
    comp->add_option("--out", o.out, "Routed QD output (default stdout)");
    comp->add_option("--report", o.report, "JSON report path");

    auto* ver = app.add_subcommand("verify", "Check a routed or decomposed circuit against its source");
    ver->add_option("pre", o.pre, "Reference QD file")->required();
    ver->add_option("post", o.post, "Candidate QD file")->required();
    ver->add_option("--domain", o.domain, "binary or full")->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "Compile benchmarks over radices and control counts; emit CSV");
    sw->add_option("--radix", o.radices, "Radix list, e.g. 2,3,4,5 or 2-5")->capture_default_str();
    sw->add_option("--controls", o.control_range, "Controls, e.g. 5-65:5")->capture_default_str();
    sw->add_option("--grid", o.grid, "Grid as RxC")->capture_default_str();
    sw->add_option("--timing", o.timing, "Timing override CSV");
    sw->add_option("--csv", o.csv, "CSV output (default stdout)");
    sw->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bench->parsed()) return cmd_bench(o);
        if (comp->parsed()) return cmd_compile(o);
        if (ver->parsed()) return cmd_verify(o);
        if (sw->parsed()) return cmd_sweep(o);
    } catch (const ParseError& e) {
        std::cerr << "iqc: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "iqc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "iqc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "iqc: capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "iqc: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitUsage;
}
