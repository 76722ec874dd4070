#include "clustype/boundary_graph.hpp"
#include "clustype/dot.hpp"
#include "clustype/error.hpp"
#include "clustype/fiber_criteria.hpp"
#include "clustype/fixtures.hpp"
#include "clustype/gdp_atlas.hpp"
#include "clustype/json_io.hpp"
#include "clustype/lattice_fan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace clustype;
using io::json;

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct Options {
    std::string format = "json";
    std::string out;
};

// Accepts inline JSON, "-" for stdin, or a file path.
json read_json_arg(const std::string& arg)
{
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) {
            throw Error(ErrorKind::ParseError, "cannot read '" + arg + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return io::parse_text(text);
}

void emit(const Options& opts, const std::string& text)
{
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out);
    if (!out) {
        throw Error(ErrorKind::InvalidSpec, "cannot write '" + opts.out + "'");
    }
    out << text;
}

// One "path: value" line per scalar leaf.
void flatten(const json& j, const std::string& path, std::string& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        std::string value;
        if (j.is_string()) value = j.get<std::string>();
        else if (j.is_array()) {
            for (const auto& x : j) value += (value.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
        } else value = j.dump();
        out += (path.empty() ? std::string("value") : path) + ": " + value + "\n";
    }
}

void emit_json(const Options& opts, const json& j)
{
    if (opts.format == "text") {
        std::string out;
        flatten(j, "", out);
        emit(opts, out);
        return;
    }
    emit(opts, j.dump(2) + "\n");
}

void emit_graph(const Options& opts, const BoundaryGraph& g, json report)
{
    if (opts.format == "dot") {
        emit(opts, emit_dot(g));
        if (!opts.out.empty()) std::cout << report.dump(2) << "\n";
        return;
    }
    report["graph"] = io::to_json(g);
    emit_json(opts, report);
}

json graph_report(const BoundaryGraph& g)
{
    json j;
    json residuals = json::object();
    for (const auto& [id, r] : validate_cy(g)) residuals[id] = io::rational_to_json(r);
    j["calabi_yau"] = is_calabi_yau(g);
    j["residuals"] = residuals;
    j["complexity"] = io::rational_to_json(complexity(g));
    j["index_integral"] = index_integral(g);
    try {
        j["coregularity"] = coregularity(g);
    } catch (const Error& e) {
        j["coregularity"] = nullptr;
        j["coregularity_error"] = e.what();
    }
    return j;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::int64_t to_int(const std::string& s)
{
    try {
        std::size_t pos = 0;
        const auto v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + s + "'");
    }
}

// op := name[:args]; args are comma separated.
std::pair<std::string, std::vector<std::string>> parse_op(const std::string& op)
{
    const auto colon = op.find(':');
    if (colon == std::string::npos) return {op, {}};
    return {op.substr(0, colon), split(op.substr(colon + 1), ',')};
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t n)
{
    if (args.size() != n) {
        throw Error(ErrorKind::ParseError, "op '" + name + "' takes " + std::to_string(n) + " argument(s)");
    }
}

int run_graph(const Options& opts, const json& input, const std::vector<std::string>& ops)
{
    BoundaryGraph g = io::graph_from_json(input);
    json extra = json::object();
    for (const auto& op : ops) {
        const auto [name, args] = parse_op(op);
        if (name == "blowdown") {
            expect_args(name, args, 1);
            extra["crepant_blowdowns"].push_back({{args[0], is_crepant_blowdown(g, args[0])}});
            g = blowdown(g, args[0]);
        } else if (name == "blowup_corner") {
            expect_args(name, args, 2);
            g = blowup_corner(g, Corner{args[0], args[1]});
        } else if (name == "blowup_node") {
            expect_args(name, args, 1);
            g = blowup_corner(g, Corner{args[0], args[0]});
        } else if (name == "blowup_interior") {
            expect_args(name, args, 1);
            g = blowup_interior(g, args[0]);
        } else if (name == "blowup_marked") {
            expect_args(name, args, 1);
            g = blowup_marked(g, static_cast<std::size_t>(to_int(args[0])));
        } else if (name == "contract") {
            const auto chains = args.empty() ? find_minus2_chains(g) : std::vector<std::vector<VertexId>>{};
            SingularModel model = args.empty() ? contract_minus2_chains(g, chains) : [&] {
                std::vector<std::vector<VertexId>> explicit_chains;
                for (const auto& a : args) explicit_chains.push_back(split(a, '-'));
                return contract_minus2_chains(g, explicit_chains);
            }();
            extra["singular_model"] = io::to_json(model);
        } else if (name == "witness") {
            WitnessSearchOptions w;
            if (!args.empty()) w.max_blowups = static_cast<int>(to_int(args[0]));
            if (args.size() > 1) w.coefficient_cap = static_cast<int>(to_int(args[1]));
            const auto found = prop51_witness_search(g, w);
            extra["witness"] = found ? io::to_json(*found) : json(nullptr);
        } else {
            throw Error(ErrorKind::ParseError, "unknown graph op '" + name + "'");
        }
    }
    json report = graph_report(g);
    for (const auto& [k, v] : extra.items()) report[k] = v;
    emit_graph(opts, g, report);
    return 0;
}

int run_fan(const Options& opts, const json& input, const std::vector<std::string>& ops)
{
    Fan2 fan = io::fan_from_json(input);
    json extra = json::object();
    for (const auto& op : ops) {
        const auto [name, args] = parse_op(op);
        if (name == "resolve") {
            fan = resolve(fan);
        } else if (name == "subdivide") {
            expect_args(name, args, 2);
            fan = star_subdivide(fan, RayVector{to_int(args[0]), to_int(args[1])});
        } else if (name == "remove") {
            expect_args(name, args, 2);
            fan = remove_ray(fan, RayVector{to_int(args[0]), to_int(args[1])});
        } else if (name == "kernel") {
            expect_args(name, args, 2);
            fan = subdivide_along_kernel(fan, Covector{to_int(args[0]), to_int(args[1])});
        } else if (name == "project") {
            expect_args(name, args, 2);
            extra["projection"] = io::to_json(p1_projection(fan, Covector{to_int(args[0]), to_int(args[1])}));
        } else {
            throw Error(ErrorKind::ParseError, "unknown fan op '" + name + "'");
        }
    }
    json j;
    j["fan"] = io::to_json(fan);
    j["smooth"] = is_smooth(fan);
    j["picard_rank"] = fan.picard_rank();
    j["complexity"] = io::rational_to_json(toric_pair_complexity(fan));
    if (is_smooth(fan)) j["self_intersections"] = self_intersections(fan);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    emit_json(opts, j);
    return 0;
}

int run_fixture(const Options& opts, const std::string& name, bool list)
{
    if (list) {
        json j = json::array();
        for (const auto& e : fixtures::corpus()) j.push_back({{"name", e.name}, {"description", e.description}});
        emit_json(opts, j);
        return 0;
    }
    const auto fx = fixtures::load_fixture(name);
    if (opts.format == "dot") {
        if (const auto* g = std::get_if<BoundaryGraph>(&fx)) {
            emit(opts, emit_dot(*g, name));
            return 0;
        }
        throw Error(ErrorKind::InvalidSpec, "fixture '" + name + "' is not a graph");
    }
    json j;
    j["name"] = name;
    j["value"] = fixtures::to_json(fx);
    j["verdict"] = fixtures::evaluate(fx);
    for (const auto& [n, expected] : fixtures::expected_verdicts()) {
        if (n == name) j["matches_expected"] = fixtures::mismatches(j["verdict"], expected).empty();
    }
    emit_json(opts, j);
    return 0;
}

int report_error(const std::exception& e, int code)
{
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact cluster-type computations for Calabi-Yau pairs of complexity two"};
    app.require_subcommand(1, 1);
    Options opts;
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--out", opts.out, "Write the main artifact to this path");

    std::string arg;
    std::vector<std::string> ops;
    std::optional<int> rank;
    bool list = false;

    auto* classify = app.add_subcommand("classify", "Decide whether a rank-one del Pezzo surface is of cluster type");
    classify->add_option("singularities", arg, "e.g. \"2A1+2A3\" or \"smooth\"")->required();

    auto* pair = app.add_subcommand("decide-pair", "Decide whether a pair (X, B) is of cluster type");
    pair->add_option("spec", arg, "Pair JSON, a path, or - for stdin")->required();

    auto* fiber = app.add_subcommand("check-fiber", "Check the fibre criteria of a standard model");
    fiber->add_option("spec", arg, "Fibre JSON, a path, or - for stdin")->required();
    fiber->add_option("--rank", rank, "Expected relative Picard rank (1 or 2)");

    auto* graph = app.add_subcommand("graph", "Run blow-ups, blow-downs and contractions on a dual graph");
    graph->add_option("graph", arg, "Graph JSON, a path, or - for stdin")->required();
    graph->add_option("--op", ops,
        "blowdown:E | blowup_corner:A,B | blowup_node:A | blowup_interior:A | blowup_marked:i | contract[:E1-E2,...] | "
        "witness[:depth,cap]");

    auto* fan = app.add_subcommand("fan", "Toric fan operations");
    fan->add_option("fan", arg, "Fan JSON such as [[1,0],[0,1],[-1,-1]], a path, or - for stdin")->required();
    fan->add_option("--op", ops, "resolve | subdivide:x,y | remove:x,y | kernel:a,b | project:a,b");

    auto* cat = app.add_subcommand("catalog", "List the rank-one Gorenstein del Pezzo families with A-type singularities");

    auto* fix = app.add_subcommand("fixture", "Show a corpus fixture with its verdict");
    fix->add_option("name", arg, "Fixture name");
    fix->add_flag("--list", list, "List fixture names");

    for (auto* sub : {classify, pair, fiber, graph, fan, cat, fix}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*classify) {
            emit_json(opts, io::to_json(classify_surface(parse_singularities(arg))));
        } else if (*pair) {
            emit_json(opts, io::to_json(decide_pair(io::pair_from_json(read_json_arg(arg)))));
        } else if (*fiber) {
            auto input = read_json_arg(arg);
            if (rank && input.is_object() && !input.contains("rank")) input["rank"] = *rank;
            const auto spec = io::fiber_from_json(input);
            if (rank && *rank != spec.rel_picard_rank) {
                throw Error(ErrorKind::WrongRank, "--rank " + std::to_string(*rank) + " but the spec has rank "
                        + std::to_string(spec.rel_picard_rank));
            }
            emit_json(opts, io::to_json(check_fiber(spec)));
        } else if (*graph) {
            return run_graph(opts, read_json_arg(arg), ops);
        } else if (*fan) {
            return run_fan(opts, read_json_arg(arg), ops);
        } else if (*cat) {
            json j = json::array();
            for (const auto& f : catalog()) j.push_back(io::to_json(f));
            emit_json(opts, j);
        } else if (*fix) {
            if (!list && arg.empty()) throw Error(ErrorKind::ParseError, "fixture name required");
            return run_fixture(opts, arg, list);
        }
    } catch (const Error& e) {
        return report_error(e, is_input_error(e.kind()) ? kExitInput : kExitPrecondition);
    } catch (const json::exception& e) {
        return report_error(e, kExitInput);
    } catch (const std::exception& e) {
        return report_error(e, kExitPrecondition);
    }
    return 0;
}
