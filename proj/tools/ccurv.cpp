// ccurv: coset graph curvature and dimension-bound toolkit.
//
// Subcommands:
//   analyze     full measurement + bound report (json/csv/text)
//   verify      terse certifying-bound verdict, suitable for CI gates
//   curvature   exact per-direction curvature report (json/text)
//   montecarlo  random-subset ensemble on a construct with known families
//   gen         print the generator matrix of a named construct
//
// Exit codes: 0 success (and, for analyze/verify, every certifying bound
// passed; for montecarlo, coverage held in every trial), 1 a certifying
// check failed, 2 usage or runtime error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosetcurv/bounds.hpp"
#include "cosetcurv/curvature.hpp"
#include "cosetcurv/graph.hpp"
#include "cosetcurv/local.hpp"
#include "cosetcurv/montecarlo.hpp"
#include "cosetcurv/report.hpp"
#include "cosetcurv/zoo.hpp"

namespace {

using namespace cosetcurv;

struct BuiltCode {
    LinearCode code;
    std::string source;
    std::optional<int> block_m;   // paired-block parameter, drives dim == n/(2m)
    std::optional<int> planted_m; // planted triple-partition parameter
    bool perfect_basic = false;
};

std::vector<int> construct_args(const std::string& name, const std::string& rest,
                                std::size_t min_args, std::size_t max_args) {
    std::vector<int> args;
    if (!rest.empty()) {
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
                args.push_back(v);
            } catch (const std::logic_error&) {
                throw std::invalid_argument("construct " + name + ": bad argument '" + part +
                                            "'");
            }
        }
    }
    if (args.size() < min_args || args.size() > max_args)
        throw std::invalid_argument("construct " + name + ": expected " +
                                    std::to_string(min_args) +
                                    (max_args == min_args
                                         ? ""
                                         : ".." + std::to_string(max_args)) +
                                    " comma-separated arguments");
    return args;
}

BuiltCode build_from_construct(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    std::string source = "construct " + spec;

    if (name == "hadamard") {
        auto a = construct_args(name, rest, 1, 1);
        return {hadamard(a[0]), source, {}, {}, false};
    }
    if (name == "product") {
        auto a = construct_args(name, rest, 1, 2);
        int m2 = a.size() == 2 ? a[1] : a[0];
        return {direct_product(hadamard(a[0]), hadamard(m2)), source, {}, {}, false};
    }
    if (name == "simplexcube") {
        auto a = construct_args(name, rest, 1, 1);
        return {simplex_hypercube_product(a[0]), source, {}, {}, false};
    }
    if (name == "hypercube") {
        auto a = construct_args(name, rest, 1, 1);
        return {identity_code(a[0]), source, {}, {}, false};
    }
    if (name == "perfect3lcc") {
        construct_args(name, rest, 0, 0);
        return {perfect_3lcc_basic(), source, {}, {}, true};
    }
    if (name == "planted3") {
        auto a = construct_args(name, rest, 1, 1);
        return {planted_3lcc(a[0]), source, {}, a[0], false};
    }
    if (name == "pairedblocks") {
        auto a = construct_args(name, rest, 2, 2);
        return {paired_block_code(a[0], a[1], paired_block_witness(a[0], a[1])), source,
                a[0], {}, false};
    }
    if (name == "random") {
        auto a = construct_args(name, rest, 2, 2);
        return {random_code(a[0], a[1], seed), source + " seed " + std::to_string(seed),
                {}, {}, false};
    }
    throw std::invalid_argument(
        "unknown construct '" + name +
        "' (known: hadamard:m product:m[,m2] simplexcube:m hypercube:n perfect3lcc "
        "planted3:m pairedblocks:m,k random:m,n)");
}

BuiltCode load_code(const std::string& path, const std::string& construct,
                    std::uint64_t seed) {
    if (path.empty() == construct.empty())
        throw std::invalid_argument("exactly one of --code and --construct is required");
    if (!construct.empty()) return build_from_construct(construct, seed);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {parse_code(ss.str()), "file " + path, {}, {}, false};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

bool is_certifying(const std::string& id) {
    for (const auto& a : bound_registry())
        if (id == a.id) return a.certifying;
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coset leader graph curvature and dimension-bound toolkit"};
    app.require_subcommand(1);

    std::string code_path, construct, format = "text", out_path, a_str = "1";
    std::uint64_t seed = 0;
    int dim_cap = CosetGraph::kDefaultDimCap;
    int q = 2, mc_q = 3, trials = 100;
    bool timings = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--code", code_path, "generator matrix file: rows of 0/1");
        cmd->add_option("--construct", construct,
                        "named construction, e.g. hadamard:3 or random:4,8");
        cmd->add_option("--seed", seed, "stream seed for random constructs and sampling");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "measure the code and check every applicable bound");
    add_source(analyze);
    analyze->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    analyze->add_option("--out", out_path, "write the report here instead of stdout");
    analyze->add_option("--dim-cap", dim_cap, "largest dimension for full graph builds");
    analyze->add_option("--q", q, "enable arity-q formula entries when >= 3");
    analyze->add_flag("--timings", timings,
                      "include per-stage wall-clock (breaks byte stability)");

    CLI::App* verify =
        app.add_subcommand("verify", "terse pass/fail line per certifying bound");
    add_source(verify);
    verify->add_option("--out", out_path, "write the verdict here instead of stdout");
    verify->add_option("--dim-cap", dim_cap, "largest dimension for full graph builds");

    CLI::App* curvature =
        app.add_subcommand("curvature", "exact per-direction curvature report");
    add_source(curvature);
    curvature->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    curvature->add_option("--out", out_path, "write the report here instead of stdout");
    curvature->add_option("--dim-cap", dim_cap, "largest dimension for full graph builds");

    CLI::App* montecarlo = app.add_subcommand(
        "montecarlo", "random-subset ensemble on a construct with known families");
    montecarlo->add_option("--construct", construct,
                           "planted3:m or perfect3lcc (families are known exactly)");
    montecarlo->add_option("--seed", seed, "ensemble seed; trial t uses seed + t");
    montecarlo->add_option("--trials", trials, "number of independent trials");
    montecarlo->add_option("--q", mc_q, "family arity (must match the construct: 3)");
    montecarlo->add_option("--a", a_str, "density parameter a >= 1, rational like 3/2");
    montecarlo->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    montecarlo->add_option("--out", out_path, "write the summary here instead of stdout");

    CLI::App* gen = app.add_subcommand("gen", "print the generator matrix of a construct");
    gen->add_option("--construct", construct, "named construction")->required();
    gen->add_option("--seed", seed, "stream seed for random constructs");
    gen->add_option("--out", out_path, "write the matrix here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze || *verify) {
            BuiltCode bc = load_code(code_path, construct, seed);
            AnalyzeOptions opts;
            opts.dim_cap = dim_cap;
            opts.q = q;
            opts.block_m = bc.block_m;
            opts.source = bc.source;
            opts.timings = timings;
            if (bc.planted_m)
                opts.partition_witness = planted_3lcc_families(*bc.planted_m);
            AnalysisReport rep = analyze_code(bc.code, opts);
            if (*analyze) {
                emit(format == "json"  ? report_to_json(rep)
                     : format == "csv" ? report_to_csv(rep)
                                       : report_to_text(rep),
                     out_path);
            } else {
                std::ostringstream out;
                for (const auto& b : rep.bounds)
                    if (is_certifying(b.id))
                        out << "[" << to_string(b.status) << "] " << b.id << "\n";
                out << "verdict: " << (rep.all_certifying_pass() ? "pass" : "fail") << "\n";
                emit(out.str(), out_path);
            }
            return rep.all_certifying_pass() ? 0 : 1;
        }
        if (*curvature) {
            BuiltCode bc = load_code(code_path, construct, seed);
            CurvatureReport rep =
                bc.code.dim() <= dim_cap && bc.code.dim() <= 64
                    ? curvature_graph(CosetGraph(bc.code, dim_cap))
                    : curvature_graph_local(bc.code);
            emit(format == "json" ? curvature_to_json(rep, bc.source)
                                  : curvature_to_text(rep, bc.source),
                 out_path);
            return 0;
        }
        if (*montecarlo) {
            if (construct.empty())
                throw std::invalid_argument("montecarlo requires --construct");
            BuiltCode bc = build_from_construct(construct, seed);
            std::vector<RepFamily> fams;
            if (bc.planted_m)
                fams = planted_3lcc_families(*bc.planted_m);
            else if (bc.perfect_basic)
                fams = is_perfect_3lcc(bc.code).families;
            else
                throw std::invalid_argument(
                    "montecarlo: representation families are known only for planted3:m "
                    "and perfect3lcc");
            Rat a = Rat::parse(a_str);
            SubsetEnsemble e = run_subset_ensemble(bc.code, mc_q, a, seed, trials, fams);
            EnsembleContext ctx{bc.source, mc_q, a, seed};
            emit(format == "json" ? ensemble_to_json(e, ctx) : ensemble_to_text(e, ctx),
                 out_path);
            return e.bullet2_all ? 0 : 1;
        }
        if (*gen) {
            BuiltCode bc = build_from_construct(construct, seed);
            emit(serialize_code(bc.code), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
