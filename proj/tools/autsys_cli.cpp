// autsys: command-line front end.
//
// Exit codes: 0 success or affirmative answer, 1 negative answer (with its
// witness on stdout), 2 usage or input error, 3 search bound exceeded,
// 4 internal failure (a witness that does not re-verify).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autsys/census.hpp"
#include "autsys/document.hpp"
#include "autsys/error.hpp"
#include "autsys/gen.hpp"
#include "autsys/minors.hpp"
#include "autsys/ops.hpp"
#include "autsys/order.hpp"
#include "autsys/quotient.hpp"

namespace {

using nlohmann::json;
using namespace autsys;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;
constexpr int kInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string input = "-";
    std::vector<std::string> inputs;
    std::string subset;
    bool subset_given = false;
    std::string partition;
    std::string target;
    std::size_t n = 4;
    bool normalized = false;
    std::size_t bound = SearchOptions{}.bound;
    bool require_induced = false;
    std::uint64_t seed = census::Options{}.seed;
    std::string method = to_string(GenMethod::ChainClosure);
    std::size_t samples = census::Options{}.random_samples;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

AutonomousSystem load(const std::string& path) { return read_system(slurp(path)); }

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    if (text.back() == sep)
        out.emplace_back();
    return out;
}

Subset parse_subset(const AutonomousSystem& system, const std::string& text)
{
    return system.subset(split(text, ','));
}

Partition parse_partition(const AutonomousSystem& system, const std::string& text)
{
    std::vector<std::vector<std::string>> cells;
    for (const auto& cell : split(text, '|'))
        cells.push_back(split(cell, ','));
    return Partition::from_names(system, cells);
}

AutonomousSystem resolve_target(const std::string& spec)
{
    static const std::regex path_system("[pP]([0-9]+)");
    std::smatch m;
    if (std::regex_match(spec, m, path_system))
        return p_n(std::stoi(m[1]));
    if (spec.empty())
        throw UsageError("--target is required (p3, p4, pN, or a system document)");
    return load(spec);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json pair_json(const AutonomousSystem& system, const NonIntersectingPair& pair)
{
    return json::array({system.names(pair.a), system.names(pair.b)});
}

// Re-verifies before printing; a witness that fails is a bug, not an answer.
int emit_witness(const WitnessSequence& w, const AutonomousSystem& target, json extra = json::object())
{
    if (!verify_witness(w, target))
        throw InternalError("witness failed re-verification");
    json out = to_json(w, target);
    for (auto& [key, value] : extra.items())
        out[key] = value;
    print(out);
    for (const auto& line : narrate(w))
        std::cerr << line << '\n';
    return kOk;
}

int cmd_validate(const Args& a)
{
    auto parsed = parse_system(slurp(a.input));
    if (auto* report = std::get_if<ValidationReport>(&parsed)) {
        print(to_json(*report));
        return kNegative;
    }
    const auto& system = std::get<AutonomousSystem>(parsed);
    print(to_json(validate(system.labels(), system.family())));
    return kOk;
}

int cmd_normalize(const Args& a)
{
    std::cout << serialize(normalize(load(a.input)));
    return kOk;
}

Subset carrier_of(const AutonomousSystem& system, const Args& a)
{
    return a.subset_given ? parse_subset(system, a.subset) : autonomous_part(system, system.ground());
}

int cmd_canonical_order(const Args& a)
{
    const auto system = load(a.input);
    print(to_json(system, canonical_order(system, carrier_of(system, a))));
    return kOk;
}

int cmd_emit_dot(const Args& a)
{
    const auto system = load(a.input);
    std::cout << hasse_dot(system, canonical_order(system, carrier_of(system, a)));
    return kOk;
}

int cmd_is_poset(const Args& a)
{
    const auto system = load(a.input);
    const PosetCheck check = is_poset(system);
    if (check.poset) {
        print({{"poset", true}});
        return kOk;
    }
    print({{"poset", false}, {"witness", pair_json(system, *check.witness)}});
    std::cerr << "the intersection of the two witness sets is not autonomous\n";
    return kNegative;
}

int cmd_to_poset(const Args& a)
{
    const auto system = load(a.input);
    if (auto order = to_poset(system)) {
        print(to_json(*order));
        return kOk;
    }
    const AutonomousSystem normal = normalize(system);
    print({{"poset", false}, {"witness", pair_json(normal, *is_poset(normal).witness)}});
    return kNegative;
}

int cmd_from_poset(const Args& a)
{
    std::cout << serialize(from_poset(read_poset(slurp(a.input))));
    return kOk;
}

int cmd_reduce(const Args& a, AutonomousSystem (*op)(const AutonomousSystem&, Subset))
{
    if (!a.subset_given)
        throw UsageError("--subset is required");
    const auto system = load(a.input);
    std::cout << serialize(op(system, parse_subset(system, a.subset)));
    return kOk;
}

int cmd_join(const Args& a)
{
    if (a.inputs.empty())
        throw UsageError("join needs at least one document");
    std::vector<AutonomousSystem> systems;
    for (const auto& path : a.inputs)
        systems.push_back(load(path));
    std::cout << serialize(join(systems));
    return kOk;
}

int cmd_quotient(const Args& a)
{
    if (a.partition.empty())
        throw UsageError("--partition is required, e.g. \"a1,a2|x|y|b1,b2\"");
    const auto system = load(a.input);
    std::cout << serialize(quotient_by_partition(system, parse_partition(system, a.partition)));
    return kOk;
}

int cmd_find_p3(const Args& a)
{
    const auto system = load(a.input);
    const auto pair = find_nonintersecting_pair(system);
    if (!pair) {
        print({{"found", false}, {"poset", to_json(*to_poset(system))}});
        std::cerr << "family is intersection-closed; no P3 subdot exists\n";
        return kNegative;
    }
    return emit_witness(extract_p3(system, pair->a, pair->b), p_n(3),
                        {{"found", true}, {"pair", pair_json(system, *pair)}});
}

int cmd_find_p4(const Args& a)
{
    const auto system = load(a.input);
    const auto pair = find_bidirectional_pair(system);
    if (!pair) {
        print({{"found", false}});
        std::cerr << "no bidirectional pair\n";
        return kNegative;
    }
    const json described{{"x", system.label(pair->x)},
                         {"y", system.label(pair->y)},
                         {"a", system.names(pair->a)},
                         {"b", system.names(pair->b)}};
    return emit_witness(extract_p4(system, *pair), p_n(4), {{"found", true}, {"pair", described}});
}

int cmd_search(const Args& a, bool quotients)
{
    const auto system = load(a.input);
    const auto target = resolve_target(a.target);
    const SearchOptions options{a.bound, a.require_induced};
    const auto witness =
        quotients ? induced_minor(system, target, options) : subdot_reachable(system, target, options);
    if (!witness) {
        print({{"found", false}});
        std::cerr << "target not reachable\n";
        return kNegative;
    }
    return emit_witness(*witness, target, {{"found", true}});
}

int cmd_enumerate(const Args& a)
{
    enumerate_all(a.n, a.normalized, [](const AutonomousSystem& s) { std::cout << to_json(s).dump() << '\n'; });
    return kOk;
}

int cmd_generate(const Args& a)
{
    std::cout << serialize(random_system({a.n, a.normalized, a.seed, parse_gen_method(a.method)}));
    return kOk;
}

int cmd_selftest(const Args& a)
{
    census::Options options;
    options.seed = a.seed;
    options.random_samples = a.samples;
    bool all = true;
    census::run_all(options, [&](const census::Result& r) {
        std::cout << census::format(r) << std::endl;
        all = all && r.passed;
    });
    return all ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite autonomous systems: validation, orders, reductions, quotients, and minor search."};
    app.require_subcommand(1);
    Args args;
    std::map<CLI::App*, std::function<int()>> run;

    auto with_input = [&](const std::string& name, const std::string& help, std::function<int(const Args&)> body) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", args.input, "system document ('-' for stdin)");
        run[sub] = [&args, body] { return body(args); };
        return sub;
    };
    auto subset_flag = [&](CLI::App* sub) {
        sub->add_option("--subset", args.subset, "comma-separated labels")
            ->each([&](const std::string&) { args.subset_given = true; });
    };
    auto search_flags = [&](CLI::App* sub) {
        sub->add_option("--target", args.target, "p3, p4, pN, or a system document")->required();
        sub->add_option("--bound", args.bound, "largest source ground searched")->capture_default_str();
        sub->add_flag("--require-induced", args.require_induced, "only quotients with a nonempty member");
    };

    with_input("validate", "check the axioms and print the violation report", cmd_validate);
    with_input("normalize", "restrict the ground to its autonomous part", cmd_normalize);
    subset_flag(with_input("canonical-order", "context order on a member (default: the largest)",
                           cmd_canonical_order));
    subset_flag(with_input("emit-dot", "Graphviz Hasse diagram of a canonical order", cmd_emit_dot));
    with_input("is-poset", "test pairwise intersection closure", cmd_is_poset);
    with_input("to-poset", "recover the order whose down-sets form the family", cmd_to_poset);
    with_input("from-poset", "system of down-sets of an order document", cmd_from_poset);
    subset_flag(with_input("delete", "members disjoint from the subset",
                           [](const Args& a) { return cmd_reduce(a, deletion); }));
    subset_flag(with_input("contract", "traces of members outside the subset",
                           [](const Args& a) { return cmd_reduce(a, contraction); }));
    subset_flag(with_input("restrict", "contract everything outside the subset",
                           [](const Args& a) { return cmd_reduce(a, restrict_to); }));
    subset_flag(with_input("dot", "delete everything outside the subset",
                           [](const Args& a) { return cmd_reduce(a, dot); }));
    {
        CLI::App* sub = app.add_subcommand("join", "least system containing every input");
        sub->add_option("files", args.inputs, "system documents")->required();
        run[sub] = [&] { return cmd_join(args); };
    }
    with_input("quotient", "quotient by a partition", cmd_quotient)
        ->add_option("--partition", args.partition, "cells separated by '|', labels by ','");
    with_input("find-p3", "extract a P3 subdot from a non-poset", cmd_find_p3);
    with_input("find-p4", "extract a P4 induced minor from a bidirectional pair", cmd_find_p4);
    search_flags(with_input("subdot", "search deletions and contractions for the target",
                            [](const Args& a) { return cmd_search(a, false); }));
    search_flags(with_input("induced-minor", "search deletions, contractions, and quotients for the target",
                            [](const Args& a) { return cmd_search(a, true); }));
    {
        CLI::App* sub = app.add_subcommand("enumerate", "every labeled system on e1..en, one JSON per line");
        sub->add_option("--n", args.n, "ground size")->required()->check(CLI::Range(std::size_t{0}, kMaxEnumerate));
        sub->add_flag("--normalized", args.normalized, "only systems whose ground is a member");
        run[sub] = [&] { return cmd_enumerate(args); };
    }
    {
        CLI::App* sub = app.add_subcommand("generate", "one seeded random system");
        sub->add_option("--n", args.n, "ground size")->check(CLI::Range(std::size_t{0}, kMaxRandom))
            ->capture_default_str();
        sub->add_flag("--normalized", args.normalized, "make the ground a member");
        sub->add_option("--seed", args.seed, "generator seed")->capture_default_str();
        sub->add_option("--method", args.method, "from-random-poset, chain-closure, or subdot-of-larger")
            ->capture_default_str();
        run[sub] = [&] { return cmd_generate(args); };
    }
    {
        CLI::App* sub = app.add_subcommand("selftest", "run the acceptance census");
        sub->add_option("--seed", args.seed, "seed of the random sample")->capture_default_str();
        sub->add_option("--samples", args.samples, "random systems at n = 5")->capture_default_str();
        run[sub] = [&] { return cmd_selftest(args); };
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run.at(app.get_subcommands().front())();
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line() << ':' << e.column() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::SearchBoundExceeded ? kBound : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
