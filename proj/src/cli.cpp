#include <chroma/cli.hpp>
#include <chroma/generators.hpp>
#include <chroma/graph6.hpp>
#include <chroma/local.hpp>
#include <chroma/solvers.hpp>
#include <chroma/verifiers.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace chroma::cli {

namespace {

constexpr std::string_view proper_rainbow_name = "proper-rainbow";

struct Options
{
    std::string command;
    std::vector<std::string> inline_graphs;
    std::string input_file;
    std::string family;
    std::string params;
    std::string pattern = "rainbow";
    std::string task = "connect";
    std::size_t k = 1;
    std::string mode = "edge";
    std::uint64_t budget = SearchBudget::default_nodes;
    std::string format = "json";
    std::string coloring;
    std::string certificate_file;
    bool print_certificate = false;
    std::size_t palette = 0;
    bool edge_polynomial = false;
};

struct Item
{
    std::string label;
    std::optional<Graph> graph;
    std::string error;
};

class InputError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_count(std::string_view text, std::string_view what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::size_t> parse_params(const std::string & text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ','))
        if (!field.empty())
            out.push_back(static_cast<std::size_t>(parse_count(field, "family parameter")));
    return out;
}

Item item_from_text(std::string text, std::size_t line)
{
    Item item;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    item.label = text;
    try {
        item.graph = parse_graph6(text);
    } catch (const std::invalid_argument & e) {
        item.error = (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + e.what();
    }
    return item;
}

std::vector<Item> read_lines(std::istream & in)
{
    std::vector<Item> items;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line == "\r")
            continue;
        items.push_back(item_from_text(line, number));
    }
    return items;
}

std::vector<Item> load_items(const Options & options, std::istream & in)
{
    std::vector<Item> items;
    if (!options.inline_graphs.empty()) {
        for (const auto & g : options.inline_graphs)
            items.push_back(item_from_text(g, 0));
    } else if (!options.input_file.empty()) {
        std::ifstream file(options.input_file);
        if (!file)
            throw InputError("cannot open input file '" + options.input_file + "'");
        items = read_lines(file);
    } else if (!options.family.empty()) {
        for (auto & g : generate(options.family, parse_params(options.params)))
            items.push_back(Item{write_graph6(g), std::move(g), {}});
    } else {
        items = read_lines(in);
    }
    return items;
}

class Runner
{
  public:
    Runner(const Options & options, std::ostream & out, std::ostream & err) : options_(options), out_(out), err_(err) {}

    int run(std::istream & in)
    {
        if (options_.command == "generate")
            return generate_graphs();

        auto items = load_items(options_, in);
        std::vector<std::vector<std::string>> table_rows;
        for (const auto & item : items) {
            if (!item.graph) {
                fail(item.label, item.error, input_error);
                continue;
            }
            try {
                if (options_.command == "compute")
                    compute(*item.graph);
                else if (options_.command == "verify")
                    verify(*item.graph);
                else if (options_.command == "count")
                    count(*item.graph);
                else if (options_.command == "table")
                    table_row(*item.graph, table_rows);
                else if (options_.command == "poly")
                    poly(*item.graph);
            } catch (const BudgetExceeded & e) {
                fail(item.label, e.what(), budget_exhausted);
            } catch (const std::exception & e) {
                fail(item.label, e.what(), input_error);
            }
        }
        if (options_.command == "table" && options_.format == "text")
            print_text_table(table_rows);
        return worst_;
    }

  private:
    void fail(const std::string & label, const std::string & message, int code)
    {
        err_ << "error: " << (label.empty() ? "<empty>" : label) << ": " << message << '\n';
        worst_ = std::max(worst_, code);
    }

    [[nodiscard]] SearchBudget budget() const { return SearchBudget{options_.budget}; }
    [[nodiscard]] DisjointMode mode() const { return parse_mode(options_.mode); }

    int generate_graphs()
    {
        if (options_.family.empty())
            throw InputError("generate needs --family");
        for (const auto & g : generate(options_.family, parse_params(options_.params)))
            out_ << write_graph6(g) << '\n';
        return ok;
    }

    void compute(const Graph & g)
    {
        const auto task = parse_task(options_.task);
        SolveResult result;
        std::string name;
        if (options_.pattern == proper_rainbow_name) {
            if (task != Task::connect || options_.k != 1)
                throw InputError("proper-rainbow is only defined for --task connect with --k 1");
            result = proper_rainbow_connection_number(g, budget());
            name = proper_rainbow_name;
        } else {
            const auto p = parse_pattern(options_.pattern);
            name = to_string(p);
            if (task == Task::connect)
                result = connection_number(g, p, options_.k, mode(), budget());
            else
                result = disconnection_number(g, p, budget());
        }
        if (options_.format == "json") {
            out_ << to_json(g, result, name, task, options_.k, mode()).dump() << '\n';
        } else {
            out_ << write_graph6(g) << ' ' << name << ' ' << to_string(task) << " k=" << options_.k
                 << " mode=" << to_string(mode()) << ' ' << to_string(result.objective) << " value=" << result.value
                 << " coloring=" << result.optimal_coloring.to_string() << " nodes=" << result.nodes_explored << '\n';
        }
    }

    void verify(const Graph & g)
    {
        if (options_.pattern == proper_rainbow_name)
            throw InputError("verify always reports proper_rainbow_connected; pass one of the four path patterns");
        const auto p = parse_pattern(options_.pattern);
        const auto coloring = EdgeColoring::parse(options_.coloring);
        coloring.require_fits(g);

        nlohmann::ordered_json doc;
        doc["graph"] = write_graph6(g);
        doc["coloring"] = coloring.to_string();
        doc["pattern"] = to_string(p);
        auto connected = is_pattern_connected(g, coloring, p);
        doc["connected"] = connected.has_value();
        if (options_.k > 1)
            doc["k_connected"] = is_pattern_k_connected(g, coloring, p, options_.k, mode()).has_value();
        if (p == Pattern::conflict_free)
            doc["disconnected"] = nullptr;
        else
            doc["disconnected"] = is_pattern_disconnected(g, coloring, p).has_value();
        doc["proper_edge_coloring"] = is_proper_edge_coloring(g, coloring);
        doc["proper_rainbow_connected"] = is_proper_rainbow_connected(g, coloring).has_value();
        if (!options_.certificate_file.empty()) {
            std::ifstream file(options_.certificate_file);
            if (!file)
                throw InputError("cannot open certificate file '" + options_.certificate_file + "'");
            nlohmann::json raw;
            try {
                file >> raw;
            } catch (const nlohmann::json::exception & e) {
                throw InputError(std::string("certificate file is not JSON: ") + e.what());
            }
            if (raw.contains("certificate"))
                raw = raw["certificate"];
            doc["certificate_valid"] = verify_certificate(g, coloring, certificate_from_json(raw, g));
        }
        if (options_.print_certificate && connected)
            doc["certificate"] = to_json(*connected);

        if (options_.format == "json") {
            out_ << doc.dump() << '\n';
        } else {
            for (auto it = doc.begin(); it != doc.end(); ++it)
                if (it.key() != "certificate")
                    out_ << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
    }

    void count(const Graph & g)
    {
        if (options_.palette == 0)
            throw InputError("count needs --t with a palette size of at least 1");
        const auto p = parse_pattern(options_.pattern);
        const auto task = parse_task(options_.task);
        const auto n = count_colorings(g, p, options_.palette, task, budget());
        if (options_.format == "json") {
            nlohmann::ordered_json doc;
            doc["graph"] = write_graph6(g);
            doc["pattern"] = to_string(p);
            doc["task"] = to_string(task);
            doc["t"] = options_.palette;
            doc["count"] = n;
            out_ << doc.dump() << '\n';
        } else {
            out_ << write_graph6(g) << ' ' << to_string(p) << ' ' << to_string(task) << " t=" << options_.palette
                 << " count=" << n << '\n';
        }
    }

    void table_row(const Graph & g, std::vector<std::vector<std::string>> & rows)
    {
        if (!is_connected(g))
            throw GraphError("graph must be connected: connection and disconnection numbers are only defined for "
                             "connected graphs");
        struct Column
        {
            const char * name;
            std::function<SolveResult()> solve;
        };
        const auto b = budget();
        const std::vector<Column> columns{
            {"rc", [&] { return connection_number(g, Pattern::rainbow, 1, DisjointMode::edge, b); }},
            {"pc", [&] { return connection_number(g, Pattern::proper, 1, DisjointMode::edge, b); }},
            {"mc", [&] { return connection_number(g, Pattern::monochromatic, 1, DisjointMode::edge, b); }},
            {"cfc", [&] { return connection_number(g, Pattern::conflict_free, 1, DisjointMode::edge, b); }},
            {"rd", [&] { return disconnection_number(g, Pattern::rainbow, b); }},
            {"pd", [&] { return disconnection_number(g, Pattern::proper, b); }},
            {"md", [&] { return disconnection_number(g, Pattern::monochromatic, b); }},
            {"prc", [&] { return proper_rainbow_connection_number(g, b); }},
        };

        nlohmann::ordered_json doc;
        doc["graph"] = write_graph6(g);
        doc["n"] = g.order();
        doc["m"] = g.size();
        std::vector<std::string> row{write_graph6(g), std::to_string(g.order()), std::to_string(g.size())};
        auto exhausted = nlohmann::ordered_json::array();
        for (const auto & column : columns) {
            try {
                auto value = column.solve().value;
                doc[column.name] = value;
                row.push_back(std::to_string(value));
            } catch (const BudgetExceeded & e) {
                doc[column.name] = nullptr;
                exhausted.push_back(column.name);
                row.emplace_back("*");
                err_ << "error: " << write_graph6(g) << ": " << column.name << ": " << e.what() << '\n';
                worst_ = std::max(worst_, static_cast<int>(budget_exhausted));
            }
        }
        doc["exhausted"] = std::move(exhausted);
        if (options_.format == "json")
            out_ << doc.dump() << '\n';
        else
            rows.push_back(std::move(row));
    }

    void print_text_table(const std::vector<std::vector<std::string>> & rows)
    {
        const std::vector<std::string> header{"graph", "n", "m", "rc", "pc", "mc", "cfc", "rd", "pd", "md", "prc"};
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            width[c] = header[c].size();
            for (const auto & r : rows)
                width[c] = std::max(width[c], r[c].size());
        }
        auto print = [&](const std::vector<std::string> & r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (c > 0)
                    out_ << "  ";
                if (c == 0)
                    out_ << std::left << std::setw(static_cast<int>(width[c])) << r[c];
                else
                    out_ << std::right << std::setw(static_cast<int>(width[c])) << r[c];
            }
            out_ << '\n';
        };
        print(header);
        for (const auto & r : rows)
            print(r);
    }

    void poly(const Graph & g)
    {
        const auto p = options_.edge_polynomial ? edge_chromatic_polynomial(g) : chromatic_polynomial(g);
        const auto at4 = evaluate_polynomial(p, 4);
        if (options_.format == "json") {
            nlohmann::ordered_json doc;
            doc["graph"] = write_graph6(g);
            doc["kind"] = options_.edge_polynomial ? "edge" : "vertex";
            doc["polynomial"] = p.to_string();
            doc["value_at_4"] = at4.str();
            out_ << doc.dump() << '\n';
        } else {
            out_ << write_graph6(g) << ' ' << (options_.edge_polynomial ? "edge" : "vertex") << ' ' << p.to_string()
                 << " f(4)=" << at4.str() << '\n';
        }
    }

    const Options & options_;
    std::ostream & out_;
    std::ostream & err_;
    int worst_ = ok;
};

std::uint64_t default_budget()
{
    if (const char * env = std::getenv("CHROMA_BUDGET"); env && *env) {
        auto value = parse_count(env, "CHROMA_BUDGET");
        if (value == 0)
            throw InputError("CHROMA_BUDGET must be at least 1");
        return value;
    }
    return SearchBudget::default_nodes;
}

} // namespace

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    Options options;
    try {
        options.budget = default_budget();
    } catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    CLI::App app{"Exact global chromatic numbers (rainbow, proper, monochromatic and conflict-free connection and "
                 "disconnection) of small graphs"};
    app.name(args.empty() ? "chroma" : args.front());
    app.require_subcommand(1);

    const std::vector<std::string> patterns{"rainbow", "proper", "monochromatic", "conflict-free", "conflict_free",
                                            std::string(proper_rainbow_name)};
    auto add_source = [&](CLI::App * sub) {
        sub->add_option("--graph,-g", options.inline_graphs, "graph6 string (repeatable)");
        sub->add_option("--input,-i", options.input_file, "file with one graph6 string per line");
        sub->add_option("--family", options.family,
                        "generator: path, cycle, complete, complete_bipartite, star, petersen, all_connected_up_to");
        sub->add_option("--params", options.params, "comma-separated generator parameters");
        sub->add_option("--format", options.format, "output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_pattern = [&](CLI::App * sub) {
        sub->add_option("--pattern,-p", options.pattern, "path/cut pattern")->check(CLI::IsMember(patterns));
        sub->add_option("--task", options.task, "connect or disconnect")->check(CLI::IsMember({"connect", "disconnect"}));
        sub->add_option("--budget", options.budget, "maximum colorings evaluated (default $CHROMA_BUDGET or 50000000)")
            ->check(CLI::PositiveNumber);
    };
    auto add_k = [&](CLI::App * sub) {
        sub->add_option("--k", options.k, "number of disjoint pattern paths per pair")->check(CLI::PositiveNumber);
        sub->add_option("--mode", options.mode, "disjointness of the k paths")->check(CLI::IsMember({"edge", "vertex"}));
    };

    auto * compute = app.add_subcommand("compute", "optimal number of colors with a certificate");
    add_source(compute);
    add_pattern(compute);
    add_k(compute);

    auto * verify = app.add_subcommand("verify", "check a given coloring against every property");
    add_source(verify);
    add_pattern(verify);
    add_k(verify);
    verify->add_option("--coloring,-c", options.coloring, "comma-separated colors in edge order")->required();
    verify->add_option("--certificate", options.certificate_file, "certificate JSON to check against the coloring");
    verify->add_flag("--print-certificate", options.print_certificate, "include the connection certificate");

    auto * count = app.add_subcommand("count", "number of labeled t-colorings with the property");
    add_source(count);
    add_pattern(count);
    count->add_option("--t", options.palette, "palette size")->required()->check(CLI::PositiveNumber);

    auto * table = app.add_subcommand("table", "rc pc mc cfc rd pd md prc for every input graph");
    add_source(table);
    table->add_option("--budget", options.budget, "maximum colorings evaluated per cell")->check(CLI::PositiveNumber);

    auto * gen = app.add_subcommand("generate", "print generated graphs as graph6 lines");
    gen->add_option("--family", options.family, "generator family")->required();
    gen->add_option("--params", options.params, "comma-separated generator parameters");

    auto * poly = app.add_subcommand("poly", "chromatic polynomial, coefficients low to high");
    add_source(poly);
    poly->add_flag("--edge", options.edge_polynomial, "edge version (chromatic polynomial of the line graph)");

    std::vector<const char *> argv;
    for (const auto & a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("chroma");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }
    options.command = app.get_subcommands().front()->get_name();

    try {
        return Runner(options, out, err).run(in);
    } catch (const BudgetExceeded & e) {
        err << "error: " << e.what() << '\n';
        return budget_exhausted;
    } catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

} // namespace chroma::cli
