// Command-line front end: validate, combine, reduce and decide over
// canonical IFPS JSON documents, plus the randomized law suite.
//
// Exit codes: 0 success, 1 validation/domain/law failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ifps/ifps.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ifps::domain_error("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ifps::IFPSSet load(const std::string& path) {
    try {
        return ifps::parse_ifps(read_file(path));
    } catch (const ifps::parse_error& e) {
        throw ifps::parse_error(path + ": " + e.what());
    } catch (const ifps::domain_error& e) {
        throw ifps::domain_error(path + ": " + e.what());
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw ifps::domain_error("cannot write \"" + out_path + "\"");
}

void print_warnings(const std::vector<ifps::RangeWarning>& warnings) {
    for (const auto& w : warnings)
        std::fprintf(stderr, "warning: %s: %s (alpha=%.10g, beta=%.10g)\n",
                     w.element.c_str(), w.note.c_str(), w.alpha, w.beta);
}

int cmd_validate(const std::string& file) {
    ifps::IFPSSet k = load(file);
    std::printf("valid: %zu universe elements, %zu parameters, %zu stored entries\n",
                k.universe().size(), k.parameters().size(), k.entries().size());
    return 0;
}

int cmd_op(const std::string& name, const std::vector<std::string>& files,
           const std::string& out_path) {
    const bool unary = name == "complement";
    if (unary && files.size() != 1) {
        std::fprintf(stderr, "op %s takes exactly one file\n", name.c_str());
        return 2;
    }
    if (!unary && files.size() != 2) {
        std::fprintf(stderr, "op %s takes exactly two files\n", name.c_str());
        return 2;
    }
    ifps::IFPSSet result = [&] {
        if (unary)
            return ifps::complement(load(files[0]));
        ifps::IFPSSet a = load(files[0]), b = load(files[1]);
        if (name == "union") return ifps::union_of(a, b);
        if (name == "intersection") return ifps::intersection_of(a, b);
        if (name == "or-sum") return ifps::or_sum(a, b);
        if (name == "and-sum") return ifps::and_sum(a, b);
        if (name == "or-product") return ifps::or_product(a, b);
        return ifps::and_product(a, b);
    }();
    write_output(ifps::serialize_ifps(result), out_path);
    return 0;
}

int cmd_reduce(const std::string& file, const std::string& stage) {
    ifps::ReducedIntuitionistic reduced = ifps::reduce_intuitionistic(load(file));
    print_warnings(reduced.warnings);
    if (stage == "rif") {
        for (const auto& u : reduced.set.ground()) {
            ifps::DegreePair p = reduced.set.at(u);
            std::printf("%s %.4f %.4f\n", u.c_str(), p.alpha, p.beta);
        }
    } else {
        ifps::FuzzySet scores = ifps::reduce_fuzzy(reduced.set);
        for (const auto& u : scores.ground())
            std::printf("%s %.4f\n", u.c_str(), scores.at(u));
    }
    return 0;
}

int cmd_decide(const std::string& file, bool as_json) {
    ifps::RankedDecision d = ifps::decide(load(file));
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["ranking"] = nlohmann::ordered_json::array();
        for (const auto& s : d.ranking)
            doc["ranking"].push_back({{"id", s.id}, {"score", s.score}});
        doc["argmax"] = d.argmax;
        doc["warnings"] = nlohmann::ordered_json::array();
        for (const auto& w : d.warnings)
            doc["warnings"].push_back(
                {{"element", w.element}, {"alpha", w.alpha}, {"beta", w.beta}, {"note", w.note}});
        std::cout << doc.dump(2) << "\n";
    } else {
        print_warnings(d.warnings);
        for (const auto& s : d.ranking)
            std::printf("%s %.4f\n", s.id.c_str(), s.score);
    }
    return 0;
}

int cmd_aggregate(const std::string& op_name, const std::vector<std::string>& files,
                  const std::string& out_path) {
    static const std::map<std::string, ifps::GroupOp> ops = {
        {"or-sum", ifps::GroupOp::or_sum},
        {"and-sum", ifps::GroupOp::and_sum},
        {"or-product", ifps::GroupOp::or_product},
        {"and-product", ifps::GroupOp::and_product},
    };
    std::vector<ifps::IFPSSet> sets;
    sets.reserve(files.size());
    for (const auto& f : files)
        sets.push_back(load(f));
    write_output(ifps::serialize_ifps(ifps::aggregate_group(sets, ops.at(op_name))), out_path);
    return 0;
}

int cmd_laws(std::uint64_t trials, std::uint64_t seed) {
    ifps::LawReport report = ifps::run_suite(trials, seed);
    std::printf("law suite: %llu trials, seed %llu\n",
                static_cast<unsigned long long>(report.trials),
                static_cast<unsigned long long>(report.seed));
    for (const auto& r : report.laws) {
        if (r.failures == 0) {
            std::printf("pass %-36s %llu instances\n", r.name.c_str(),
                        static_cast<unsigned long long>(r.instances));
        } else {
            std::printf("FAIL %-36s %llu/%llu failed\n", r.name.c_str(),
                        static_cast<unsigned long long>(r.failures),
                        static_cast<unsigned long long>(r.instances));
            if (r.first_failure)
                std::printf("     first counterexample (trial %llu): %s\n",
                            static_cast<unsigned long long>(r.first_failure->trial),
                            r.first_failure->detail.c_str());
        }
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intuitionistic fuzzy-parametrized soft sets"};
    app.require_subcommand(1);

    std::string file;
    std::string op_name;
    std::vector<std::string> files;
    std::string out_path;
    std::string stage = "rf";
    bool as_json = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;

    CLI::App* validate = app.add_subcommand("validate", "check a document against the schema");
    validate->add_option("file", file, "IFPS JSON document")->required();

    CLI::App* op = app.add_subcommand("op", "apply a set operation and print the result document");
    op->add_option("operation", op_name, "operation name")
        ->required()
        ->check(CLI::IsMember({"union", "intersection", "complement", "or-sum", "and-sum",
                               "or-product", "and-product"}));
    op->add_option("files", files, "operand documents")->required()->expected(1, 2);
    op->add_option("-o,--output", out_path, "write the result here instead of stdout");

    CLI::App* reduce = app.add_subcommand("reduce", "collapse the parameter dimension");
    reduce->add_option("file", file, "IFPS JSON document")->required();
    reduce->add_option("--stage", stage, "rif: reduced degree pairs, rf: final scores")
        ->check(CLI::IsMember({"rif", "rf"}));

    CLI::App* decide = app.add_subcommand("decide", "rank the universe by reduced score");
    decide->add_option("file", file, "IFPS JSON document")->required();
    decide->add_flag("--json", as_json, "machine-readable ranking, argmax and warnings");

    CLI::App* aggregate = app.add_subcommand("aggregate", "fold one operation over many documents");
    aggregate->add_option("--op", op_name, "group operation")
        ->required()
        ->check(CLI::IsMember({"or-sum", "and-sum", "or-product", "and-product"}));
    aggregate->add_option("files", files, "operand documents")->required()->expected(-1);
    aggregate->add_option("-o,--output", out_path, "write the result here instead of stdout");

    CLI::App* laws = app.add_subcommand("laws", "run the randomized law suite");
    laws->add_option("--trials", trials, "instances per law");
    laws->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (op->parsed()) return cmd_op(op_name, files, out_path);
        if (reduce->parsed()) return cmd_reduce(file, stage);
        if (decide->parsed()) return cmd_decide(file, as_json);
        if (aggregate->parsed()) return cmd_aggregate(op_name, files, out_path);
        if (laws->parsed()) return cmd_laws(trials, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
