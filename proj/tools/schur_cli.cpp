// Command-line front end: count, enumerate, verify, classify, table, formula, oracle.
//
// Exit status: 0 ok, 1 usage error or rejected input, 2 reference/oracle mismatch,
// 3 budget exceeded, 4 malformed document, 5 formula side condition violated.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <schur/io.hpp>
#include <schur/schur.hpp>

namespace {

using namespace schur;

enum Exit { ok = 0, failed = 1, mismatch = 2, budget = 3, parse = 4, side_condition = 5 };

struct Globals {
    residue budget_n = EnumerationOptions{}.max_order;
    std::size_t budget_rings = EnumerationOptions{}.max_rings;
    unsigned jobs = 1;
    residue oracle_ceiling = default_oracle_ceiling;

    EnumerationOptions options() const {
        EnumerationOptions o;
        o.max_order = budget_n;
        o.max_rings = budget_rings;
        return o;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// Writes to --out when given, stdout otherwise.
class Sink {
   public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

   private:
    std::ofstream file_;
};

int cmd_count(const Globals& g, residue n, bool with_reference) {
    const auto value = omega(n, g.options());
    std::cout << n << ' ' << value;
    auto ref = reference_omega(n);
    if (with_reference && ref) {
        const bool match = *ref == value;
        std::cout << ' ' << *ref << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
        return match ? ok : mismatch;
    }
    std::cout << '\n';
    return ok;
}

int cmd_enumerate(const Globals& g, residue n, const std::string& format, bool with_classes,
                  bool with_constants, const std::string& out_path) {
    Enumerator en(g.options());
    auto rings = en.enumerate(n);
    Sink sink(out_path);
    auto& out = sink.out();
    const DocumentOptions opts{with_classes, with_constants};
    if (format == "json") out << '[';
    bool first = true;
    for (const auto& s : *rings) {
        if (format == "json") out << (first ? "\n" : ",\n");
        out << ring_document(s, opts).dump();
        if (format != "json") out << '\n';
        first = false;
    }
    if (format == "json") out << "\n]\n";
    return ok;
}

int cmd_verify(const std::string& path) {
    auto docs = parse_ring_documents(read_input(path));
    bool all = true;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        auto report = verify_schur(docs[i]);
        std::cout << "document " << i + 1 << " (n=" << docs[i].modulus() << "): ";
        if (report) {
            std::cout << "accepted\n";
        } else {
            all = false;
            std::cout << "rejected, " << report.message << '\n';
        }
    }
    return all ? ok : failed;
}

int cmd_classify(const std::string& path, bool with_constants, const std::string& out_path) {
    auto docs = parse_ring_documents(read_input(path));
    Sink sink(out_path);
    int status = ok;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        auto report = verify_schur(docs[i]);
        if (!report) {
            std::cerr << "document " << i + 1 << ": not a Schur ring, " << report.message << '\n';
            status = failed;
            continue;
        }
        sink.out() << ring_document(SchurRing::unchecked(docs[i]), {true, with_constants}).dump() << '\n';
    }
    return status;
}

int cmd_table(const Globals& g, residue from, residue to, const std::string& format, const std::string& out_path) {
    if (from < 1 || from > to) throw CLI::ValidationError("table", "need 1 <= FROM <= TO");
    Enumerator en(g.options());
    auto rows = compute_table(from, to, en, g.jobs);
    Sink sink(out_path);
    sink.out() << (format == "json" ? render_json(rows) : render_csv(rows));
    return summarize(rows).mismatches ? mismatch : ok;
}

int cmd_formula(const Globals& g, const std::string& family_name_arg, std::uint64_t p, std::uint64_t q, unsigned k,
                bool check) {
    auto family = parse_family(family_name_arg);
    if (!family) throw CLI::ValidationError("FAMILY", "unknown family '" + family_name_arg + "'");
    const auto fp = make_family_params(*family, p, q, k);
    const auto value = evaluate_formula(fp);
    std::cout << value;
    if (check) {
        const auto n = fp.order();
        if (n > g.budget_n) {
            std::cout << " SKIPPED\n";
            std::cerr << "order " << n << " exceeds the enumeration ceiling " << g.budget_n << "; not checked\n";
            return ok;
        }
        const auto counted = omega(static_cast<residue>(n), g.options());
        std::cout << ' ' << counted << ' ' << (counted == value ? "MATCH" : "MISMATCH") << '\n';
        return counted == value ? ok : mismatch;
    }
    std::cout << '\n';
    return ok;
}

int cmd_oracle(const Globals& g, residue n) {
    auto brute = brute_force_enumerate(n, g.oracle_ceiling);
    auto options = g.options();
    options.max_order = std::max(options.max_order, n);
    auto built = enumerate_all(n, options);
    const bool equal = brute == built;
    std::cout << brute.size() << ' ' << built.size() << ' ' << (equal ? "EQUAL" : "DIFFER") << '\n';
    if (!equal) {
        for (const auto& s : brute)
            if (!built.contains(s.partition())) {
                std::cout << "only brute force: " << ring_document(s).dump() << '\n';
                break;
            }
        for (const auto& s : built)
            if (!brute.contains(s.partition())) {
                std::cout << "only enumerator: " << ring_document(s).dump() << '\n';
                break;
            }
    }
    return equal ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate, count and verify Schur rings over cyclic groups Z_n."};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--budget-n", g.budget_n, "Largest order the enumerator will attempt")
        ->envname("SCHUR_BUDGET_N")
        ->check(CLI::Range(1u, static_cast<unsigned>(max_modulus)));
    app.add_option("--budget-rings", g.budget_rings, "Largest number of rings per order")
        ->envname("SCHUR_BUDGET_RINGS")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs,-j", g.jobs, "Worker threads for table")->envname("SCHUR_JOBS")->check(CLI::Range(1u, 256u));
    app.add_option("--oracle-ceiling", g.oracle_ceiling, "Largest order for the brute-force oracle")
        ->envname("SCHUR_ORACLE_CEILING")
        ->check(CLI::Range(1u, 64u));

    residue n = 1;
    auto positive = CLI::Range(1u, static_cast<unsigned>(max_modulus));

    auto* count = app.add_subcommand("count", "Print the number of Schur rings over Z_n");
    bool count_reference = false;
    count->add_option("n", n, "Order")->required()->check(positive);
    count->add_flag("--reference", count_reference, "Compare with the reference table");

    auto* enumerate = app.add_subcommand("enumerate", "Print every Schur ring over Z_n");
    std::string enum_format = "jsonl", out_path;
    bool with_classes = false, with_constants = false;
    enumerate->add_option("n", n, "Order")->required()->check(positive);
    enumerate->add_option("--format", enum_format, "jsonl (one document per line) or json (one array)")
        ->check(CLI::IsMember({"json", "jsonl"}));
    enumerate->add_flag("--classify", with_classes, "Add a classification block");
    enumerate->add_flag("--constants", with_constants, "Add the structure constants");
    enumerate->add_option("--out,-o", out_path, "Write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check ring documents against the axioms");
    std::string in_path = "-";
    verify->add_option("path", in_path, "Input file, or - for stdin");

    auto* classify_cmd = app.add_subcommand("classify", "Classify ring documents");
    classify_cmd->add_option("path", in_path, "Input file, or - for stdin");
    classify_cmd->add_flag("--constants", with_constants, "Add the structure constants");
    classify_cmd->add_option("--out,-o", out_path, "Write to a file instead of stdout");

    auto* table = app.add_subcommand("table", "Tabulate Omega(n) against the reference values");
    residue from = 1, to = 1;
    std::string table_format = "csv";
    table->add_option("from", from, "First order")->required()->check(positive);
    table->add_option("to", to, "Last order")->required()->check(positive);
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--reference", "Compare with the reference table (always on)");
    table->add_option("--out,-o", out_path, "Write to a file instead of stdout");

    auto* formula = app.add_subcommand("formula", "Evaluate a closed form for Omega");
    std::string family;
    std::uint64_t p = 0, q = 0;
    unsigned k = 0;
    bool check = false;
    formula->add_option("family", family, "p, p^k, 2^k, pq, 2p, 3p, 5p, 4p, 2p^2 or 2p^3")->required();
    formula->add_option("--p", p, "Prime p");
    formula->add_option("--q", q, "Prime q (pq only)");
    formula->add_option("--k", k, "Exponent (p^k and 2^k)");
    formula->add_flag("--check", check, "Also enumerate and compare when within budget");

    auto* oracle = app.add_subcommand("oracle", "Compare the enumerator with brute force over all partitions");
    oracle->add_option("n", n, "Order")->required()->check(positive);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : failed;
    }

    try {
        if (*count) return cmd_count(g, n, count_reference);
        if (*enumerate) return cmd_enumerate(g, n, enum_format, with_classes, with_constants, out_path);
        if (*verify) return cmd_verify(in_path);
        if (*classify_cmd) return cmd_classify(in_path, with_constants, out_path);
        if (*table) return cmd_table(g, from, to, table_format, out_path);
        if (*formula) return cmd_formula(g, family, p, q, k, check);
        if (*oracle) return cmd_oracle(g, n);
    } catch (const schur::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const schur::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse;
    } catch (const schur::SideConditionError& e) {
        std::cerr << "side condition: " << e.what() << '\n';
        return side_condition;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
    return failed;
}
