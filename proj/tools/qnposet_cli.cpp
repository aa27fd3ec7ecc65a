// qnposet: construct poset families, analyze queue layouts, run checks.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or I/O error.

#include "qnposet/constructions.hpp"
#include "qnposet/io.hpp"
#include "qnposet/layout.hpp"
#include "qnposet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

using namespace qnposet;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(std::span<const Element> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string edge_list(std::span<const CoverEdge> edges) {
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(edges[i].lower) + "<" + std::to_string(edges[i].upper);
    }
    return s;
}

// Flat key/value output, rendered as text lines or one JSON object.
class Output {
public:
    explicit Output(bool json) : json_(json) {}

    template <class T>
    void put(const std::string& key, const T& value) {
        doc_[key] = value;
    }
    void add_note(const std::string& note) { doc_["notes"].push_back(note); }

    void flush(std::ostream& os) const {
        if (json_) {
            os << doc_.dump(2) << '\n';
            return;
        }
        for (const auto& [key, value] : doc_.items()) {
            if (key == "notes") {
                for (const auto& n : value) os << "note: " << n.get<std::string>() << '\n';
            } else if (value.is_string()) {
                os << key << ": " << value.get<std::string>() << '\n';
            } else {
                os << key << ": " << value.dump() << '\n';
            }
        }
    }

private:
    bool json_;
    ojson doc_ = ojson::object();
};

void put_report(Output& out, const VerificationReport& r) {
    out.put("claim", r.claim);
    out.put("parameters", r.parameters);
    if (r.exhaustive) {
        out.put("mode", "exhaustive");
    } else {
        out.put("mode", "sampled");
        out.put("seed", r.seed);
    }
    out.put("extensions", r.trials);
    out.put("observed", r.observed);
    out.put("required", r.required_den == 1 ? std::to_string(r.required_num)
                                            : std::to_string(r.required_num) + "/" + std::to_string(r.required_den));
    out.put("result", r.skipped ? "skipped" : (r.pass ? "pass" : "fail"));
    if (!r.witness.empty()) out.put("witness", join(r.witness));
    for (const auto& n : r.notes) out.add_note(n);
}

LinearExtension checked_extension(const Poset& p, const std::string& text) {
    std::vector<Element> order;
    try {
        order = parse_order(text);
        if (!is_linear_extension(p, order)) {
            throw UsageError("'" + text + "' is not a linear extension of the poset");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return LinearExtension(std::move(order));
}

ConstructionRecord family_record(const std::string& family, int param) {
    try {
        return build_family(family, param);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int ceil_sqrt(int u) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(u)));
    while (s * s < u) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= u) --s;
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Queue layouts of posets: constructions, exact search, and checks"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // construct
    auto* construct = app.add_subcommand("construct", "build a poset family and write a poset file");
    std::string family, output;
    int parameter = 0;
    construct->add_option("family", family, "ru, pw, antichain-es, kww, planar-hp, lift-simple, lift-diagonal")
        ->required()
        ->check(CLI::IsMember({"ru", "pw", "antichain-es", "kww", "planar-hp", "lift-simple", "lift-diagonal"}));
    construct->add_option("parameter", parameter, "family size parameter")->required();
    construct->add_option("-o,--output", output, "output path (stdout when omitted)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "report quantities of a poset file");
    std::string input, rainbow_ext;
    bool want_width = false, want_covers = false, want_exact = false, want_hp = false;
    std::uint64_t cap = 50'000'000;
    analyze->add_option("input", input, "poset file")->required();
    analyze->add_flag("--width", want_width, "width with antichain and chain partition");
    analyze->add_flag("--covers", want_covers, "cover edges");
    analyze->add_flag("--qn-exact", want_exact, "exact queue-number");
    analyze->add_flag("--qn-upper-hp", want_hp, "chain-pair upper bound and its queue assignment");
    analyze->add_option("--rainbow", rainbow_ext, "largest rainbow under the given extension (comma separated)");
    analyze->add_option("--cap", cap, "search node cap for --qn-exact");

    // rainbow
    auto* rainbow = app.add_subcommand("rainbow", "largest rainbow and queue partition under an extension");
    std::string rb_input, rb_ext;
    rainbow->add_option("input", rb_input, "poset file")->required();
    rainbow->add_option("extension", rb_ext, "comma separated linear extension")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, v_input, v_family;
    int v_u = 3, v_w = 3, v_param = 3;
    bool exhaustive = false, sampled = false, strict = false;
    std::uint64_t trials = 1000, seed = 0, limit = 1'000'000;
    verify->add_option("suite", suite, "lemma2, es, recursion, hp, selfdual, sums")
        ->required()
        ->check(CLI::IsMember({"lemma2", "es", "recursion", "hp", "selfdual", "sums"}));
    verify->add_option("--u", v_u, "reinforcement / antichain width");
    verify->add_option("--w", v_w, "lifted poset width");
    verify->add_option("--input", v_input, "poset file (hp)");
    verify->add_option("--family", v_family, "family (hp, selfdual)");
    verify->add_option("--param", v_param, "family parameter (hp, selfdual)");
    verify->add_flag("--exhaustive", exhaustive, "visit every linear extension (default when feasible)");
    verify->add_flag("--sampled", sampled, "visit sampled linear extensions only");
    verify->add_flag("--strict", strict, "fail instead of falling back to sampling");
    verify->add_option("--trials", trials, "sampled extensions");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--limit", limit, "largest extension count walked exhaustively");

    // export
    auto* exporter = app.add_subcommand("export", "write a DOT diagram");
    std::string ex_input, ex_format = "dot", ex_ext, ex_output;
    exporter->add_option("input", ex_input, "poset file")->required();
    exporter->add_option("--format", ex_format, "dot or arc-diagram-dot")
        ->check(CLI::IsMember({"dot", "arc-diagram-dot"}));
    exporter->add_option("--extension", ex_ext, "vertex order for arc diagrams");
    exporter->add_option("-o,--output", ex_output, "output path (stdout when omitted)");
    exporter->add_option("--cap", cap, "search node cap when picking the optimal extension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    Output out(json);
    int status = 0;
    try {
        if (*construct) {
            auto rec = family_record(family, parameter);
            auto doc = to_json(to_poset_file(rec)).dump(2);
            if (output.empty()) {
                std::cout << doc << '\n';
                return 0;
            }
            save_poset_file(to_poset_file(rec), output);
            out.put("family", family);
            out.put("parameter", parameter);
            out.put("n", rec.poset.size());
            out.put("output", output);
        } else if (*analyze) {
            auto file = load_poset_file(input);
            const Poset& p = file.poset;
            const auto edges = cover_edges(p);
            out.put("n", p.size());
            if (want_covers) {
                out.put("covers", edges.size());
                out.put("cover_edges", edge_list(edges));
            }
            if (want_width || want_hp) {
                auto w = width(p);
                if (want_width) {
                    out.put("width", w.width);
                    out.put("antichain", join(w.antichain));
                    out.put("chain_of", join(w.chains.chain_of));
                }
                if (want_hp) {
                    auto q = hp_queue_assignment(p, edges, w.chains);
                    out.put("qn_upper_hp", q.k);
                    std::string assignment;
                    for (std::size_t i = 0; i < edges.size(); ++i) {
                        int cu = w.chains.chain_of[edges[i].lower];
                        int cv = w.chains.chain_of[edges[i].upper];
                        if (i) assignment += ' ';
                        assignment += std::to_string(edges[i].lower) + "<" + std::to_string(edges[i].upper) +
                                      ":Q" + std::to_string(cu) + "," + std::to_string(cv);
                    }
                    out.put("hp_queues", assignment);
                }
            }
            if (want_exact) {
                auto r = exact_queue_number(p, cap);
                out.put("qn_exact", r.qn);
                out.put("exact", r.exact);
                if (!r.exact) out.put("qn_lower", r.lower_bound);
                out.put("best_extension", join(r.best.order()));
                out.put("search_nodes", r.nodes);
            }
            if (!rainbow_ext.empty()) {
                auto l = checked_extension(p, rainbow_ext);
                auto rb = max_rainbow(l, edges);
                out.put("rainbow", rb.size());
                out.put("rainbow_edges", edge_list(rb.edges));
            }
        } else if (*rainbow) {
            auto file = load_poset_file(rb_input);
            auto l = checked_extension(file.poset, rb_ext);
            const auto edges = cover_edges(file.poset);
            auto rb = max_rainbow(l, edges);
            auto q = min_queue_partition(l, edges);
            out.put("rainbow", rb.size());
            out.put("rainbow_edges", edge_list(rb.edges));
            out.put("queues", q.k);
            out.put("queue_of", join(q.queue_of));
        } else if (*verify) {
            CheckMode mode;
            mode.exhaustive = !sampled || exhaustive;
            mode.trials = trials;
            mode.seed = seed;
            mode.strict = strict;
            mode.exhaustive_limit = limit;
            VerificationReport report;
            if (suite == "lemma2") {
                if (v_u < 1) throw UsageError("--u must be >= 1");
                report = check_lemma_goodR(v_u, mode);
            } else if (suite == "es") {
                if (v_u < 1) throw UsageError("--u must be >= 1");
                report = check_guaranteed_q(build_antichain_es(v_u), ceil_sqrt(v_u), mode);
            } else if (suite == "recursion") {
                if (v_w < 3) throw UsageError("--w must be >= 3");
                report = check_recursion_bound(v_w, mode);
            } else if (suite == "hp") {
                Poset p;
                if (!v_input.empty()) {
                    p = load_poset_file(v_input).poset;
                } else if (!v_family.empty()) {
                    p = family_record(v_family, v_param).poset;
                } else {
                    throw UsageError("hp needs --input or --family");
                }
                report = check_hp_universal(p, mode);
            } else if (suite == "selfdual") {
                if (v_family.empty()) throw UsageError("selfdual needs --family");
                report = check_self_dual(family_record(v_family, v_param));
            } else if (suite == "sums") {
                if (v_w < 1) throw UsageError("--w must be >= 1");
                report = check_theorem_sums(v_w);
            }
            put_report(out, report);
            status = report.pass ? 0 : exit_fail;
        } else if (*exporter) {
            auto file = load_poset_file(ex_input);
            const Poset& p = file.poset;
            std::string text;
            if (ex_format == "dot") {
                text = to_dot(p);
            } else {
                const auto edges = cover_edges(p);
                LinearExtension l = ex_ext.empty() ? exact_queue_number(p, cap).best : checked_extension(p, ex_ext);
                text = to_arc_diagram_dot(p, l, edges, min_queue_partition(l, edges));
            }
            if (ex_output.empty()) {
                std::cout << text;
                return 0;
            }
            std::ofstream f(ex_output);
            if (!f) throw std::runtime_error("cannot write " + ex_output);
            f << text;
            out.put("format", ex_format);
            out.put("output", ex_output);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    out.flush(std::cout);
    return status;
}
