// f3had - construct ternary self-dual codes of length 36, search their
// weight-36 codewords for Hadamard matrices, and classify both up to
// equivalence.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "f3had/canonical.hpp"
#include "f3had/catalog.hpp"
#include "f3had/classify.hpp"
#include "f3had/fetch.hpp"
#include "f3had/tables.hpp"

using namespace f3had;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitBudget = 3;

struct Common {
    uint64_t budget = kDefaultBudget;
    int threads = 0;
    std::string cache_dir = ".f3had";
    std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--budget", c.budget, "enumeration step budget");
    cmd->add_option("--threads", c.threads, "worker threads (0 = all)");
    cmd->add_option("--cache-dir", c.cache_dir, "cache/catalog directory");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

SweepOptions sweep_options(const Common& c) {
    SweepOptions o;
    o.budget = c.budget;
    o.threads = c.threads;
    return o;
}

// --code accepts a bundled label (P36, D36-4, F36-260) or a spec line
TernaryCode resolve_code(const std::string& text) {
    if (text.find('=') == std::string::npos) return bundled_code(text);
    return parse_code_spec(text);
}

std::string family_of(const std::string& text) {
    if (text.find('=') == std::string::npos) return bundled_by_label(text).family;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok)
        if (tok.rfind("family=", 0) == 0) return tok.substr(7);
    return "";
}

HadamardMatrix load_matrix(const std::string& path, int index) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    HadamardParseReport rep = parse_hadamard_file(in);
    for (const auto& e : rep.errors) std::cerr << "note: " << path << ": " << e << "\n";
    if (rep.matrices.empty()) throw std::runtime_error(path + ": no valid matrices");
    if (index < 1 || index > int(rep.matrices.size()))
        throw std::runtime_error(path + ": matrix index " + std::to_string(index) +
                                 " out of range 1.." + std::to_string(rep.matrices.size()));
    return rep.matrices[size_t(index - 1)];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary self-dual codes of length 36 and the Hadamard matrices inside them"};
    app.require_subcommand(1);

    // ---- construct ----
    Common c_construct;
    std::string construct_code, construct_out;
    auto* cmd_construct = app.add_subcommand("construct", "build a code and print its generator");
    cmd_construct->add_option("code", construct_code, "bundled label or spec line")->required();
    cmd_construct->add_option("--out", construct_out, "write the generator to a file");
    add_common(cmd_construct, c_construct);

    // ---- analyze ----
    Common c_analyze;
    std::string analyze_code;
    auto* cmd_analyze = app.add_subcommand("analyze", "weight enumerator and extremality");
    cmd_analyze->add_option("code", analyze_code, "bundled label or spec line")->required();
    add_common(cmd_analyze, c_analyze);

    // ---- tuple ----
    Common c_tuple;
    std::string tuple_code;
    auto* cmd_tuple = app.add_subcommand("tuple", "search statistics (w10,w11,n0,n1,neq)");
    cmd_tuple->add_option("code", tuple_code, "bundled label or spec line")->required();
    add_common(cmd_tuple, c_tuple);

    // ---- search ----
    Common c_search;
    std::string search_code, search_outdir = ".";
    auto* cmd_search = app.add_subcommand("search", "find the Hadamard matrices in a code and write them");
    cmd_search->add_option("code", search_code, "bundled label or spec line")->required();
    cmd_search->add_option("--out-dir", search_outdir, "directory for matrix files");
    add_common(cmd_search, c_search);

    // ---- canon ----
    Common c_canon;
    std::string canon_code, canon_matrix;
    int canon_index = 1;
    auto* cmd_canon = app.add_subcommand("canon", "canonical certificate of a code or matrix");
    cmd_canon->add_option("--code", canon_code, "bundled label or spec line");
    cmd_canon->add_option("--matrix", canon_matrix, "matrix file");
    cmd_canon->add_option("--index", canon_index, "matrix number within the file (1-based)");
    add_common(cmd_canon, c_canon);

    // ---- aut ----
    Common c_aut;
    std::string aut_matrix;
    int aut_index = 1;
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group order of a matrix");
    cmd_aut->add_option("--matrix", aut_matrix, "matrix file")->required();
    cmd_aut->add_option("--index", aut_index, "matrix number within the file (1-based)");
    add_common(cmd_aut, c_aut);

    // ---- equiv ----
    Common c_equiv;
    std::vector<std::string> equiv_codes, equiv_matrices;
    auto* cmd_equiv = app.add_subcommand("equiv", "equivalence of two codes or two matrices");
    cmd_equiv->add_option("--codes", equiv_codes, "two code labels/specs")->expected(2);
    cmd_equiv->add_option("--matrices", equiv_matrices, "two matrix files (file or file:index)")
        ->expected(2);
    add_common(cmd_equiv, c_equiv);

    // ---- classify ----
    Common c_classify;
    std::string classify_family_name, classify_resume;
    uint64_t classify_budget_candidates = UINT64_MAX;
    auto* cmd_classify = app.add_subcommand("classify", "exhaustive family classification (long)");
    cmd_classify->add_option("family", classify_family_name, "bdc, qt or 4nc")->required();
    cmd_classify->add_option("--resume", classify_resume, "checkpoint file (created if absent)");
    cmd_classify->add_option("--candidates", classify_budget_candidates,
                             "max candidates to scan this run");
    add_common(cmd_classify, c_classify);

    // ---- fetch ----
    Common c_fetch;
    std::string fetch_url;
    bool fetch_refresh = false;
    auto* cmd_fetch = app.add_subcommand("fetch", "download and verify published matrices");
    cmd_fetch->add_option("--url", fetch_url, "source url (default: published file)");
    cmd_fetch->add_flag("--refresh", fetch_refresh, "ignore the cache");
    add_common(cmd_fetch, c_fetch);

    // ---- reproduce-table ----
    Common c_table;
    std::string table_id, table_tfile;
    std::vector<int> table_sample;
    auto* cmd_table = app.add_subcommand("reproduce-table", "recompute a reference table and diff");
    cmd_table->add_option("id", table_id, "t1, t3, t5, t6, t7, t8, tuples, aut or dims")->required();
    cmd_table->add_option("--sample", table_sample, "row indices (default: all)");
    cmd_table->add_option("--t-file", table_tfile, "file with the order-17-automorphism matrices");
    add_common(cmd_table, c_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_construct->parsed()) {
            const TernaryCode code = resolve_code(construct_code);
            const bool sd = is_self_dual(code);
            if (c_construct.format == "json") {
                ordered_json j{{"label", code.label}, {"n", code.n}, {"k", code.k},
                               {"self_dual", sd}, {"generator", code.gen.to_string()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "label " << code.label << "\n[" << code.n << "," << code.k << "] "
                          << (sd ? "self-dual" : "not self-dual") << "\n"
                          << code.gen.to_string();
            }
            if (!construct_out.empty()) {
                std::ofstream f(construct_out);
                f << code.gen.to_string();
            }
            return kExitOk;
        }

        if (cmd_analyze->parsed()) {
            const TernaryCode code = resolve_code(analyze_code);
            const WeightEnumerator we = weight_enumerator(code, sweep_options(c_analyze));
            const int d = we.min_weight();
            std::string extremality = "n/a";
            if (code.n % 4 == 0 && is_self_dual(code))
                extremality = to_string(classify_extremality(code.n, d).kind);
            if (c_analyze.format == "json") {
                ordered_json j{{"label", code.label}, {"n", code.n}, {"k", code.k},
                               {"self_dual", is_self_dual(code)}, {"d", d},
                               {"extremality", extremality}};
                ordered_json counts = ordered_json::object();
                for (int w = 0; w <= we.n; ++w)
                    if (we.a[size_t(w)]) counts[std::to_string(w)] = we.a[size_t(w)];
                j["enumerator"] = counts;
                std::cout << j.dump(2) << "\n";
            } else if (c_analyze.format == "csv") {
                std::cout << enumerator_csv(we);
            } else {
                std::cout << "label " << code.label << "\nd " << d << "\nextremality " << extremality
                          << "\n" << enumerator_csv(we);
            }
            return kExitOk;
        }

        if (cmd_tuple->parsed() || cmd_search->parsed()) {
            const bool searching = cmd_search->parsed();
            const Common& com = searching ? c_search : c_tuple;
            const std::string& text = searching ? search_code : tuple_code;
            const TernaryCode code = resolve_code(text);
            const TupleResult tr = search_tuple(code, sweep_options(com));
            if (com.format == "json") {
                ordered_json j{{"label", code.label},
                               {"tuple", {tr.tuple.w10, tr.tuple.w11, tr.tuple.n0, tr.tuple.n1,
                                          tr.tuple.neq}}};
                ordered_json mats = ordered_json::array();
                for (size_t i = 0; i < tr.certs.size(); ++i)
                    mats.push_back({{"cert", tr.certs[i].hex()},
                                    {"aut_order", tr.certs[i].aut_order}});
                j["matrices"] = mats;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << code.label << " " << tr.tuple.to_string() << "\n";
                for (size_t i = 0; i < tr.certs.size(); ++i)
                    std::cout << "  matrix " << i + 1 << " cert " << tr.certs[i].hex()
                              << " |Aut| " << tr.certs[i].aut_order << "\n";
            }
            if (searching) {
                std::filesystem::create_directories(search_outdir);
                for (size_t i = 0; i < tr.reps.size(); ++i) {
                    const std::string name = code.label + "-H" + std::to_string(i + 1) + ".txt";
                    std::ofstream f(std::filesystem::path(search_outdir) / name);
                    f << write_hadamard(tr.reps[i]);
                    std::cout << "wrote " << name << "\n";
                }
            }
            return kExitOk;
        }

        if (cmd_canon->parsed()) {
            if (canon_code.empty() == canon_matrix.empty()) {
                std::cerr << "canon: give exactly one of --code or --matrix\n";
                return kExitUsage;
            }
            CanonCert cert;
            if (!canon_code.empty()) {
                CodeCertOptions o;
                o.budget = c_canon.budget;
                cert = code_cert(resolve_code(canon_code), o);
            } else {
                cert = hadamard_cert(load_matrix(canon_matrix, canon_index));
            }
            if (c_canon.format == "json")
                std::cout << ordered_json{{"cert", cert.hex()}, {"aut_order", cert.aut_order}}.dump(2)
                          << "\n";
            else
                std::cout << cert.hex() << " |Aut| " << cert.aut_order << "\n";
            return kExitOk;
        }

        if (cmd_aut->parsed()) {
            const uint64_t order = hadamard_aut_order(load_matrix(aut_matrix, aut_index));
            if (c_aut.format == "json")
                std::cout << ordered_json{{"aut_order", order}}.dump(2) << "\n";
            else
                std::cout << order << "\n";
            return kExitOk;
        }

        if (cmd_equiv->parsed()) {
            if (equiv_codes.empty() == equiv_matrices.empty()) {
                std::cerr << "equiv: give --codes a b or --matrices a b\n";
                return kExitUsage;
            }
            bool eq;
            if (!equiv_codes.empty()) {
                CodeCertOptions o;
                o.budget = c_equiv.budget;
                eq = code_equivalent(resolve_code(equiv_codes[0]), resolve_code(equiv_codes[1]), o);
            } else {
                auto parse_ref = [](const std::string& s) {
                    const auto colon = s.rfind(':');
                    if (colon == std::string::npos) return std::make_pair(s, 1);
                    return std::make_pair(s.substr(0, colon), std::stoi(s.substr(colon + 1)));
                };
                const auto [fa, ia] = parse_ref(equiv_matrices[0]);
                const auto [fb, ib] = parse_ref(equiv_matrices[1]);
                eq = hadamard_equivalent(load_matrix(fa, ia), load_matrix(fb, ib));
            }
            std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
            return eq ? kExitOk : kExitMismatch;
        }

        if (cmd_classify->parsed()) {
            ClassifyOptions o;
            o.checkpoint = classify_resume;
            o.max_candidates = classify_budget_candidates;
            o.threads = c_classify.threads;
            o.log = [](const std::string& m) { std::cerr << m << "\n"; };
            const ClassifyResult r = classify_family(family_from_name(classify_family_name), o);
            if (c_classify.format == "json") {
                ordered_json j{{"family", family_name(r.family)}, {"complete", r.complete},
                               {"cursor", r.cursor}, {"space", r.space},
                               {"self_dual", r.self_dual}, {"near_extremal", r.near_extremal},
                               {"classes", ordered_json::array()}};
                for (const auto& cl : r.classes)
                    j["classes"].push_back({{"ra", cl.ra}, {"rb", cl.rb}, {"a9", cl.a9},
                                            {"members", cl.members}, {"cert", cl.cert_hex}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "family " << family_name(r.family) << (r.complete ? "" : " (partial)")
                          << ": scanned " << r.cursor << "/" << r.space << ", self-dual "
                          << r.self_dual << ", near-extremal " << r.near_extremal << ", classes "
                          << r.classes.size() << "\n";
                for (const auto& cl : r.classes)
                    std::cout << "  A9=" << cl.a9 << " rA=" << cl.ra
                              << (cl.rb.empty() ? "" : " rB=" + cl.rb) << " members=" << cl.members
                              << "\n";
            }
            return r.complete ? kExitOk : kExitBudget;
        }

        if (cmd_fetch->parsed()) {
            FetchOptions o;
            o.url = fetch_url;
            o.cache_dir = c_fetch.cache_dir;
            o.refresh = fetch_refresh;
            const FetchResult r = fetch_published_matrices(o);
            std::cout << (r.from_cache ? "cache hit " : "downloaded ") << r.cache_path << "\nsha256 "
                      << r.sha256 << "\nmatrices " << r.matrices.size() << "\n";
            for (const auto& e : r.errors) std::cout << "reject: " << e << "\n";
            return kExitOk;
        }

        if (cmd_table->parsed()) {
            ReproduceOptions o;
            o.sweep = sweep_options(c_table);
            o.t_matrix_file = table_tfile;
            o.sample = table_sample;
            const TableReport rep = reproduce_table(table_id, o);
            if (c_table.format == "csv") std::cout << rep.to_csv();
            else std::cout << rep.to_text();
            return rep.pass() ? kExitOk : kExitMismatch;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
