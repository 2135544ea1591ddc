#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "builtin_inputs.hpp"
#include "golay/analysis.hpp"
#include "golay/construction.hpp"
#include "golay/hadamard.hpp"
#include "golay/io.hpp"

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// run report: data goes to stdout, the human-readable summary (the only place
// timing appears) goes to stderr; --json replaces stdout with a machine
// readable document that carries the data and the checks but no timing.
// ---------------------------------------------------------------------------

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> digests;  // path -> fnv1a hex
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> outputs;
    json data;

    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }

    bool all_passed() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void digest_input(Report& report, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return;  // the loader reports unreadable files itself
    std::ostringstream buf;
    buf << in.rdbuf();
    report.digests.emplace_back(path, fnv1a_hex(buf.str()));
}

class Timer {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int finish(Report& report, bool json_mode, const Timer& timer) {
    if (json_mode) {
        json j;
        j["command"] = report.command;
        j["inputs"] = json::array();
        for (const auto& [path, digest] : report.digests) j["inputs"].push_back({{"path", path}, {"digest", digest}});
        j["checks"] = json::array();
        for (const auto& [name, ok] : report.checks) j["checks"].push_back({{"name", name}, {"passed", ok}});
        j["outputs"] = report.outputs;
        j["passed"] = report.all_passed();
        if (!report.data.is_null()) j["data"] = report.data;
        std::cout << golay::dump_json(j);
    }
    std::cerr << report.command << ": " << (report.all_passed() ? "pass" : "FAIL") << " ("
              << report.checks.size() << " checks, " << static_cast<long>(timer.elapsed_ms() + 0.5) << " ms)\n";
    for (const auto& [name, ok] : report.checks)
        if (!ok) std::cerr << "  failed: " << name << "\n";
    for (const auto& [path, digest] : report.digests) std::cerr << "  input " << path << " " << digest << "\n";
    for (const auto& path : report.outputs) std::cerr << "  wrote " << path << "\n";
    return report.all_passed() ? 0 : 1;
}

std::string render_complex(const golay::CyclotomicInt& v) {
    const auto c = v.to_complex();
    std::ostringstream out;
    out << "coeffs [";
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) out << (i ? ", " : "") << v.coeffs()[i];
    out << "] ~ (" << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i)";
    return out.str();
}

std::string matrix_grid(const golay::ButsonMatrix& h) {
    std::ostringstream out;
    for (int i = 0; i < h.size(); ++i) {
        for (int j = 0; j < h.size(); ++j) out << (j ? " " : "") << h.exp(i, j);
        out << "\n";
    }
    return out.str();
}

std::string witness_text(const golay::EquivalenceWitness& w) {
    auto vec = [](const std::vector<int>& v) {
        std::ostringstream s;
        for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
        return s.str();
    };
    std::ostringstream out;
    out << "row_phases: " << vec(w.row_phases) << "\n"
        << "row_perm:   " << vec(w.row_perm) << "\n"
        << "col_perm:   " << vec(w.col_perm) << "\n"
        << "col_phases: " << vec(w.col_phases) << "\n";
    return out.str();
}

json witness_json(const golay::EquivalenceWitness& w) {
    return json{{"row_phases", w.row_phases},
                {"col_phases", w.col_phases},
                {"row_perm", w.row_perm},
                {"col_perm", w.col_perm}};
}

// deterministic across platforms: plain modulo reduction over a fixed engine
struct Rand {
    std::mt19937_64 engine;
    explicit Rand(std::uint64_t seed) : engine(seed) {}
    int uniform(int lo, int hi) { return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }
    std::vector<int> perm(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
        return p;
    }
};

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int cmd_construct(const std::string& spec_path, const std::string& out_dir, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "construct";
    digest_input(report, spec_path);

    const auto spec = golay::spec_from_json(golay::load_json_file(spec_path));
    for (const auto& w : spec.warnings()) std::cerr << "warning: " << w << "\n";
    report.check("spec valid", true);

    const auto m = golay::construct(spec);
    report.check("unit coefficients", true);  // construct() would have thrown

    const auto sets = golay::extract_sets(m);
    report.check("rows complementary", true);  // extract_sets() re-verifies
    report.check("columns complementary", true);

    const json source = golay::spec_to_json(spec);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        auto emit = [&](const std::string& name, const json& doc) {
            const std::string path = (std::filesystem::path(out_dir) / name).string();
            golay::write_file(path, golay::dump_json(doc));
            report.outputs.push_back(path);
        };
        emit("matrix.json", golay::poly_matrix_to_json(m, source));
        for (std::size_t i = 0; i < sets.rows.size(); ++i)
            emit("row_" + std::to_string(i) + ".json",
                 golay::family_to_json(m.q(), sets.rows[i].sequences(), source));
        for (std::size_t j = 0; j < sets.columns.size(); ++j)
            emit("col_" + std::to_string(j) + ".json",
                 golay::family_to_json(m.q(), sets.columns[j].sequences(), source));
    }

    json degrees = json::array();
    std::ostringstream table;
    table << "q=" << m.q() << " N=" << m.size() << " L=" << m.length() << "\n";
    const bool anf_applicable = std::has_single_bit(m.length());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            std::string deg = "-";
            if (anf_applicable)
                deg = std::to_string(golay::anf(golay::QarySequence(m.q(), m.entry(i, j))).degree());
            table << "entry (" << i << "," << j << ") degree " << deg << "\n";
            degrees.push_back({{"row", i}, {"col", j}, {"degree", deg}});
        }
    report.data = {{"q", m.q()}, {"N", m.size()}, {"L", m.length()}, {"degrees", degrees}};
    if (!json_mode) std::cout << table.str();
    return finish(report, json_mode, timer);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& set_path, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "verify";
    digest_input(report, set_path);

    const auto family = golay::load_family(set_path);
    const auto result = golay::golay_check(family.sequences);
    report.check("complementary", result.complementary);
    report.data = {{"q", family.q},
                   {"N", family.sequences.size()},
                   {"L", family.sequences.front().length()},
                   {"complementary", result.complementary}};
    std::ostringstream line;
    if (result.complementary) {
        line << "PASS: Golay set of size " << family.sequences.size() << ", length "
             << family.sequences.front().length() << "\n";
    } else {
        line << "FAIL: nonzero autocorrelation sum at shift " << result.shift << ": "
             << render_complex(*result.residual) << "\n";
        report.data["shift"] = result.shift;
    }
    if (!json_mode) std::cout << line.str();
    return finish(report, json_mode, timer);
}

// ---------------------------------------------------------------------------
// pmepr
// ---------------------------------------------------------------------------

int cmd_pmepr(const std::string& set_path, int oversample, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "pmepr";
    digest_input(report, set_path);

    const auto family = golay::load_family(set_path);
    json rows = json::array();
    std::ostringstream table;
    table << "index\tpmepr\tpeak_index\n";
    for (std::size_t i = 0; i < family.sequences.size(); ++i) {
        const auto est = golay::pmepr(family.sequences[i], oversample);
        char value[32];
        std::snprintf(value, sizeof value, "%.9f", est.value);
        table << i << "\t" << value << "\t" << est.peak_index << "\n";
        rows.push_back({{"index", i}, {"pmepr", est.value}, {"peak_index", est.peak_index}});
    }
    report.check("measured", true);
    report.data = {{"oversample", oversample}, {"table", rows}};
    if (!json_mode) std::cout << table.str();
    return finish(report, json_mode, timer);
}

// ---------------------------------------------------------------------------
// anf
// ---------------------------------------------------------------------------

int cmd_anf(const std::string& path, bool reverse_index, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "anf";
    digest_input(report, path);

    // accept a family file, a full matrix file, or a plain text sequence
    std::vector<std::pair<std::string, golay::QarySequence>> entries;
    std::ifstream probe(path);
    if (!probe) throw golay::ParseError("cannot open " + path);
    char first = 0;
    probe >> first;
    probe.close();
    if (first == '{') {
        const json doc = golay::load_json_file(path);
        if (doc.contains("entries")) {
            const auto m = golay::poly_matrix_from_json(doc);
            for (int i = 0; i < m.size(); ++i)
                for (int j = 0; j < m.size(); ++j)
                    entries.emplace_back("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                         golay::QarySequence(m.q(), m.entry(i, j)));
        } else {
            const auto family = golay::family_from_json(doc);
            for (std::size_t i = 0; i < family.sequences.size(); ++i)
                entries.emplace_back("(" + std::to_string(i) + ")", family.sequences[i]);
        }
    } else {
        const auto family = golay::load_family(path);
        entries.emplace_back("(0)", family.sequences.front());
    }

    bool roundtrips = true;
    json listing = json::array();
    std::ostringstream table;
    for (const auto& [label, seq] : entries) {
        const auto oriented = reverse_index ? golay::reversed(seq) : seq;
        const auto f = golay::anf(oriented);
        for (std::size_t m = 0; m < oriented.length(); ++m)
            if (f.evaluate(m) != oriented.exps[m]) roundtrips = false;
        table << label << " " << f.to_string() << "\n";
        listing.push_back({{"entry", label}, {"anf", f.to_string()}, {"degree", f.degree()}});
    }
    report.check("round-trip evaluation", roundtrips);
    report.data = {{"reverse_index", reverse_index}, {"functions", listing}};
    if (!json_mode) std::cout << table.str();
    return finish(report, json_mode, timer);
}

// ---------------------------------------------------------------------------
// hadamard subcommands
// ---------------------------------------------------------------------------

int cmd_hadamard_verify(const std::string& path, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "hadamard verify";
    digest_input(report, path);
    const auto h = golay::matrix_from_json(golay::load_json_file(path));  // throws if invalid
    report.check("butson", true);
    report.data = {{"q", h.q()}, {"N", h.size()}};
    if (!json_mode) std::cout << "valid H(" << h.q() << ", " << h.size() << ")\n";
    return finish(report, json_mode, timer);
}

int cmd_hadamard_representatives(int q, int n, const std::string& out_dir, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "hadamard representatives";
    const auto reps = golay::representatives(q, n);
    report.check("available", true);
    json docs = json::array();
    std::ostringstream table;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        table << "representative " << i << " of H(" << q << ", " << n << ")\n" << matrix_grid(reps[i]);
        docs.push_back(golay::matrix_to_json(reps[i]));
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            const std::string path = (std::filesystem::path(out_dir) /
                                      ("rep_q" + std::to_string(q) + "_N" + std::to_string(n) + "_" +
                                       std::to_string(i) + ".json"))
                                         .string();
            golay::write_file(path, golay::dump_json(golay::matrix_to_json(reps[i])));
            report.outputs.push_back(path);
        }
    }
    report.data = {{"q", q}, {"N", n}, {"matrices", docs}};
    if (!json_mode) std::cout << table.str();
    return finish(report, json_mode, timer);
}

// exits 0 when equivalent, 1 when not; its own errors exit 2 so the three-way
// answer stays unambiguous
int cmd_hadamard_equivalent(const std::string& path1, const std::string& path2, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "hadamard equivalent";
    digest_input(report, path1);
    digest_input(report, path2);
    std::optional<golay::EquivalenceWitness> witness;
    try {
        const auto h1 = golay::matrix_from_json(golay::load_json_file(path1));
        const auto h2 = golay::matrix_from_json(golay::load_json_file(path2));
        witness = golay::are_equivalent(h1, h2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    report.check("equivalent", witness.has_value());
    report.data = {{"equivalent", witness.has_value()}};
    std::ostringstream out;
    if (witness) {
        out << "EQUIVALENT\n" << witness_text(*witness);
        report.data["witness"] = witness_json(*witness);
    } else {
        out << "NOT EQUIVALENT\n";
    }
    if (!json_mode) std::cout << out.str();
    return finish(report, json_mode, timer);
}

int cmd_hadamard_dephase(const std::string& path, const std::string& out_path, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "hadamard dephase";
    digest_input(report, path);
    const auto h = golay::matrix_from_json(golay::load_json_file(path));
    const auto d = golay::dephase(h);
    report.check("dephased", true);
    report.data = {{"matrix", golay::matrix_to_json(d.matrix)}, {"witness", witness_json(d.witness)}};
    if (!out_path.empty()) {
        golay::write_file(out_path, golay::dump_json(golay::matrix_to_json(d.matrix)));
        report.outputs.push_back(out_path);
    }
    if (!json_mode) std::cout << matrix_grid(d.matrix) << witness_text(d.witness);
    return finish(report, json_mode, timer);
}

// ---------------------------------------------------------------------------
// reproduce targets
// ---------------------------------------------------------------------------

int reproduce_example7(bool json_mode) {
    Timer timer;
    Report report;
    report.command = "reproduce example7";

    const auto spec = golay::builtin::quaternary_demo_spec();
    const auto m = golay::construct(spec);
    report.check("constructed 16 length-16 sequences", m.size() == 4 && m.length() == 16);

    const auto sets = golay::extract_sets(m);
    report.check("8 complementary sets of size 4", sets.rows.size() == 4 && sets.columns.size() == 4);

    const auto& expected = golay::builtin::quaternary_demo_anfs();
    int anf_matches = 0;
    int degree_matches = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto f = golay::anf(golay::reversed(golay::QarySequence(4, m.entry(i, j))));
            if (f.to_string() == expected[static_cast<std::size_t>(i) * 4 + j]) ++anf_matches;
            if (f.degree() == 3) ++degree_matches;
        }
    report.check("16/16 boolean functions match", anf_matches == 16);
    report.check("16/16 have algebraic degree 3", degree_matches == 16);
    report.data = {{"anf_matches", anf_matches}, {"degree_matches", degree_matches}};

    if (!json_mode)
        std::cout << "sets: 8/8 complementary\nanf: " << anf_matches << "/16 matched\ndegree: " << degree_matches
                  << "/16 equal 3\n"
                  << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return finish(report, json_mode, timer);
}

int reproduce_example8(bool json_mode) {
    Timer timer;
    Report report;
    report.command = "reproduce example8";

    // brute-force table: every length-8 binary sequence belonging to some Golay pair
    const std::size_t len = 8;
    auto seq_of = [len](unsigned bits) {
        std::vector<int> exps(len);
        for (std::size_t i = 0; i < len; ++i) exps[i] = static_cast<int>(bits >> i & 1u);
        return golay::QarySequence(2, std::move(exps));
    };
    std::set<std::vector<int>> table;
    for (unsigned a = 0; a < 256; ++a) {
        const auto sa = seq_of(a);
        for (unsigned b = 0; b < 256; ++b) {
            if (golay::golay_check(std::vector<golay::QarySequence>{sa, seq_of(b)}).complementary) {
                table.insert(sa.exps);
                break;
            }
        }
    }

    int pair_count = 0, pair_pass = 0, member_count = 0, member_hits = 0;
    std::set<std::vector<int>> produced;
    std::vector<int> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        for (int phase_bits = 0; phase_bits < 16; ++phase_bits) {
            std::vector<int> phases(4);
            for (int t = 0; t < 4; ++t) phases[static_cast<std::size_t>(t)] = phase_bits >> t & 1;
            const auto spec = golay::pair_spec(2, phases, perm);
            const auto m = golay::construct(spec);
            std::vector<golay::QarySequence> first_row{golay::QarySequence(2, m.entry(0, 0)),
                                                       golay::QarySequence(2, m.entry(0, 1))};
            ++pair_count;
            if (golay::golay_check(first_row).complementary) ++pair_pass;
            for (const auto& s : first_row) {
                ++member_count;
                if (table.count(s.exps)) ++member_hits;
                produced.insert(s.exps);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    report.check("all first rows complementary", pair_pass == pair_count);
    report.check("all members found in the brute-force pair table", member_hits == member_count);
    report.data = {{"pairs", pair_count},
                   {"distinct_sequences", produced.size()},
                   {"brute_force_table_size", table.size()}};

    if (!json_mode)
        std::cout << pair_pass << "/" << pair_count << " first-row pairs complementary\n"
                  << member_hits << "/" << member_count << " members in the brute-force table\n"
                  << "distinct sequences produced: " << produced.size() << " (table holds " << table.size()
                  << ")\n"
                  << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return finish(report, json_mode, timer);
}

int reproduce_lemma3(std::uint64_t seed, bool json_mode) {
    Timer timer;
    Report report;
    report.command = "reproduce lemma3";

    Rand rand(seed);
    int holds = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        const int n = rand.uniform(1, 3);
        const int q = rand.uniform(2, 8);
        const std::size_t dim = static_cast<std::size_t>(rand.uniform(1, 3));
        std::vector<golay::SelectorQuadruple> factors;
        for (int k = 0; k < n; ++k) {
            auto mat = [&] {
                golay::CycMatrix m(q, dim);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        m.at(i, j) = golay::CyclotomicInt::from_int(q, rand.uniform(-5, 5));
                return m;
            };
            factors.push_back(golay::SelectorQuadruple{mat(), mat(), mat(), mat()});
        }
        if (golay::expansion_identity_holds(factors, rand.perm(n))) ++holds;
    }
    report.check("identity holds on all instances", holds == trials);
    report.data = {{"trials", trials}, {"holds", holds}, {"seed", seed}};
    if (!json_mode) std::cout << holds << "/" << trials << " identities hold\n" << (holds == trials ? "PASS" : "FAIL") << "\n";
    return finish(report, json_mode, timer);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golay complementary set construction and analysis toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a machine-readable report on stdout instead of data tables");

    std::string spec_path, out_path, set_path;
    int oversample = 64;
    bool reverse_index = false;
    std::uint64_t seed = 20260810ull;

    auto* construct_cmd = app.add_subcommand("construct", "run the product construction from a spec file");
    construct_cmd->add_option("spec", spec_path, "construction spec (JSON)")->required();
    construct_cmd->add_option("--out", out_path, "directory for matrix.json plus the 2N set files");

    auto* verify_cmd = app.add_subcommand("verify", "exact complementarity test of a set file");
    verify_cmd->add_option("set", set_path, "set file (JSON) or sequence file (text)")->required();

    auto* pmepr_cmd = app.add_subcommand("pmepr", "peak-to-mean envelope power ratio table");
    pmepr_cmd->add_option("set", set_path, "set file (JSON) or sequence file (text)")->required();
    pmepr_cmd->add_option("--oversample", oversample, "grid oversampling factor (default 64)");

    auto* anf_cmd = app.add_subcommand("anf", "algebraic normal forms of the stored sequences");
    anf_cmd->add_option("set", set_path, "set file, matrix file, or sequence file")->required();
    anf_cmd->add_flag("--reverse", reverse_index, "index positions from the high-degree coefficient down");

    auto* hadamard_cmd = app.add_subcommand("hadamard", "Butson matrix utilities");
    hadamard_cmd->require_subcommand(1);
    std::string h_path1, h_path2;
    int h_q = 0, h_n = 0;
    auto* h_verify = hadamard_cmd->add_subcommand("verify", "validate a matrix file");
    h_verify->add_option("matrix", h_path1, "matrix file (JSON)")->required();
    auto* h_reps = hadamard_cmd->add_subcommand("representatives", "print the built-in representatives");
    h_reps->add_option("q", h_q, "alphabet size")->required();
    h_reps->add_option("N", h_n, "dimension")->required();
    h_reps->add_option("--out", out_path, "directory to write the matrices as JSON");
    auto* h_equiv = hadamard_cmd->add_subcommand("equivalent", "exhaustive equivalence search over two matrix files");
    h_equiv->add_option("first", h_path1, "matrix file (JSON)")->required();
    h_equiv->add_option("second", h_path2, "matrix file (JSON)")->required();
    auto* h_dephase = hadamard_cmd->add_subcommand("dephase", "normalize the first row and column to zero phases");
    h_dephase->add_option("matrix", h_path1, "matrix file (JSON)")->required();
    h_dephase->add_option("--out", out_path, "file to write the dephased matrix");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "built-in end-to-end reproduction suites");
    std::string target;
    reproduce_cmd->add_option("target", target, "example7 | example8 | lemma3")
        ->required()
        ->check(CLI::IsMember({"example7", "example8", "lemma3"}));
    reproduce_cmd->add_option("--seed", seed, "seed for the randomized drivers");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](CLI::App*) { return true; })) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct_cmd) return cmd_construct(spec_path, out_path, json_mode);
        if (*verify_cmd) return cmd_verify(set_path, json_mode);
        if (*pmepr_cmd) return cmd_pmepr(set_path, oversample, json_mode);
        if (*anf_cmd) return cmd_anf(set_path, reverse_index, json_mode);
        if (*hadamard_cmd) {
            if (*h_verify) return cmd_hadamard_verify(h_path1, json_mode);
            if (*h_reps) return cmd_hadamard_representatives(h_q, h_n, out_path, json_mode);
            if (*h_equiv) return cmd_hadamard_equivalent(h_path1, h_path2, json_mode);
            if (*h_dephase) return cmd_hadamard_dephase(h_path1, out_path, json_mode);
        }
        if (*reproduce_cmd) {
            if (target == "example7") return reproduce_example7(json_mode);
            if (target == "example8") return reproduce_example8(json_mode);
            return reproduce_lemma3(seed, json_mode);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
