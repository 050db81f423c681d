// hwl: command-line driver for the hypercube wirelength certification library.
//
// Every command is deterministic: the same arguments (with --threads only
// changing wall-clock time, never results) produce byte-identical output.
// Exit codes: 0 success, 1 verification failure (a witness is printed),
// 2 usage or domain error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwl/bound.hpp"
#include "hwl/embedding.hpp"
#include "hwl/json_io.hpp"
#include "hwl/oracle.hpp"
#include "hwl/partition.hpp"
#include "hwl/rational.hpp"
#include "hwl/takagi.hpp"
#include "hwl/theta.hpp"

namespace {

using namespace hwl;

// ---- shared helpers ----

Embedding pick_embedding(int n, const std::string& path) {
    if (!path.empty()) return embedding_from_json(load_json_file(path));
    if (n > 0) return gray_embedding(n);
    throw std::invalid_argument("pass --embedding FILE or --n N (Gray labeling)");
}

Host parse_host(const std::string& h) {
    if (h == "cycle") return Host::cycle;
    if (h == "path") return Host::path;
    throw std::invalid_argument("--host must be cycle or path");
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t sweep_seed(std::uint64_t seed, std::int64_t index) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ull * std::uint64_t(index + 1));
}

std::string gap_text(const Rational& g) {
    return rat_num(g).str() + "/" + rat_den(g).str() + " = " + decimal_string(g);
}

std::string grid_line(const GridReport& r) {
    std::ostringstream os;
    os << r.region << ": cells " << r.cells << ", min gap " << gap_text(r.min_gap) << " at ("
       << r.argmin_i << "," << r.argmin_j << "), hits " << r.min_count << "  "
       << (r.pass ? "[ok]" : "[FAIL]");
    return os.str();
}

// ---- csv writers ----

std::string type_seq_csv(const TypeSequence& t) {
    std::string s = "i,t_i\n";
    for (std::size_t i = 0; i < t.values.size(); ++i)
        s += std::to_string(i + 1) + "," + std::to_string(t.values[i]) + "\n";
    return s;
}

std::string stages_csv(const PipelineReport& rep) {
    std::string s = "i";
    for (const auto& st : rep.stages) s += "," + st.name;
    s += "\n";
    const std::size_t rows = rep.stages.empty() ? 0 : rep.stages.front().values.size();
    for (std::size_t i = 0; i < rows; ++i) {
        s += std::to_string(i + 1);
        for (const auto& st : rep.stages) s += "," + std::to_string(st.values.at(i));
        s += "\n";
    }
    return s;
}

std::string theta_table_csv(const TypeTable& tab) {
    const std::int64_t P = std::int64_t(1) << tab.n;
    std::string s = "k,t,theta,bound_num,bound_den\n";
    for (const auto& row : tab.rows) {
        const Rational bound = Rational(BigInt(P)) * parabola_f(Rational(BigInt(row.k), BigInt(P)));
        for (std::size_t t = 0; t < row.min_by_type.size(); ++t) {
            if (row.min_by_type[t] < 0) continue; // type not attained at this size
            s += std::to_string(row.k) + "," + std::to_string(t) + "," +
                 std::to_string(row.min_by_type[t]) + "," + rat_num(bound).str() + "," +
                 rat_den(bound).str() + "\n";
        }
    }
    return s;
}

// ---- verify-all items ----

struct Item {
    std::string name;
    bool ok = false;
    std::string detail;
};

Item run_gray_item() {
    IdentityReport rep;
    for (int n = 3; n <= 12; ++n) rep.merge(gray_identities_check(n));
    return {"gray", rep.ok, rep.ok ? "cut/type identities, n <= 12" : rep.failures.front()};
}

Item run_counts_item() {
    const IdentityReport rep = count_identities(12);
    return {"counts", rep.ok, rep.ok ? "theta row sums and s-sequence totals, n <= 12"
                                     : rep.failures.front()};
}

Item run_lemmas_item() {
    const CheckSuite suite = lemma_suite_takagi(12, 40, 1000);
    for (const auto& c : suite.checks)
        if (!c.ok) return {"lemmas", false, c.name + ": " + c.detail};
    return {"lemmas", true, std::to_string(suite.checks.size()) + " takagi/parabola checks"};
}

Item run_grids_item(int threads) {
    const auto [interior, edge] = verify_dyadic_grids(threads);
    const bool ok = interior.pass && edge.pass && interior.min_gap == Rational(0) &&
                    edge.min_gap > Rational(0);
    std::string d = "interior " + gap_text(interior.min_gap) + ", edge " + gap_text(edge.min_gap);
    if (!ok && !interior.witnesses.empty()) d = interior.witnesses.front();
    if (!ok && !edge.witnesses.empty()) d = edge.witnesses.front();
    return {"grids", ok, d};
}

Item run_window_item(int threads) {
    for (int n = 3; n <= 12; ++n) {
        const GridReport rep = verify_critical_window(n, {}, threads);
        if (!rep.pass || rep.min_gap != Rational(0))
            return {"window", false,
                    rep.region + (rep.witnesses.empty() ? " min gap not 0" : ": " + rep.witnesses.front())};
    }
    return {"window", true, "a >= f on the whole band, n <= 12, min gap 0"};
}

Item run_oracle_item(int threads) {
    const TypeTable tab = scan_type_table(5, 16, threads);
    for (std::int64_t k = 0; k <= 16; ++k)
        if (tab.min_over_types(k) != theta_opt(5, k))
            return {"oracle", false, "min over types != theta at k=" + std::to_string(k)};
    for (std::int64_t t = 0; t <= 4; ++t)
        if (tab.at(16, t) != theta_half_type(5, t))
            return {"oracle", false, "half-plane formula off at t=" + std::to_string(t)};
    const ThetaTypeOracle oracle = [&tab](int n, std::int64_t k, std::int64_t t) {
        return n == 5 ? tab.at(k, t) : std::int64_t(-1);
    };
    const GridReport rep = verify_critical_window(5, oracle, threads);
    if (!rep.pass || !rep.theta_pass || rep.theta_cells <= 0)
        return {"oracle", false,
                rep.theta_witnesses.empty() ? "window recheck failed" : rep.theta_witnesses.front()};
    return {"oracle", true,
            "exhaustive n=5 scan, " + std::to_string(rep.theta_cells) + " typed cells rechecked"};
}

Item run_brute_item(int threads) {
    const BruteWlResult r2 = brute_min_cycle_wl(2), r3 = brute_min_cycle_wl(3);
    if (r2.min_wl != 4 || r2.optima != 2) return {"brute", false, "n=2 cycle minimum off"};
    if (r3.min_wl != 20 || r3.optima != 96) return {"brute", false, "n=3 cycle minimum off"};
    for (int n = 1; n <= 4; ++n)
        for (std::int64_t k = 0; k <= (std::int64_t(1) << n); ++k)
            if (brute_theta(n, k, threads) != theta_opt(n, k))
                return {"brute", false,
                        "theta mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)};
    return {"brute", true, "cycle minima n <= 3, boundary minima n <= 4"};
}

Item run_sweep_item(int threads) {
    for (int n = 5; n <= 6; ++n) {
        const std::int64_t count = 10000, target = gray_cycle_wl(n);
        std::vector<std::string> fails(std::size_t(resolve_threads(threads)));
        parallel_ranges(count, threads, [&](int chunk, std::int64_t b, std::int64_t e) {
            for (std::int64_t i = b; i < e && fails[std::size_t(chunk)].empty(); ++i) {
                std::mt19937_64 rng(sweep_seed(0xa11ce5u + std::uint64_t(n), i));
                const PipelineReport rep = lower_bound_report(random_embedding(n, rng));
                if (!rep.verdict || rep.wl < target)
                    fails[std::size_t(chunk)] =
                        "n=" + std::to_string(n) + " index=" + std::to_string(i);
            }
        });
        for (const auto& f : fails)
            if (!f.empty()) return {"sweep", false, f};
    }
    return {"sweep", true, "10000 random labelings each at n=5,6"};
}

} // namespace

// ---- main ----

int main(int argc, char** argv) {
    CLI::App app{"certified lower bounds for cyclic hypercube wirelength"};
    app.require_subcommand(1);
    int rc = 0;

    // gray
    int gray_n = 0;
    std::string gray_out;
    auto* gray = app.add_subcommand("gray", "emit the Gray-code labeling as JSON");
    gray->add_option("--n", gray_n, "cube dimension")->required()->check(CLI::Range(1, 20));
    gray->add_option("--out", gray_out, "output file (default stdout)");
    gray->callback([&] { emit(gray_out, json_text(embedding_to_json(gray_embedding(gray_n)))); });

    // wirelength
    int wl_n = 0;
    std::string wl_embedding, wl_host = "cycle";
    auto* wl = app.add_subcommand("wirelength", "total edge length of a labeling");
    wl->add_option("--n", wl_n, "use the Gray labeling of Q_n")->check(CLI::Range(1, 16));
    wl->add_option("--embedding", wl_embedding, "labeling JSON file");
    wl->add_option("--host", wl_host, "host graph: cycle or path")
        ->check(CLI::IsMember({"cycle", "path"}));
    wl->callback([&] {
        std::cout << wirelength(pick_embedding(wl_n, wl_embedding), parse_host(wl_host)) << "\n";
    });

    // theta
    int th_n = 0, th_threads = 0;
    std::int64_t th_k = 0, th_t = -1;
    std::string th_mode = "formula";
    auto* th = app.add_subcommand("theta", "minimum boundary size at fixed subset size");
    th->add_option("--n", th_n, "cube dimension")->required();
    th->add_option("--k", th_k, "subset size")->required();
    th->add_option("--t", th_t, "restrict to subsets of this half-plane type");
    th->add_option("--mode", th_mode, "formula or brute")
        ->check(CLI::IsMember({"formula", "brute"}));
    th->add_option("--threads", th_threads, "worker threads (0 = all cores)")
        ->envname("HWL_THREADS");
    th->callback([&] {
        std::int64_t v = 0;
        if (th_t < 0) {
            v = th_mode == "brute" ? brute_theta(th_n, th_k, th_threads) : theta_opt(th_n, th_k);
        } else if (th_mode == "brute") {
            const TypeRow row = scan_type_row(th_n, th_k, th_threads);
            v = th_t < std::int64_t(row.min_by_type.size()) ? row.min_by_type[std::size_t(th_t)]
                                                            : -1; // -1 = type not attained
        } else if (th_n >= 3 && th_k == (std::int64_t(1) << (th_n - 1)) &&
                   th_t <= (std::int64_t(1) << (th_n - 3))) {
            v = theta_half_type(th_n, th_t);
        } else {
            throw std::invalid_argument(
                "typed formula covers only k = 2^{n-1}, t <= 2^{n-3}; use --mode brute");
        }
        std::cout << v << "\n";
    });

    // theta-table
    int tt_n = 0, tt_threads = 0;
    std::int64_t tt_kmax = -1;
    std::string tt_out, tt_format = "csv";
    auto* tt = app.add_subcommand("theta-table", "typed minima with the parabola bound");
    tt->add_option("--n", tt_n, "cube dimension")->required()->check(CLI::Range(2, 5));
    tt->add_option("--k-max", tt_kmax, "largest subset size (default 2^{n-1})");
    tt->add_option("--out", tt_out, "output file (default stdout)");
    tt->add_option("--format", tt_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    tt->add_option("--threads", tt_threads, "worker threads (0 = all cores)")
        ->envname("HWL_THREADS");
    tt->callback([&] {
        const std::int64_t kmax = tt_kmax < 0 ? (std::int64_t(1) << (tt_n - 1)) : tt_kmax;
        const TypeTable tab = scan_type_table(tt_n, kmax, tt_threads);
        if (tt_format == "csv") {
            emit(tt_out, theta_table_csv(tab));
            return;
        }
        const std::int64_t P = std::int64_t(1) << tab.n;
        json rows = json::array();
        for (const auto& row : tab.rows) {
            const Rational bound =
                Rational(BigInt(P)) * parabola_f(Rational(BigInt(row.k), BigInt(P)));
            for (std::size_t t = 0; t < row.min_by_type.size(); ++t) {
                if (row.min_by_type[t] < 0) continue;
                rows.push_back({{"k", row.k},
                                {"t", t},
                                {"theta", row.min_by_type[t]},
                                {"bound", rational_to_json(bound)}});
            }
        }
        emit(tt_out, json_text(json{{"n", tab.n}, {"rows", rows}}));
    });

    // type-seq
    int ts_n = 0;
    std::string ts_embedding, ts_out, ts_format = "csv";
    auto* ts = app.add_subcommand("type-seq", "half-plane type of every window");
    ts->add_option("--n", ts_n, "use the Gray labeling of Q_n")->check(CLI::Range(2, 16));
    ts->add_option("--embedding", ts_embedding, "labeling JSON file");
    ts->add_option("--out", ts_out, "output file (default stdout)");
    ts->add_option("--format", ts_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ts->callback([&] {
        const TypeSequence t = type_sequence(pick_embedding(ts_n, ts_embedding));
        if (ts_format == "csv")
            emit(ts_out, type_seq_csv(t));
        else
            emit(ts_out, json_text(json{{"n", t.n}, {"values", t.values}}));
    });

    // verify-grid
    int vg_depth = 12, vg_window = 0, vg_threads = 0;
    std::string vg_out;
    auto* vg = app.add_subcommand("verify-grid", "certify the dyadic bound-surface grids");
    vg->add_option("--depth", vg_depth, "grid depth (the certificates are pinned at 12)");
    vg->add_option("--window", vg_window, "also scan the critical window at this dimension")
        ->check(CLI::Range(3, 12));
    vg->add_option("--out", vg_out, "write the grid reports as JSON");
    vg->add_option("--threads", vg_threads, "worker threads (0 = all cores)")
        ->envname("HWL_THREADS");
    vg->callback([&] {
        if (vg_depth != 12)
            throw std::invalid_argument("the grid constants are derived at depth 12 exactly");
        const auto [interior, edge] = verify_dyadic_grids(vg_threads);
        std::cout << grid_line(interior) << "\n" << grid_line(edge) << "\n";
        json j{{"interior", grid_report_to_json(interior)}, {"edge", grid_report_to_json(edge)}};
        bool ok = interior.pass && edge.pass;
        if (vg_window > 0) {
            const GridReport w = verify_critical_window(vg_window, {}, vg_threads);
            std::cout << grid_line(w) << "\n";
            j["window"] = grid_report_to_json(w);
            ok = ok && w.pass;
        }
        if (!vg_out.empty()) save_json_file(vg_out, j);
        if (!ok) rc = 1;
    });

    // verify-lemmas
    int vl_n = 12;
    std::string vl_format = "text";
    auto* vl = app.add_subcommand("verify-lemmas", "run the identity and lemma suites");
    vl->add_option("--n", vl_n, "largest dimension to check")->check(CLI::Range(3, 12));
    vl->add_option("--format", vl_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    vl->callback([&] {
        IdentityReport gray_rep;
        for (int n = 3; n <= vl_n; ++n) gray_rep.merge(gray_identities_check(n));
        const IdentityReport counts = count_identities(vl_n);
        const CheckSuite suite = lemma_suite_takagi(vl_n < 6 ? 6 : vl_n, 40, 1000);
        const bool ok = gray_rep.ok && counts.ok && suite.ok();
        if (vl_format == "json") {
            std::cout << json_text(json{{"counts", identity_report_to_json(counts)},
                                        {"gray", identity_report_to_json(gray_rep)},
                                        {"lemmas", check_suite_to_json(suite)},
                                        {"ok", ok}});
        } else {
            auto line = [](bool o, const std::string& name, const std::string& detail) {
                std::cout << (o ? "ok   " : "FAIL ") << name
                          << (detail.empty() ? "" : ": " + detail) << "\n";
            };
            line(gray_rep.ok, "gray-identities",
                 gray_rep.ok ? "" : gray_rep.failures.front());
            line(counts.ok, "count-identities", counts.ok ? "" : counts.failures.front());
            for (const auto& c : suite.checks) line(c.ok, c.name, c.ok ? "" : c.detail);
        }
        if (!ok) rc = 1;
    });

    // bound-pipeline
    int bp_n = 0;
    std::string bp_embedding, bp_out;
    auto* bp = app.add_subcommand("bound-pipeline", "certify one labeling against the Gray bound");
    bp->add_option("--n", bp_n, "use the Gray labeling of Q_n")->check(CLI::Range(3, 16));
    bp->add_option("--embedding", bp_embedding, "labeling JSON file");
    bp->add_option("--out", bp_out, "write the stage table as CSV");
    bp->callback([&] {
        const PipelineReport rep = lower_bound_report(pick_embedding(bp_n, bp_embedding));
        json j = pipeline_report_to_json(rep);
        json sums = json::object();
        for (const auto& st : rep.stages) sums[st.name] = st.sum;
        j.erase("stages");
        j["sums"] = sums;
        std::cout << json_text(j);
        if (!bp_out.empty()) emit(bp_out, stages_csv(rep));
        if (!rep.verdict) rc = 1;
    });

    // random-sweep
    int rs_n = 0, rs_threads = 0;
    std::int64_t rs_count = 1000;
    std::uint64_t rs_seed = 1;
    auto* rs = app.add_subcommand("random-sweep", "certify many random labelings");
    rs->add_option("--n", rs_n, "cube dimension")->required()->check(CLI::Range(3, 12));
    rs->add_option("--count", rs_count, "number of labelings")->check(CLI::PositiveNumber);
    rs->add_option("--seed", rs_seed, "sweep seed");
    rs->add_option("--threads", rs_threads, "worker threads (0 = all cores)")
        ->envname("HWL_THREADS");
    rs->callback([&] {
        const std::int64_t target = gray_cycle_wl(rs_n);
        struct Part {
            std::int64_t min_wl = -1, max_wl = -1;
            std::map<std::string, std::int64_t> modes;
            std::vector<std::string> fails;
        };
        std::vector<Part> parts(std::size_t(resolve_threads(rs_threads)));
        parallel_ranges(rs_count, rs_threads, [&](int chunk, std::int64_t b, std::int64_t e) {
            auto& part = parts[std::size_t(chunk)];
            for (std::int64_t i = b; i < e; ++i) {
                std::mt19937_64 rng(sweep_seed(rs_seed, i));
                const PipelineReport rep = lower_bound_report(random_embedding(rs_n, rng));
                if (part.min_wl < 0 || rep.wl < part.min_wl) part.min_wl = rep.wl;
                if (rep.wl > part.max_wl) part.max_wl = rep.wl;
                ++part.modes[rep.align_mode];
                if ((!rep.verdict || rep.wl < target) && part.fails.size() < 4)
                    part.fails.push_back("index " + std::to_string(i) + ": " +
                                         (rep.notes.empty() ? "wl below bound" : rep.notes.front()));
            }
        });
        Part all;
        for (const auto& p : parts) {
            if (p.min_wl >= 0 && (all.min_wl < 0 || p.min_wl < all.min_wl)) all.min_wl = p.min_wl;
            if (p.max_wl > all.max_wl) all.max_wl = p.max_wl;
            for (const auto& [m, c] : p.modes) all.modes[m] += c;
            for (const auto& f : p.fails)
                if (all.fails.size() < 8) all.fails.push_back(f);
        }
        std::cout << json_text(json{{"all_ok", all.fails.empty()},
                                    {"count", rs_count},
                                    {"failures", all.fails},
                                    {"gray_wl", target},
                                    {"max_wl", all.max_wl},
                                    {"min_wl", all.min_wl},
                                    {"modes", all.modes},
                                    {"n", rs_n},
                                    {"seed", rs_seed}});
        if (!all.fails.empty()) rc = 1;
    });

    // search
    int se_n = 0;
    auto* se = app.add_subcommand("search", "exhaustive cycle-wirelength minimum (tiny n)");
    se->add_option("--n", se_n, "cube dimension")->required()->check(CLI::Range(2, 3));
    se->callback([&] {
        const BruteWlResult r = brute_min_cycle_wl(se_n);
        std::cout << json_text(json{{"gray_wl", gray_cycle_wl(se_n)},
                                    {"min_wl", r.min_wl},
                                    {"n", se_n},
                                    {"optima", r.optima},
                                    {"witness", embedding_to_json(r.first_witness)}});
    });

    // verify-all
    int va_threads = 0;
    std::string va_skip;
    auto* va = app.add_subcommand("verify-all", "run every verification pass");
    va->add_option("--skip", va_skip, "comma-separated items to skip "
                                      "(gray,counts,lemmas,grids,window,oracle,brute,sweep)");
    va->add_option("--threads", va_threads, "worker threads (0 = all cores)")
        ->envname("HWL_THREADS");
    va->callback([&] {
        const std::vector<std::string> names = {"gray",   "counts", "lemmas", "grids",
                                                "window", "oracle", "brute",  "sweep"};
        std::set<std::string> skip;
        std::stringstream ss(va_skip);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok.empty()) continue;
            if (std::find(names.begin(), names.end(), tok) == names.end())
                throw std::invalid_argument("unknown --skip item: " + tok);
            skip.insert(tok);
        }
        std::vector<Item> items;
        for (const auto& name : names) {
            if (skip.count(name)) {
                std::cout << "skip " << name << "\n" << std::flush;
                continue;
            }
            Item it;
            if (name == "gray") it = run_gray_item();
            else if (name == "counts") it = run_counts_item();
            else if (name == "lemmas") it = run_lemmas_item();
            else if (name == "grids") it = run_grids_item(va_threads);
            else if (name == "window") it = run_window_item(va_threads);
            else if (name == "oracle") it = run_oracle_item(va_threads);
            else if (name == "brute") it = run_brute_item(va_threads);
            else it = run_sweep_item(va_threads);
            std::cout << (it.ok ? "ok   " : "FAIL ") << it.name << ": " << it.detail << "\n"
                      << std::flush;
            items.push_back(std::move(it));
        }
        std::int64_t bad = 0;
        for (const auto& it : items) bad += it.ok ? 0 : 1;
        if (bad) {
            std::cout << bad << " of " << items.size() << " verification passes FAILED\n";
            rc = 1;
        } else {
            std::cout << "all " << items.size() << " verification passes ok\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
