// symwt: sizes, bounds, anticode searches, constructions, verification and
// the low-weight multiple search for symbol-weight codes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 an
// enumeration would exceed the cap (SYMWT_ENUM_CAP, default 10^7).

#include "symwt/symwt.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace symwt;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct Output {
    std::string path;
    std::ostringstream buf;

    // Written in one go at the end so that a failed command leaves no partial file.
    void flush() {
        if (path.empty() || path == "-") {
            std::cout << buf.str();
            std::cout.flush();
            return;
        }
        const std::string tmp = path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + path);
            f << buf.str();
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot write " + path);
    }
};

WeightMode parse_mode(const std::string& m) {
    if (m == "exact") return WeightMode::exact;
    if (m == "bounded") return WeightMode::bounded;
    throw CLI::ValidationError("--mode", "must be exact or bounded");
}

CodeFile load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    if (in.peek() == '{') {
        Json j;
        in >> j;
        auto c = code_from_json(j);
        std::optional<int> d, r;
        if (j.contains("d")) d = j["d"].get<int>();
        if (j.contains("r")) r = j["r"].get<int>();
        return {std::move(c), d, r};
    }
    return read_code(in);
}

Json audit_json(const CodeAudit& a) {
    Json j{{"size", a.size}};
    j["min_distance"] = a.min_distance ? Json(*a.min_distance) : Json(nullptr);
    j["symbol_weight_min"] = a.symbol_weight.min;
    j["symbol_weight_max"] = a.symbol_weight.max;
    return j;
}

void emit_code(Output& out, const std::string& format, const Code& c, std::optional<int> d, std::optional<int> r) {
    if (format == "json") {
        Json j = to_json(c);
        if (d) j["d"] = *d;
        if (r) j["r"] = *r;
        out.buf << j.dump(2) << '\n';
    } else {
        write_code(out.buf, c, d, r);
    }
}

bool is_prime_power(int q) {
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    return false;
}

Polynomial parse_coefficients(const std::string& text, const Field& F) {
    std::vector<Element> c;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) c.push_back(F.element(static_cast<std::uint32_t>(std::stoul(tok))));
    return Polynomial(std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sizes, bounds, searches and constructions for symbol-weight codes.\n"
                 "Exit codes: 0 ok, 1 verification failure, 2 usage, 3 enumeration cap exceeded.\n"
                 "SYMWT_ENUM_CAP overrides the enumeration cap (default 10000000)."};
    app.require_subcommand(1);
    Output out;
    app.add_option("-o,--output", out.path, "Write the result here instead of stdout");

    // size
    int n = 0, q = 0, r = 0, d = 0, k = 0;
    std::string mode = "exact", format = "text";
    bool all_r = false;
    auto* size = app.add_subcommand("size", "Exact size and rate of SW(n,q,r) or SW(n,q,<=r).\n"
                                            "CSV columns: n,q,r,mode,size,rate");
    size->add_option("--n", n, "Word length")->required()->check(CLI::PositiveNumber);
    size->add_option("--q", q, "Alphabet size")->required()->check(CLI::PositiveNumber);
    size->add_option("--r", r, "Symbol weight")->check(CLI::PositiveNumber);
    size->add_option("--mode", mode, "exact or bounded")->check(CLI::IsMember({"exact", "bounded"}));
    size->add_flag("--all-r", all_r, "One row for every admissible r");
    size->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    // bounds
    std::vector<std::string> oracle_specs;
    std::string oracle_file;
    bool audit = false;
    std::uint64_t ccc_search = 0;
    auto* bounds = app.add_subcommand("bounds", "Every applicable bound on the largest code, with provenance.\n"
                                                "CSV columns: provenance,direction,kind,value,exact,n,q,d,r,mode,rho,delta");
    bounds->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    bounds->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    bounds->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    bounds->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    bounds->add_option("--mode", mode)->check(CLI::IsMember({"exact", "bounded"}));
    bounds->add_option("--ccc-oracle", oracle_specs, "Constant-composition lower bound 'composition[@d]:count', repeatable");
    bounds->add_option("--ccc-oracle-file", oracle_file, "JSON list of {\"composition\", \"value\", [\"d\"], [\"source\"]}");
    bounds->add_option("--ccc-search", ccc_search, "Solve compositions with at most this many words exhaustively");
    bounds->add_flag("--audit-exhaustive", audit, "Check every bound against the exhaustive optimum (q^n <= 729)");
    bounds->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    // curves
    int grid = 100;
    std::optional<double> delta, rho;
    std::vector<std::string> wanted;
    auto* curves = app.add_subcommand("curves", "Rate-bound curve samples as CSV.\n"
                                                "Columns: rho,delta,gv_exact,gv_bounded,gv_exact_growing_q,lp,large_weight,"
                                                "large_weight_growing_q,singleton (empty where a bound does not apply)");
    curves->add_option("--q", q)->required()->check(CLI::Range(2, 1 << 20));
    auto* od = curves->add_option("--delta", delta, "Fixed relative distance; rho runs over [0,1]");
    auto* orho = curves->add_option("--rho", rho, "Fixed relative symbol weight; delta runs over [0,(q-1)/q]");
    od->excludes(orho);
    curves->add_option("--grid", grid, "Number of grid intervals")->check(CLI::PositiveNumber);
    curves->add_option("--bounds", wanted, "Subset of columns to emit");

    // search
    std::string strategy = "greedy";
    auto* search = app.add_subcommand("search", "Anticode in the compositions of n into q parts of weight r under d+");
    search->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    search->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    search->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    search->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    search->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "exhaustive"}));
    search->add_option("--format", format, "text (exponential notation, one per line) or json")->check(CLI::IsMember({"text", "json"}));

    // construct
    std::string kind, code_a, code_b;
    std::uint64_t g_begin = 0, g_end = UINT64_MAX;
    auto* construct = app.add_subcommand("construct", "Build a code, audit it, and write it out");
    construct->add_option("--kind", kind)->required()->check(CLI::IsMember({"rs", "rs-csw", "uv", "concat"}));
    construct->add_option("--q", q, "Field size for rs and rs-csw");
    construct->add_option("--k", k, "Dimension for rs and rs-csw");
    construct->add_option("--r", r, "Symbol weight for rs-csw");
    construct->add_option("--g-begin", g_begin, "rs-csw: first root-free g index");
    construct->add_option("--g-end", g_end, "rs-csw: one past the last root-free g index");
    construct->add_option("--code", code_a, "uv: constant-weight code file; concat: outer code file");
    construct->add_option("--fpa", code_b, "uv: frequency permutation array file; concat: inner code file");
    construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // verify
    std::string code_path;
    std::optional<int> expect_d, expect_r;
    auto* verify = app.add_subcommand("verify", "Audit a code file; exit 1 when a claim fails");
    verify->add_option("--code", code_path)->required();
    verify->add_option("--expect-d", expect_d, "Minimum distance must be at least this");
    verify->add_option("--expect-r", expect_r, "Every word must have exactly this symbol weight");

    // conjecture
    std::string g_text;
    int sweep = 0, max_degree = -1;
    bool record_all = false;
    auto* conj = app.add_subcommand("conjecture", "Search r prescribed roots making (x-a1)..(x-ar) g(x) have symbol weight r");
    conj->add_option("--q", q);
    conj->add_option("--k", k);
    conj->add_option("--r", r);
    conj->add_option("--g", g_text, "Only this g, as ascending coefficients '2,0,0,1'");
    conj->add_option("--sweep-max-q", sweep, "All prime powers up to Q and every (k,r) in range");
    conj->add_option("--max-degree", max_degree, "Sweep: skip g of larger degree (reported as not run)");
    conj->add_flag("--record-all", record_all, "Report every g, not only failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        int rc = exit_ok;
        if (size->parsed()) {
            const auto m = parse_mode(mode);
            std::vector<SizeRow> rows;
            if (all_r) {
                const int lo = m == WeightMode::exact ? SpaceSpec{n, q, 1, m}.min_weight() : 1;
                for (int s = lo; s <= n; ++s) rows.push_back(size_row({n, q, s, m}));
            } else {
                if (r == 0) throw CLI::ValidationError("--r", "required unless --all-r");
                rows.push_back(size_row({n, q, r, m}));
            }
            if (format == "json") {
                Json a = Json::array();
                for (const auto& row : rows) a.push_back(to_json(row));
                out.buf << Json{{"schema", json_schema_version}, {"rows", a}}.dump(2) << '\n';
            } else if (format == "csv") {
                out.buf << size_csv_header() << '\n';
                for (const auto& row : rows) out.buf << to_csv(row) << '\n';
            } else {
                for (const auto& row : rows) {
                    if (rows.size() > 1) out.buf << "r=" << row.spec.r << ' ';
                    out.buf << row.size.str();
                    if (!std::isnan(row.rate)) out.buf << " (rate " << rate_string(row.rate) << ")";
                    out.buf << '\n';
                }
            }
        } else if (bounds->parsed()) {
            CccOracle oracle;
            for (const auto& s : oracle_specs) oracle.add_spec(s, "command line");
            if (!oracle_file.empty()) {
                std::ifstream f(oracle_file);
                if (!f) throw std::invalid_argument("cannot open " + oracle_file);
                Json j;
                f >> j;
                for (const auto& e : j) {
                    std::optional<int> ed;
                    if (e.contains("d")) ed = e["d"].get<int>();
                    oracle.add(composition_from_json(e.at("composition")), Count(e.at("value").is_string() ? e["value"].get<std::string>() : std::to_string(e["value"].get<std::uint64_t>())), ed,
                               e.value("source", oracle_file));
                }
            }
            if (ccc_search) oracle.set_search_limit(ccc_search);
            BestBoundsOptions bo;
            bo.exhaustive_limit = audit ? 729 : 0;
            const auto bb = best_bounds(n, q, d, r, parse_mode(mode), oracle, bo);

            bool audit_ok = bb.consistent;
            std::optional<Count> optimum;
            for (const auto& b : bb.all)
                if (b.provenance == "exhaustive") optimum = b.value;
            if (audit && !optimum) throw CLI::ValidationError("--audit-exhaustive", "needs q^n <= 729");

            if (format == "json") {
                Json a = Json::array();
                for (const auto& b : bb.all) a.push_back(to_json(b));
                Json j{{"schema", json_schema_version}, {"lower", to_json(bb.lower)}, {"upper", to_json(bb.upper)}, {"consistent", bb.consistent}, {"bounds", a}};
                if (optimum) j["exhaustive_optimum"] = optimum->str();
                out.buf << j.dump(2) << '\n';
            } else if (format == "csv") {
                out.buf << bound_csv_header() << '\n';
                for (const auto& b : bb.all) out.buf << to_csv(b) << '\n';
            } else {
                for (const auto& b : bb.all) {
                    out.buf << to_string(b.direction) << '\t' << b.value.str() << '\t' << b.provenance << (b.exact ? " (exact)" : "") << '\n';
                    for (const auto& line : b.breakdown) out.buf << "\t\t" << line << '\n';
                }
                out.buf << "best lower " << bb.lower.value.str() << " [" << bb.lower.provenance << "]\n";
                out.buf << "best upper " << bb.upper.value.str() << " [" << bb.upper.provenance << "]\n";
                if (optimum) out.buf << "exhaustive optimum " << optimum->str() << '\n';
            }
            if (!audit_ok) {
                std::cerr << "audit failed: a lower bound exceeds an upper bound\n";
                rc = exit_verify;
            }
        } else if (curves->parsed()) {
            if (!delta && !rho) throw CLI::ValidationError("curves", "needs --delta or --rho");
            auto t = rate_curves(q, delta, rho, grid);
            if (!wanted.empty()) {
                CurveTable f;
                std::vector<std::size_t> idx{0, 1};
                for (const auto& w : wanted) {
                    const auto it = std::find(t.columns.begin(), t.columns.end(), w);
                    if (it == t.columns.end()) throw CLI::ValidationError("--bounds", "unknown column " + w);
                    idx.push_back(static_cast<std::size_t>(it - t.columns.begin()));
                }
                for (const auto i : idx) f.columns.push_back(t.columns[i]);
                for (const auto& row : t.rows) {
                    std::vector<double> fr;
                    for (const auto i : idx) fr.push_back(row[i]);
                    f.rows.push_back(fr);
                }
                t = std::move(f);
            }
            out.buf << to_csv(t);
        } else if (search->parsed()) {
            const auto fam = search_anticode(n, q, r, d, strategy == "greedy" ? SearchStrategy::greedy : SearchStrategy::exhaustive);
            if (!is_anticode(fam.members, d)) throw std::logic_error("anticode audit failed");
            if (format == "json") {
                Json j = to_json(fam);
                j["schema"] = json_schema_version;
                j["strategy"] = strategy;
                out.buf << j.dump(2) << '\n';
            } else {
                for (const auto& m : fam.members) out.buf << format_exponential(m) << '\n';
            }
        } else if (construct->parsed()) {
            if (kind == "rs" || kind == "rs-csw") {
                if (q == 0 || k == 0) throw CLI::ValidationError("construct", "rs and rs-csw need --q and --k");
                const Field F = Field::of_order(q);
                const ReedSolomon rs(F, k);
                if (kind == "rs") {
                    const auto c = rs.materialize();
                    const auto a = audit_code(c);
                    if (a.min_distance && *a.min_distance != rs.designed_distance()) throw std::logic_error("RS audit: distance is not n-k+1");
                    emit_code(out, format, c, rs.designed_distance(), std::nullopt);
                    std::cerr << audit_json(a).dump() << '\n';
                } else {
                    if (r == 0) throw CLI::ValidationError("construct", "rs-csw needs --r");
                    std::vector<Word> words;
                    const Count total = rs_csw_subcode_size(F, k, r);
                    if (total > Count(std::min(enumeration_cap(), materialization_cap)) && g_end == UINT64_MAX)
                        throw CapExceeded("rs-csw code has " + total.str() + " words; restrict with --g-begin/--g-end");
                    std::vector<int> freq(static_cast<std::size_t>(q));
                    rs_csw_subcode(
                        F, k, r,
                        [&](std::span<const Symbol> w, std::uint64_t, std::span<const Symbol>, Symbol) {
                            if (words.size() >= materialization_cap) throw CapExceeded("rs-csw output exceeds the materialisation cap");
                            if (detail::symbol_weight_into(w, freq) != r || !rs.contains(w)) throw std::logic_error("rs-csw audit failed");
                            words.emplace_back(w.begin(), w.end());
                        },
                        {g_begin, g_end});
                    const Code c(rs.n(), q, std::move(words));
                    const auto a = audit_code(c);
                    emit_code(out, format, c, rs.designed_distance(), r);
                    std::cerr << audit_json(a).dump() << '\n';
                }
            } else {
                if (code_a.empty() || code_b.empty()) throw CLI::ValidationError("construct", kind + " needs --code and --fpa");
                const auto a = load_code(code_a);
                const auto b = load_code(code_b);
                const auto built = kind == "uv" ? uv_construct(a.code, b.code) : concat_construct(a.code, b.code);
                std::optional<int> dd = built.audit.min_distance;
                emit_code(out, format, built.code, dd, built.audit.symbol_weight.max);
                std::cerr << audit_json(built.audit).dump() << '\n';
            }
        } else if (verify->parsed()) {
            const auto cf = load_code(code_path);
            const auto a = audit_code(cf.code);
            Json j = audit_json(a);
            j["schema"] = json_schema_version;
            std::vector<std::string> failures;
            auto want_d = expect_d ? expect_d : cf.d;
            auto want_r = expect_r ? expect_r : cf.r;
            if (want_d) {
                j["expect_d"] = *want_d;
                if (a.min_distance && *a.min_distance < *want_d) failures.push_back("minimum distance " + std::to_string(*a.min_distance) + " < " + std::to_string(*want_d));
            }
            if (want_r) {
                j["expect_r"] = *want_r;
                if (a.symbol_weight.min != *want_r || a.symbol_weight.max != *want_r)
                    failures.push_back("symbol weight range [" + std::to_string(a.symbol_weight.min) + "," + std::to_string(a.symbol_weight.max) + "] != " + std::to_string(*want_r));
            }
            j["passed"] = failures.empty();
            j["failures"] = failures;
            out.buf << j.dump(2) << '\n';
            if (!failures.empty()) rc = exit_verify;
        } else if (conj->parsed()) {
            Json reports = Json::array();
            bool any_failure = false;
            ConjectureOptions co;
            co.record_all = record_all;
            if (sweep > 0) {
                for (int fq = 2; fq <= sweep; ++fq) {
                    if (!is_prime_power(fq)) continue;
                    const Field F = Field::of_order(fq);
                    for (int kk = 2; kk < fq - 1; ++kk)
                        for (int rr = 1; rr < kk; ++rr) {
                            if (!conjecture_in_range(fq, kk, rr)) continue;
                            if (max_degree >= 0 && kk - 1 - rr > max_degree) {
                                reports.push_back(Json{{"q", fq}, {"k", kk}, {"r", rr}, {"in_range", true}, {"not_run", true}});
                                continue;
                            }
                            const auto rep = conjecture_check(F, kk, rr, co);
                            any_failure = any_failure || rep.failures > 0;
                            reports.push_back(to_json(rep));
                        }
                }
            } else {
                if (q == 0 || k == 0 || r == 0) throw CLI::ValidationError("conjecture", "needs --q --k --r or --sweep-max-q");
                const Field F = Field::of_order(q);
                if (!g_text.empty()) co.only_g = parse_coefficients(g_text, F);
                const auto rep = conjecture_check(F, k, r, co);
                any_failure = rep.failures > 0;
                reports.push_back(to_json(rep));
            }
            out.buf << Json{{"schema", json_schema_version}, {"counterexample_found", any_failure}, {"reports", reports}}.dump(2) << '\n';
        }
        out.flush();
        return rc;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return exit_verify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verify;
    }
}
