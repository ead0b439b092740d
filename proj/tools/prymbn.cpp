/*
 * prymbn: exact invariants of pointed Prym-Brill-Noether varieties.
 *
 * Every number printed here is computed in exact rational arithmetic and,
 * wherever two independent routes exist (closed product vs Pfaffian engine,
 * counting formula vs enumeration), the CLI can print both and compare.
 *
 * Exit codes: 0 success, 1 verification/agreement failure, 2 usage error.
 * Data goes to stdout, diagnostics to stderr. Output is byte-identical
 * across reruns of the same invocation.
 */
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prymbn/count_cache.hpp"
#include "prymbn/pfaffian.hpp"
#include "prymbn/prym.hpp"
#include "prymbn/shifted_tableaux.hpp"
#include "prymbn/sweep.hpp"
#include "prymbn/version.hpp"

namespace {

using nlohmann::json;
using prymbn::CountCache;
using prymbn::Int;
using prymbn::PrymClass;
using prymbn::Rational;
using prymbn::StrictPartition;
using prymbn::VanishingSequence;

enum class Format { text, json_fmt, csv };

struct CliConfig {
    Format format = Format::text;
    int bound = prymbn::kDefaultEnumerationBound;
    bool cache_enabled = false;
    std::string cache_path;  // empty = default location
    bool serial = false;     // force the serial sweep kernel
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ",";
        out += csv_field(fields[i]);
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string values_csv(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Range {
    int lo = 0;
    int hi = -1;  // hi < lo encodes the empty range
    bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& s, const std::string& what) {
    size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        size_t pos = 0;
        std::string lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
        int lo = std::stoi(lo_s, &pos);
        if (pos != lo_s.size()) throw std::invalid_argument(s);
        int hi = std::stoi(hi_s, &pos);
        if (pos != hi_s.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": cannot parse range \"" + s +
                                    "\" (expected A or A..B)");
    }
}

std::unique_ptr<CountCache> open_cache(const CliConfig& cfg) {
    if (!cfg.cache_enabled) return nullptr;
    std::filesystem::path path =
        cfg.cache_path.empty() ? CountCache::default_path() : std::filesystem::path(cfg.cache_path);
    return std::make_unique<CountCache>(path, prymbn::kVersion);
}

/* ---------------------------------------------------------------- beta -- */

int cmd_beta(const CliConfig& cfg, int g, const std::string& a_csv) {
    VanishingSequence a = VanishingSequence::parse(a_csv);
    long b = prymbn::beta(g, a);
    bool nonempty = b >= 0;
    switch (cfg.format) {
        case Format::text:
            std::cout << "beta = " << b << "\n";
            std::cout << "general triple: " << (nonempty ? "nonempty" : "empty") << "\n";
            break;
        case Format::json_fmt:
            emit_json({{"g", g}, {"a", a.values()}, {"beta", b}, {"general_nonempty", nonempty}});
            break;
        case Format::csv:
            std::cout << "g,a,beta,general_nonempty\n";
            std::cout << join_csv({std::to_string(g), values_csv(a.values()), std::to_string(b),
                                   bool_str(nonempty)})
                      << "\n";
            break;
    }
    return 0;
}

/* --------------------------------------------------------------- class -- */

int cmd_class(const CliConfig& cfg, int g, const std::string& a_csv, const std::string& method) {
    VanishingSequence a = VanishingSequence::parse(a_csv);
    if (method == "closed" || method == "pfaffian") {
        PrymClass b = method == "closed" ? prymbn::class_B_closed(g, a)
                                         : prymbn::class_B_pfaffian(g, a);
        switch (cfg.format) {
            case Format::text:
                std::cout << "B = " << b.str() << "\n";
                break;
            case Format::json_fmt:
                emit_json({{"a", a.values()}, {"method", method}, {"class", b.to_json()}});
                break;
            case Format::csv:
                std::cout << "g,a,codim,coeff\n";
                std::cout << join_csv({std::to_string(g), values_csv(a.values()),
                                       std::to_string(b.codim), b.coeff.str()})
                          << "\n";
                break;
        }
        return 0;
    }

    PrymClass closed = prymbn::class_B_closed(g, a);
    PrymClass pfaff = prymbn::class_B_pfaffian(g, a);
    bool agree = closed == pfaff;
    switch (cfg.format) {
        case Format::text:
            std::cout << "closed   = " << closed.str() << "\n";
            std::cout << "pfaffian = " << pfaff.str() << "\n";
            std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
            break;
        case Format::json_fmt:
            emit_json({{"a", a.values()},
                       {"closed", closed.to_json()},
                       {"pfaffian", pfaff.to_json()},
                       {"agree", agree}});
            break;
        case Format::csv:
            std::cout << "g,a,codim,coeff_closed,coeff_pfaffian,agree\n";
            std::cout << join_csv({std::to_string(g), values_csv(a.values()),
                                   std::to_string(closed.codim), closed.coeff.str(),
                                   pfaff.coeff.str(), bool_str(agree)})
                      << "\n";
            break;
    }
    return agree ? 0 : 1;
}

/* -------------------------------------------------------------- degree -- */

int cmd_degree(const CliConfig& cfg, int g, const std::string& a_csv) {
    VanishingSequence a = VanishingSequence::parse(a_csv);
    long b = prymbn::beta(g, a);
    Int degree = prymbn::degree_B(g, a).to_integer();
    bool finite_count = (b == 0);
    switch (cfg.format) {
        case Format::text:
            std::cout << "degree = " << degree.get_str() << "\n";
            if (finite_count) std::cout << "beta = 0: finite point count\n";
            break;
        case Format::json_fmt:
            emit_json({{"g", g},
                       {"a", a.values()},
                       {"beta", b},
                       {"degree", degree.get_str()},
                       {"finite_point_count", finite_count}});
            break;
        case Format::csv:
            std::cout << "g,a,beta,degree,finite_point_count\n";
            std::cout << join_csv({std::to_string(g), values_csv(a.values()), std::to_string(b),
                                   degree.get_str(), bool_str(finite_count)})
                      << "\n";
            break;
    }
    return 0;
}

/* ------------------------------------------------------------ exponent -- */

int cmd_exponent(const CliConfig& cfg, int g, const std::string& a_csv) {
    VanishingSequence a = VanishingSequence::parse(a_csv);
    Int e = prymbn::prym_tyurin_exponent(g, a);
    switch (cfg.format) {
        case Format::text:
            std::cout << "exponent = " << e.get_str() << "\n";
            break;
        case Format::json_fmt:
            emit_json({{"g", g}, {"a", a.values()}, {"exponent", e.get_str()}});
            break;
        case Format::csv:
            std::cout << "g,a,exponent\n";
            std::cout << join_csv({std::to_string(g), values_csv(a.values()), e.get_str()})
                      << "\n";
            break;
    }
    return 0;
}

/* ------------------------------------------------------------------ na -- */

int cmd_na(const CliConfig& cfg, const std::string& a_csv, const std::string& method,
           CountCache* cache) {
    VanishingSequence a = VanishingSequence::parse(a_csv);
    std::optional<Int> formula, brute;
    if (method == "formula" || method == "both") formula = prymbn::n_a_formula(a);
    if (method == "brute" || method == "both") {
        Int shape_count = prymbn::cached_count_sst_bruteforce(a.shape(), cfg.bound, cache);
        brute = prymbn::int_pow2(static_cast<unsigned long>(a.weight() - a.positive_count())) *
                shape_count;
    }
    if (method != "both") {
        Int value = formula ? *formula : *brute;
        switch (cfg.format) {
            case Format::text:
                std::cout << "n_a = " << value.get_str() << "\n";
                break;
            case Format::json_fmt:
                emit_json({{"a", a.values()}, {"method", method}, {"n_a", value.get_str()}});
                break;
            case Format::csv:
                std::cout << "a,weight,n_a\n";
                std::cout << join_csv({values_csv(a.values()), std::to_string(a.weight()),
                                       value.get_str()})
                          << "\n";
                break;
        }
        return 0;
    }
    bool agree = *formula == *brute;
    switch (cfg.format) {
        case Format::text:
            std::cout << "n_a (formula)     = " << formula->get_str() << "\n";
            std::cout << "n_a (brute force) = " << brute->get_str() << "\n";
            break;
        case Format::json_fmt:
            emit_json({{"a", a.values()},
                       {"formula", formula->get_str()},
                       {"brute_force", brute->get_str()},
                       {"agree", agree}});
            break;
        case Format::csv:
            std::cout << "a,weight,n_a_formula,n_a_bruteforce,agree\n";
            std::cout << join_csv({values_csv(a.values()), std::to_string(a.weight()),
                                   formula->get_str(), brute->get_str(), bool_str(agree)})
                      << "\n";
            break;
    }
    return agree ? 0 : 1;
}

/* ------------------------------------------------------------ tableaux -- */

int cmd_tableaux(const CliConfig& cfg, const std::string& shape_csv, const std::string& action,
                 CountCache* cache) {
    StrictPartition shape = StrictPartition::parse(shape_csv);
    if (action == "count") {
        Int formula = prymbn::count_sst_formula(shape);
        Int brute = prymbn::cached_count_sst_bruteforce(shape, cfg.bound, cache);
        bool agree = formula == brute;
        switch (cfg.format) {
            case Format::text:
                std::cout << "count (formula)     = " << formula.get_str() << "\n";
                std::cout << "count (brute force) = " << brute.get_str() << "\n";
                break;
            case Format::json_fmt:
                emit_json({{"shape", shape.parts()},
                           {"formula", formula.get_str()},
                           {"brute_force", brute.get_str()},
                           {"agree", agree}});
                break;
            case Format::csv:
                std::cout << "shape,cells,formula,brute_force,agree\n";
                std::cout << join_csv({shape.str(), std::to_string(shape.weight()),
                                       formula.get_str(), brute.get_str(), bool_str(agree)})
                          << "\n";
                break;
        }
        return agree ? 0 : 1;
    }

    auto all = prymbn::enumerate_sst(shape, cfg.bound);
    if (action == "enumerate") {
        switch (cfg.format) {
            case Format::text:
                for (const auto& t : all) std::cout << t.str() << "\n";
                break;
            case Format::json_fmt: {
                json arr = json::array();
                for (const auto& t : all) arr.push_back(t.to_json());
                emit_json({{"shape", shape.parts()}, {"count", all.size()}, {"tableaux", arr}});
                break;
            }
            case Format::csv:
                std::cout << "index,tableau\n";
                for (size_t i = 0; i < all.size(); ++i) {
                    std::cout << join_csv({std::to_string(i + 1), all[i].str()}) << "\n";
                }
                break;
        }
        return 0;
    }

    // action == "render"
    switch (cfg.format) {
        case Format::text:
            for (size_t i = 0; i < all.size(); ++i) {
                if (i > 0) std::cout << "\n";
                std::cout << prymbn::render_tableau(all[i]) << "\n";
            }
            break;
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& t : all) {
                json jt = t.to_json();
                jt["render"] = prymbn::render_tableau(t);
                arr.push_back(jt);
            }
            emit_json({{"shape", shape.parts()}, {"count", all.size()}, {"tableaux", arr}});
            break;
        }
        case Format::csv:
            std::cout << "index,tableau\n";
            for (size_t i = 0; i < all.size(); ++i) {
                std::cout << join_csv({std::to_string(i + 1), all[i].str()}) << "\n";
            }
            break;
    }
    return 0;
}

/* -------------------------------------------------------------- verify -- */

std::string row_failure_tags(const prymbn::SequenceCheck& row) {
    std::string tags;
    auto add = [&tags](const char* tag) {
        if (!tags.empty()) tags += " ";
        tags += tag;
    };
    if (!row.degree_eq_na) add("degree!=n_a");
    if (!row.closed_eq_pfaffian) add("closed!=pfaffian");
    if (!row.sst_formula_eq_bruteforce) add("sst_formula!=bruteforce");
    return tags;
}

int cmd_verify(const CliConfig& cfg, int max_weight, bool trust_cache, bool inject_fault,
               CountCache* cache) {
    prymbn::SweepOptions opts;
    opts.bound = cfg.bound;
    opts.policy = cfg.serial ? prymbn::ExecutionPolicy::serial : prymbn::ExecutionPolicy::parallel;
    opts.cache = cache;
    opts.trust_cache = trust_cache;
    opts.inject_fault = inject_fault;
    prymbn::VerificationReport report = prymbn::verify_identities(max_weight, opts);

    switch (cfg.format) {
        case Format::text:
            for (const auto& row : report.rows) {
                VanishingSequence a(row.a);
                std::cout << (row.ok() ? "OK   " : "FAIL ") << "a=" << a.str()
                          << " weight=" << row.weight << " g=" << row.genus
                          << " degree=" << row.degree.get_str() << " n_a=" << row.n_a.get_str();
                if (!row.ok()) std::cout << " [" << row_failure_tags(row) << "]";
                std::cout << "\n";
            }
            if (report.all_ok()) {
                std::cout << "checked " << report.checked() << " sequences up to weight "
                          << max_weight << ": all identities hold\n";
            } else {
                std::cout << "checked " << report.checked() << " sequences up to weight "
                          << max_weight << ": " << report.failures().size() << " FAILURES\n";
            }
            break;
        case Format::json_fmt:
            emit_json(report.to_json());
            break;
        case Format::csv:
            std::cout << "a,weight,g,degree,n_a,degree_eq_na,closed_eq_pfaffian,"
                         "sst_formula_eq_bruteforce\n";
            for (const auto& row : report.rows) {
                std::cout << join_csv({values_csv(row.a), std::to_string(row.weight),
                                       std::to_string(row.genus), row.degree.get_str(),
                                       row.n_a.get_str(), bool_str(row.degree_eq_na),
                                       bool_str(row.closed_eq_pfaffian),
                                       bool_str(row.sst_formula_eq_bruteforce)})
                          << "\n";
            }
            break;
    }
    return report.all_ok() ? 0 : 1;
}

/* --------------------------------------------------------------- table -- */

int cmd_table(const CliConfig& cfg, const std::string& g_range_s,
              const std::string& weight_range_s) {
    Range g_range = parse_range(g_range_s, "--g");
    Range weight_range = parse_range(weight_range_s, "--weight");
    if (!g_range.empty() && g_range.lo < 2) {
        throw std::invalid_argument("--g: genus must be >= 2");
    }
    if (!weight_range.empty() && weight_range.lo < 0) {
        throw std::invalid_argument("--weight: weights must be >= 0");
    }

    struct Row {
        int g;
        std::vector<int> a;
        long beta;
        int ell;
        long weight;
        Rational coeff;
        Int degree;
        Int n_a;
        bool agree;
    };
    std::vector<Row> rows;
    if (!g_range.empty() && !weight_range.empty()) {
        // Row order: g ascending, then weight ascending, then lexicographic a.
        auto seqs = prymbn::enumerate_vanishing_sequences(weight_range.hi);
        for (int g = g_range.lo; g <= g_range.hi; ++g) {
            for (const auto& values : seqs) {
                VanishingSequence a(values);
                if (a.weight() < weight_range.lo) continue;
                PrymClass closed = prymbn::class_B_closed(g, a);
                PrymClass pfaff = prymbn::class_B_pfaffian(g, a);
                rows.push_back({g, values, prymbn::beta(g, a), a.positive_count(), a.weight(),
                                closed.coeff, prymbn::degree_B(g, a).to_integer(),
                                prymbn::n_a_formula(a), closed == pfaff});
            }
        }
    }

    const std::string header = "g,a,beta,ell,weight,coeff,degree,n_a,agree";
    switch (cfg.format) {
        case Format::text:
        case Format::csv:
            std::cout << header << "\n";
            for (const auto& row : rows) {
                std::cout << join_csv({std::to_string(row.g), values_csv(row.a),
                                       std::to_string(row.beta), std::to_string(row.ell),
                                       std::to_string(row.weight), row.coeff.str(),
                                       row.degree.get_str(), row.n_a.get_str(),
                                       bool_str(row.agree)})
                          << "\n";
            }
            break;
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back({{"g", row.g},
                               {"a", row.a},
                               {"beta", row.beta},
                               {"ell", row.ell},
                               {"weight", row.weight},
                               {"coeff", row.coeff.str()},
                               {"degree", row.degree.get_str()},
                               {"n_a", row.n_a.get_str()},
                               {"agree", row.agree}});
            }
            emit_json(arr);
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prymbn: exact invariants of pointed Prym-Brill-Noether varieties"};
    app.set_version_flag("--version", std::string("prymbn ") + prymbn::kVersion);
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format_s = "text";
    std::string config_path;
    app.add_option("--format", format_s, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--bound", cfg.bound,
                   "Cell bound for brute-force tableau enumeration (default 16)");
    app.add_flag("--cache,!--no-cache", cfg.cache_enabled,
                 "Enable the on-disk cache of brute-force tableau counts");
    app.add_option("--cache-path", cfg.cache_path,
                   "Cache file path (default: $PRYMBN_CACHE_DIR or the user data directory)");
    app.add_flag("--serial", cfg.serial, "Force the serial sweep kernel (default: OpenMP)");
    app.add_option("--config", config_path,
                   "JSON config file: {\"format\", \"enumeration_bound\", "
                   "\"cache\": {\"enabled\", \"path\"}}");

    int g = 0;
    std::string a_csv, shape_csv, method = "both", na_method = "formula", action;
    int max_weight = 0;
    bool trust_cache = false, inject_fault = false;
    std::string g_range = "2..6", weight_range = "0..6";

    CLI::App* c_beta = app.add_subcommand("beta", "Expected dimension and emptiness verdict");
    c_beta->add_option("-g", g, "Genus (>= 2)")->required();
    c_beta->add_option("-a", a_csv, "Vanishing sequence, ascending (e.g. 0,1,3)")->required();

    CLI::App* c_class = app.add_subcommand("class", "Degeneracy-locus class of the variety");
    c_class->add_option("-g", g, "Genus (>= 2)")->required();
    c_class->add_option("-a", a_csv, "Vanishing sequence, ascending")->required();
    c_class->add_option("--method", method, "closed, pfaffian or both (default both)")
        ->check(CLI::IsMember({"closed", "pfaffian", "both"}));

    CLI::App* c_degree = app.add_subcommand("degree", "Degree of the class (point count at beta = 0)");
    c_degree->add_option("-g", g, "Genus (>= 2)")->required();
    c_degree->add_option("-a", a_csv, "Vanishing sequence, ascending")->required();

    CLI::App* c_exp = app.add_subcommand("exponent", "Prym-Tyurin exponent (requires beta = 1)");
    c_exp->add_option("-g", g, "Genus (>= 2)")->required();
    c_exp->add_option("-a", a_csv, "Vanishing sequence, ascending")->required();

    CLI::App* c_na = app.add_subcommand("na", "Tableau count n_a");
    c_na->add_option("-a", a_csv, "Vanishing sequence, ascending")->required();
    c_na->add_option("--method", na_method, "formula, brute or both (default formula)")
        ->check(CLI::IsMember({"formula", "brute", "both"}));

    CLI::App* c_tab = app.add_subcommand("tableaux", "Standard shifted tableaux of a shape");
    c_tab->add_option("-s", shape_csv, "Shape, descending (e.g. 4,2,1)")->required();
    c_tab->add_option("action", action, "count, enumerate or render")
        ->required()
        ->check(CLI::IsMember({"count", "enumerate", "render"}));

    CLI::App* c_verify = app.add_subcommand("verify", "Exhaustive identity sweep");
    c_verify->add_option("--max-weight", max_weight, "Check every sequence with |a| <= W")
        ->required();
    c_verify->add_flag("--trust-cache", trust_cache,
                       "Serve brute-force counts from the cache instead of recomputing");
#ifdef PRYMBN_FAULT_INJECTION
    c_verify->add_flag("--inject-fault", inject_fault,
                       "Perturb one side of the degree identity (test builds only)");
#endif

    CLI::App* c_table = app.add_subcommand("table", "Batch table of invariants over ranges");
    c_table->add_option("--g", g_range, "Genus range A..B (default 2..6)");
    c_table->add_option("--weight", weight_range, "Weight range A..B (default 0..6)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // Precedence: defaults, then config file, then explicit flags.
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot read config file " + config_path);
            json jc = json::parse(in);
            if (jc.contains("format") && app.count("--format") == 0) {
                format_s = jc["format"].get<std::string>();
                if (format_s != "text" && format_s != "json" && format_s != "csv") {
                    throw std::invalid_argument("config: bad format \"" + format_s + "\"");
                }
            }
            if (jc.contains("enumeration_bound") && app.count("--bound") == 0) {
                cfg.bound = jc["enumeration_bound"].get<int>();
            }
            if (jc.contains("cache")) {
                const json& c = jc["cache"];
                if (c.contains("enabled") && app.count("--cache") == 0) {
                    cfg.cache_enabled = c["enabled"].get<bool>();
                }
                if (c.contains("path") && app.count("--cache-path") == 0) {
                    cfg.cache_path = c["path"].get<std::string>();
                }
            }
        }
        cfg.format = format_s == "json" ? Format::json_fmt
                                        : (format_s == "csv" ? Format::csv : Format::text);
        if (cfg.bound < 1) throw std::invalid_argument("--bound must be >= 1");

        std::unique_ptr<CountCache> cache = open_cache(cfg);

        if (c_beta->parsed()) return cmd_beta(cfg, g, a_csv);
        if (c_class->parsed()) return cmd_class(cfg, g, a_csv, method);
        if (c_degree->parsed()) return cmd_degree(cfg, g, a_csv);
        if (c_exp->parsed()) return cmd_exponent(cfg, g, a_csv);
        if (c_na->parsed()) return cmd_na(cfg, a_csv, na_method, cache.get());
        if (c_tab->parsed()) return cmd_tableaux(cfg, shape_csv, action, cache.get());
        if (c_verify->parsed())
            return cmd_verify(cfg, max_weight, trust_cache, inject_fault, cache.get());
        if (c_table->parsed()) return cmd_table(cfg, g_range, weight_range);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
