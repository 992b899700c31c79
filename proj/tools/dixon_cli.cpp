// Command-line front end. Every command prints a JSON report (or a flattened
// text/csv view of it) and gates on its exit code:
// 0 pass, 1 verification failure, 2 usage, 3 budget, 4 I/O.

#include "dixon/dixon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace dixon;

namespace {

constexpr const char* tool_version = "1.0.0";

enum Exit : int { pass = 0, failure = 1, usage = 2, budget = 3, io = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int p = 3;
    int n = 0;
    bool enumerate = false;
    std::string order = "O";
    std::string witness_mode = "constructive";
    std::string method = "both";
    std::string which;
    std::string format = "json";
    std::string out;
    int truncate = 6;
    int r = 1;
    int k = -1;
    int n_max = 0;
    int max = 8;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool check_alignment = false;
    unsigned threads = 1;
};

std::string str(const Integer& v) { return to_string(v); }

json strings(const std::vector<Integer>& values)
{
    json out = json::array();
    for (const auto& v : values)
        out.push_back(str(v));
    return out;
}

json vertex_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

json params_json(const Config& c) { return json{{"p", c.p}, {"n", c.n}}; }

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

std::string render(const json& report, const std::string& format)
{
    if (format == "json")
        return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string text = format == "csv" ? "key,value\n" : "";
    for (const auto& [key, value] : rows)
        text += format == "csv" ? key + "," + value + "\n" : key + " = " + value + "\n";
    return text;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open " + path + " for writing");
    file << text;
    if (!file.flush())
        throw IoError("write to " + path + " failed");
}

/// Prints the report (to --out when the command has no other payload).
int emit(const Config& c, json report, bool ok, bool report_to_out = true)
{
    report["pass"] = ok;
    write_text(report_to_out ? c.out : std::string(), render(report, c.format));
    return ok ? pass : failure;
}

json header(const std::string& command)
{
    return json{{"command", command}, {"version", tool_version}};
}

// ---------------------------------------------------------------------------

int cmd_fvector(const Config& c)
{
    const auto params = make_complex(c.p, c.n);
    const std::uint64_t limit = c.budget ? c.budget : default_face_budget;
    json report = header("fvector");
    report["params"] = params_json(c);
    report["constants"] = {{"face_budget", std::to_string(limit)}};
    const FVector formula = f_vector_formula(params);
    report["f_vector"] = strings(formula.counts);
    const Integer euler = reduced_euler_characteristic(formula);
    const Integer minus_sum = -power_sum_lhs(c.n, static_cast<unsigned>(c.p));
    report["reduced_euler_characteristic"] = str(euler);
    report["minus_power_sum"] = str(minus_sum);
    bool ok = euler == minus_sum;
    json checks = {{"euler_equals_minus_power_sum", euler == minus_sum}};
    if (c.enumerate) {
        const FVector counted = f_vector_enumerated(params, limit);
        report["f_vector_enumerated"] = strings(counted.counts);
        checks["enumeration_matches_formula"] = counted == formula;
        ok = ok && counted == formula;
    }
    report["checks"] = checks;
    return emit(c, report, ok);
}

std::vector<Face> facets_in_order(const Config& c, const ComplexParams& params)
{
    auto order = enumerate_facets(params);
    if (c.order == "reversed")
        std::reverse(order.begin(), order.end());
    return order;
}

WitnessMode parse_mode(const std::string& s)
{
    if (s == "exhaustive")
        return WitnessMode::exhaustive;
    if (s == "both")
        return WitnessMode::both;
    return WitnessMode::constructive;
}

json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    json out = json::array();
    for (auto [i, k] : pairs)
        out.push_back({{"i", i}, {"k", k}});
    return out;
}

constexpr std::uint64_t default_pair_budget = 200'000'000;

int cmd_shelling(const Config& c)
{
    const auto params = make_complex(c.p, c.n);
    const std::uint64_t limit = c.budget ? c.budget : default_pair_budget;
    const auto order = facets_in_order(c, params);
    const std::uint64_t t = order.size();
    if (t * (t - 1) / 2 > limit)
        throw ResourceError(std::to_string(t) + " facets give " + std::to_string(t * (t - 1) / 2) +
                            " pairs, above the pair budget " + std::to_string(limit));
    const auto rep = verify_shelling(params, order, parse_mode(c.witness_mode), c.threads);

    json report = header("shelling");
    report["params"] = params_json(c);
    report["constants"] = {{"pair_budget", std::to_string(limit)},
                           {"max_recorded_witnesses", ShellingReport::max_recorded_witnesses}};
    report["order"] = c.order;
    report["witness_mode"] = c.witness_mode;
    report["exploratory"] = c.p != 3;
    report["facet_count"] = rep.facet_count;
    report["total_pairs"] = std::to_string(rep.total_pairs);
    report["violation_count"] = rep.violations.size();
    report["violations"] = pairs_json(rep.violations);
    json witnesses = json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back({{"i", w.i}, {"k", w.k}, {"j", w.witness.j}, {"v", vertex_json(w.witness.v.coords)}});
    report["witnesses"] = witnesses;
    report["constructive_fallbacks"] = std::to_string(rep.constructive_fallbacks);
    report["fallback_pairs"] = pairs_json(rep.fallback_pairs);
    report["mode_disagreements"] = std::to_string(rep.mode_disagreements);
    report["is_shelling"] = rep.is_shelling();
    return emit(c, report, rep.is_shelling() && rep.mode_disagreements == 0);
}

int cmd_betti(const Config& c)
{
    const auto params = make_complex(c.p, c.n);
    const std::uint64_t limit = c.budget ? c.budget : default_matrix_budget;
    json report = header("betti");
    report["params"] = params_json(c);
    report["constants"] = {{"matrix_budget", std::to_string(limit)}};
    report["method"] = c.method;
    report["betti_first_dimension"] = -1;
    const Integer euler = reduced_euler_characteristic(f_vector_formula(params));
    report["reduced_euler_characteristic"] = str(euler);
    bool ok = true;
    std::optional<BettiVector> from_shelling, from_matrix;

    if (c.method == "shelling" || c.method == "both") {
        try {
            from_shelling = betti_from_shelling(params, c.threads);
            report["betti_shelling"] = strings(from_shelling->betti);
            report["alternating_sum_shelling"] = str(from_shelling->alternating_sum());
            ok = ok && from_shelling->alternating_sum() == euler;
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const ResourceError*>(&e))
                throw;
            report["shelling_error"] = e.what();
            ok = false;
        }
    }
    if (c.method == "matrix" || c.method == "both") {
        from_matrix = betti_numbers(params, limit);
        report["betti_matrix"] = strings(from_matrix->betti);
        report["alternating_sum_matrix"] = str(from_matrix->alternating_sum());
        report["euler_poincare"] = from_matrix->alternating_sum() == euler;
        ok = ok && from_matrix->alternating_sum() == euler;
        if (c.seed_given) {
            bool invariant = true;
            for (int k = 0; k <= c.n - 1; ++k) {
                const auto m = boundary_matrix(params, k, limit);
                invariant = invariant && rank(m) == rank(shuffled(m, c.seed + static_cast<std::uint64_t>(k)));
            }
            report["seed"] = std::to_string(c.seed);
            report["shuffle_invariant"] = invariant;
            ok = ok && invariant;
        }
    }
    if (from_shelling && from_matrix) {
        report["methods_agree"] = *from_shelling == *from_matrix;
        ok = ok && *from_shelling == *from_matrix;
    }
    return emit(c, report, ok);
}

int cmd_identity(const Config& c)
{
    json report = header("identity");
    report["identity"] = c.which;
    json rows = json::array();
    std::size_t passed = 0;
    auto add = [&](json row, const Integer& lhs, const Integer& rhs) {
        row["lhs"] = str(lhs);
        row["rhs"] = str(rhs);
        row["holds"] = lhs == rhs;
        passed += lhs == rhs;
        rows.push_back(std::move(row));
    };
    if (c.which == "3f2") {
        const int m = c.max;
        report["max"] = m;
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= m; ++b)
                for (int d = 0; d <= m; ++d)
                    add(json{{"n1", a}, {"n2", b}, {"n3", d}}, threeF2_lhs(a, b, d), threeF2_rhs(a, b, d));
    } else {
        const int n_max = c.n_max ? c.n_max : 40;
        report["n_max"] = n_max;
        for (int n = 1; n <= n_max; ++n) {
            if (c.which == "dixon")
                add(json{{"n", n}}, dixon_lhs(n), dixon_rhs(n));
            else
                add(json{{"n", n}}, power_sum_lhs(n, 2), aigner_rhs(n));
        }
    }
    report["passed"] = passed;
    report["total"] = rows.size();
    report["rows"] = rows;
    return emit(c, report, passed == rows.size());
}

int cmd_alignment(const Config& c)
{
    const int n_max = c.n_max ? c.n_max : 6;
    const auto oracle = alignment_oracle(n_max);
    json report = header("genfun-alignment");
    report["n_min"] = oracle.n_min;
    report["n_max"] = oracle.n_max;
    report["candidates"] = oracle.candidates;
    report["sign_convention"] = "(-1)^(shift-vector length - 1)";
    json rows = json::array();
    for (const auto& row : oracle.rows)
        rows.push_back({{"n", row.n},
                        {"signed_homology_count", str(row.signed_count)},
                        {"vertex_signed_homology_count", str(row.vertex_signed_count)},
                        {"xy_diagonal", strings(row.xy_diagonal)}});
    report["rows"] = rows;
    report["matching_offsets"] = oracle.matching;
    report["vertex_sign_matching_offsets"] = oracle.vertex_sign_matching;
    const auto delta = oracle.delta();
    report["delta"] = delta ? json(*delta) : json(nullptr);
    report["pinned_delta"] = pinned_alignment_offset;
    bool ok = delta && *delta == pinned_alignment_offset;
    json chain = json::array();
    for (int n = 1; n <= n_max; ++n) {
        const auto ch = dixon_chain(n);
        chain.push_back({{"n", n},
                         {"dixon_lhs", str(ch.lhs)},
                         {"minus_reduced_euler", str(ch.minus_euler)},
                         {"xy_coefficient", str(ch.xy_coefficient)},
                         {"inverse_det_A", str(ch.inverse_det_A)},
                         {"product_A", str(ch.product_A)},
                         {"inverse_det_B", str(ch.inverse_det_B)},
                         {"dixon_rhs", str(ch.rhs)},
                         {"holds", ch.holds()}});
        ok = ok && ch.holds();
    }
    report["chain"] = chain;
    return emit(c, report, ok);
}

int cmd_genfun(const Config& c)
{
    if (c.check_alignment)
        return cmd_alignment(c);
    if (c.which.empty())
        throw CLI::ValidationError("genfun", "name a series (P, g, XY) or pass --check-alignment");
    const int T = c.truncate;
    MSeries s(3, std::max(T, 0));
    if (c.which == "P")
        s = series_P(T);
    else if (c.which == "g")
        s = series_g_r(c.r, T);
    else
        s = series_XY(T);
    std::ostringstream dump;
    write_series(dump, s);
    if (c.out.empty()) {
        std::cout << dump.str();
        return pass;
    }
    write_text(c.out, dump.str());
    json report = header("genfun");
    report["series"] = c.which;
    report["truncation"] = T;
    if (c.which == "g")
        report["r"] = c.r;
    report["terms"] = s.term_count();
    report["file"] = c.out;
    return emit(c, report, true, false);
}

int cmd_export(const Config& c)
{
    const auto params = make_complex(c.p, c.n);
    std::ostringstream text;
    if (c.which == "facets") {
        write_facets(text, params, enumerate_facets(params));
    } else {
        if (c.k < 0)
            throw CLI::ValidationError("--k", "boundary export needs a dimension");
        write_triplets(text, boundary_matrix(params, c.k, c.budget ? c.budget : default_matrix_budget));
    }
    write_text(c.out, text.str());
    return pass;
}

// ---------------------------------------------------------------------------

void add_complex_options(CLI::App* app, Config& c, bool need_n = true)
{
    app->add_option("--p", c.p, "coordinates per vertex")->default_val(3);
    auto* n = app->add_option("--n", c.n, "coordinate range [n]");
    if (need_n)
        n->required();
}

void add_output_options(CLI::App* app, Config& c)
{
    app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "text", "csv"}));
    app->add_option("--out", c.out, "write to this file instead of stdout");
    app->add_option("--threads", c.threads, "worker cap; results do not depend on it")->check(CLI::Range(1u, 256u));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shellings of Delta(n) and Dixon's identity: verification pipelines"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    Config c;

    auto* fvector = app.add_subcommand("fvector", "face numbers and reduced Euler characteristic");
    add_complex_options(fvector, c);
    fvector->add_flag("--enumerate", c.enumerate, "also count faces one by one");
    fvector->add_option("--budget", c.budget, "maximum faces to enumerate");
    add_output_options(fvector, c);

    auto* shelling = app.add_subcommand("shelling", "check the facet order pair by pair");
    add_complex_options(shelling, c);
    shelling->add_option("--order", c.order, "facet order")->check(CLI::IsMember({"O", "reversed"}));
    shelling->add_option("--witness-mode", c.witness_mode, "how witnesses are found")
        ->check(CLI::IsMember({"constructive", "exhaustive", "both"}));
    shelling->add_option("--budget", c.budget, "maximum facet pairs");
    add_output_options(shelling, c);

    auto* betti = app.add_subcommand("betti", "Betti numbers from the shelling and from boundary ranks");
    add_complex_options(betti, c);
    betti->add_option("--method", c.method, "which computation")->check(CLI::IsMember({"shelling", "matrix", "both"}));
    betti->add_option("--budget", c.budget, "maximum rows*cols per boundary matrix");
    betti->add_option("--seed", c.seed, "also check rank invariance under a seeded relabelling");
    add_output_options(betti, c);

    auto* identity = app.add_subcommand("identity", "binomial sum identities");
    identity->add_option("which", c.which, "dixon, 3f2 or aigner")
        ->required()
        ->check(CLI::IsMember({"dixon", "3f2", "aigner"}));
    identity->add_option("--n-max", c.n_max, "largest n")->check(CLI::Range(1, 100000));
    identity->add_option("--max", c.max, "largest n1, n2, n3 for 3f2")->check(CLI::Range(0, 1000));
    add_output_options(identity, c);

    auto* genfun = app.add_subcommand("genfun", "generating-function dumps and the diagonal alignment");
    genfun->add_option("which", c.which, "P, g or XY")->check(CLI::IsMember({"P", "g", "XY"}));
    genfun->add_option("--truncate", c.truncate, "per-variable degree bound")->check(CLI::Range(0, 40));
    genfun->add_option("--r", c.r, "power of P for g")->check(CLI::Range(1, 20));
    genfun->add_flag("--check-alignment", c.check_alignment, "find the diagonal offset and follow it to the closed form");
    genfun->add_option("--n-max", c.n_max, "largest n for the alignment check")->check(CLI::Range(2, 8));
    add_output_options(genfun, c);

    auto* exporter = app.add_subcommand("export", "facet lists and boundary matrices as text");
    exporter->add_option("what", c.which, "facets or boundary")->required()->check(CLI::IsMember({"facets", "boundary"}));
    add_complex_options(exporter, c);
    exporter->add_option("--k", c.k, "boundary dimension");
    exporter->add_option("--budget", c.budget, "maximum rows*cols of the matrix");
    add_output_options(exporter, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? pass : usage;
    }
    if (betti->count("--seed"))
        c.seed_given = true;

    try {
        if (*fvector)
            return cmd_fvector(c);
        if (*shelling)
            return cmd_shelling(c);
        if (*betti)
            return cmd_betti(c);
        if (*identity)
            return cmd_identity(c);
        if (*genfun)
            return cmd_genfun(c);
        return cmd_export(c);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const std::bad_alloc&) {
        std::cerr << "budget exceeded: out of memory\n";
        return budget;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return io;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return failure;
    }
}
