// stampkit: exact solvers for the local postage-stamp problem N_h, the
// Frobenius number g, stabilization certificates, and the Frobenius -> LPSP
// reduction, with text/JSON/CSV output for batch experimentation.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stampkit/stampkit.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace stampkit;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_denoms(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        const std::string item = csv.substr(pos, comma - pos);
        std::int64_t value = 0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || item.empty()) {
            throw UsageError("cannot parse denomination '" + item + "' in '" + csv + "'");
        }
        out.push_back(value);
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return out;
}

std::int64_t table_cap_from_env() {
    const char* raw = std::getenv("STAMPKIT_MAX_TABLE");
    if (raw == nullptr) return lpsp::kDefaultTableCap;
    std::int64_t cap = 0;
    const auto* last = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, last, cap);
    if (ec != std::errc() || ptr != last || cap <= 0) {
        throw UsageError(std::string("STAMPKIT_MAX_TABLE must be a positive decimal integer, got '") +
                         raw + "'");
    }
    return cap;
}

json denoms_json(const Basis& basis) {
    return json(basis.denoms());
}

// ---------------------------------------------------------------------------
// nh

int run_nh(const Basis& basis, std::int64_t h, const std::string& format, std::int64_t cap) {
    const lpsp::LpspResult res = lpsp::compute_n_h(basis, h, cap);
    if (format == "json") {
        json j;
        j["denoms"] = denoms_json(basis);
        j["h"] = res.h;
        j["n_h"] = res.n_h;
        j["witness_below"] = {{"value", res.n_h - 1},
                              {"coeffs", res.witness_below.coeffs},
                              {"weight", res.witness_below.weight}};
        j["min_weight_at_n_h"] = res.min_weight_at_n_h;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "N_" << res.h << "(" << to_string(basis) << ") = " << res.n_h << '\n';
        std::cout << "witness below: " << (res.n_h - 1) << " = "
                  << to_string(res.witness_below, basis) << " (weight " << res.witness_below.weight
                  << " <= " << res.h << ")\n";
        std::cout << "min weight at " << res.n_h << ": " << res.min_weight_at_n_h << " > " << res.h
                  << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// frobenius

int run_frobenius(const Basis& basis, const std::string& method, const std::string& format,
                  std::int64_t cap) {
    const frobenius::FrobeniusResult res = method == "brute"
                                               ? frobenius::frobenius_brute_force(basis, cap)
                                               : frobenius::frobenius_residue_graph(basis);
    if (format == "json") {
        json j;
        j["denoms"] = denoms_json(basis);
        j["g"] = res.g;
        j["method"] = frobenius::to_string(res.method);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "g(" << to_string(basis) << ") = " << res.g << '\n';
        std::cout << "method: " << frobenius::to_string(res.method) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bounds / stabilize

int run_bounds(const Basis& basis, const std::string& format) {
    const selmer::SelmerBounds b = selmer::selmer_bounds(basis);
    if (format == "json") {
        json j;
        j["denoms"] = denoms_json(basis);
        j["h0"] = b.h0;
        j["h1"] = b.h1;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "h0 = " << b.h0 << '\n' << "h1 = " << b.h1 << '\n';
    }
    return 0;
}

std::string stabilized_formula(std::int64_t ak, std::int64_t c) {
    std::ostringstream out;
    out << ak << "*h";
    if (c < 0) {
        out << " + " << -c;
    } else if (c > 0) {
        out << " - " << c;
    }
    return out.str();
}

int run_stabilize(const Basis& basis, std::int64_t probes, const std::string& format,
                  std::int64_t cap) {
    const selmer::StabilizationCertificate cert = selmer::stabilization(basis, probes, cap);
    if (format == "json") {
        json j;
        j["denoms"] = denoms_json(basis);
        j["h0"] = cert.bounds.h0;
        j["h1"] = cert.bounds.h1;
        j["c"] = cert.c;
        j["complement"] = denoms_json(cert.complement);
        j["g_complement"] = cert.g_complement;
        j["h_checked"] = {cert.checked_h_range.first, cert.checked_h_range.second};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "h0 = " << cert.bounds.h0 << '\n';
        std::cout << "h1 = " << cert.bounds.h1 << '\n';
        std::cout << "c = " << cert.c << '\n';
        std::cout << "complement = " << to_string(cert.complement) << '\n';
        std::cout << "g(complement) = " << cert.g_complement << '\n';
        std::cout << "checked h in [" << cert.checked_h_range.first << ", "
                  << cert.checked_h_range.second << "]\n";
        std::cout << "N_h = " << stabilized_formula(basis.largest(), cert.c) << " for h >= "
                  << cert.bounds.h1 << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reduce

void print_reduction(const reduction::ReductionCertificate& cert, const std::string& format) {
    if (format == "json") {
        json j;
        j["b"] = denoms_json(cert.b);
        j["b_extended"] = denoms_json(cert.b_extended);
        j["lpsp_basis"] = denoms_json(cert.lpsp_basis);
        j["h"] = cert.h;
        j["g"] = cert.predicted_g.has_value() ? json(*cert.predicted_g) : json(nullptr);
        j["verified"] = cert.verified;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "b = " << to_string(cert.b) << '\n';
        std::cout << "b_extended = " << to_string(cert.b_extended) << '\n';
        std::cout << "lpsp_basis = " << to_string(cert.lpsp_basis) << '\n';
        std::cout << "h = " << cert.h << '\n';
        if (cert.verified) {
            const std::int64_t n_h = cert.h * cert.lpsp_basis.largest() - *cert.predicted_g;
            std::cout << "g = " << *cert.predicted_g << '\n';
            std::cout << "identity: " << cert.h << "*" << cert.lpsp_basis.largest() << " - N_"
                      << cert.h << " = " << cert.h * cert.lpsp_basis.largest() << " - " << n_h
                      << " = " << *cert.predicted_g << '\n';
            std::cout << "verified\n";
        } else {
            std::cout << "unverified\n";
        }
    }
}

int run_reduce(const Basis& b, bool verify, const std::string& format, std::int64_t cap) {
    reduction::ReductionCertificate cert = reduction::build_reduction(b);
    if (verify) {
        try {
            cert = reduction::verify_reduction(std::move(cert), cap);
        } catch (const ResourceLimitError& e) {
            print_reduction(cert, format);
            std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
            return 3;
        }
    }
    print_reduction(cert, format);
    return 0;
}

// ---------------------------------------------------------------------------
// table

int run_table(const Basis& basis, std::int64_t h_max, const std::string& format,
              std::int64_t cap) {
    const std::vector<lpsp::NhRow> rows = lpsp::n_h_table(basis, h_max, cap);
    if (format == "json") {
        json j;
        j["denoms"] = denoms_json(basis);
        j["rows"] = json::array();
        for (const auto& row : rows) {
            j["rows"].push_back({{"h", row.h},
                                 {"n_h", row.n_h},
                                 {"delta", row.delta ? json(*row.delta) : json(nullptr)}});
        }
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "h,n_h,delta\n";
        for (const auto& row : rows) {
            std::cout << row.h << ',' << row.n_h << ',';
            if (row.delta) std::cout << *row.delta;
            std::cout << '\n';
        }
    } else {
        std::cout << "h\tn_h\tdelta\n";
        for (const auto& row : rows) {
            std::cout << row.h << '\t' << row.n_h << '\t';
            if (row.delta) {
                std::cout << *row.delta;
            } else {
                std::cout << '-';
            }
            std::cout << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check

// Deterministic sampling helpers: identical flags and seed must produce
// byte-identical output, so everything funnels through one engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t reject_from =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = eng_();
        while (x >= reject_from) x = eng_();
        return lo + static_cast<std::int64_t>(x % span);
    }

private:
    std::mt19937_64 eng_;
};

std::vector<std::int64_t> sample_distinct(Rng& rng, std::int64_t lo, std::int64_t hi, int count) {
    std::set<std::int64_t> picked;
    while (static_cast<int>(picked.size()) < count) {
        picked.insert(rng.range(lo, hi));
    }
    return {picked.begin(), picked.end()};
}

Basis random_lpsp_basis(Rng& rng) {
    const int k = static_cast<int>(rng.range(2, 4));
    std::vector<std::int64_t> denoms = sample_distinct(rng, 2, 20, k - 1);
    denoms.insert(denoms.begin(), 1);
    return validate_basis(std::move(denoms));
}

Basis random_reduction_input(Rng& rng) {
    for (;;) {
        const int k = static_cast<int>(rng.range(2, 3));
        std::vector<std::int64_t> denoms = sample_distinct(rng, 2, 12, k);
        std::int64_t g = 0;
        for (std::int64_t d : denoms) g = std::gcd(g, d);
        if (g == 1) return validate_basis(std::move(denoms));
    }
}

struct CheckSettings {
    std::int64_t i_max = 4;
    std::int64_t probes = 4;
    std::int64_t cap = lpsp::kDefaultTableCap;
};

struct CheckOutcome {
    json record = json::object();
    std::string text;
    bool pass = true;
};

void check_lpsp_part(const Basis& basis, std::optional<std::int64_t> h,
                     const CheckSettings& settings, CheckOutcome& out) {
    out.record["lpsp_denoms"] = denoms_json(basis);
    std::ostringstream line;
    line << "lpsp=(" << to_string(basis) << ")";
    if (basis.size() >= 2) {
        const selmer::Lemma1Report report = selmer::check_lemma1(basis, settings.i_max, settings.cap);
        const selmer::StabilizationCertificate cert =
            selmer::stabilization(basis, settings.probes, settings.cap);
        out.record["lemma1_pass"] = report.all_pass;
        out.record["c"] = cert.c;
        out.pass = out.pass && report.all_pass;
        line << " lemma1=" << (report.all_pass ? "pass" : "FAIL") << " c=" << cert.c;
    }
    if (h) {
        const std::int64_t n_h = lpsp::compute_n_h(basis, *h, settings.cap).n_h;
        out.record["h"] = *h;
        out.record["n_h"] = n_h;
        line << " N_" << *h << "=" << n_h;
    }
    out.text += line.str();
}

void check_frobenius_part(const Basis& basis, const CheckSettings& settings, CheckOutcome& out) {
    std::ostringstream line;
    const std::int64_t g_graph = frobenius::frobenius_residue_graph(basis).g;
    const std::int64_t g_brute = frobenius::frobenius_brute_force(basis, settings.cap).g;
    const bool agree = g_graph == g_brute;
    out.record["b"] = denoms_json(basis);
    out.record["g"] = g_graph;
    out.record["methods_agree"] = agree;
    out.pass = out.pass && agree;
    line << "b=(" << to_string(basis) << ") g=" << g_graph
         << " agree=" << (agree ? "ok" : "FAIL");
    if (basis.smallest() >= 2) {
        const auto cert =
            reduction::verify_reduction(reduction::build_reduction(basis), settings.cap);
        out.record["reduction_h"] = cert.h;
        out.record["verified"] = cert.verified;
        out.pass = out.pass && cert.verified && *cert.predicted_g == g_graph;
        line << " reduce_h=" << cert.h << " identity=" << (cert.verified ? "ok" : "FAIL");
    }
    if (!out.text.empty()) out.text += " ";
    out.text += line.str();
}

CheckOutcome run_random_instance(Rng& rng, const CheckSettings& settings) {
    CheckOutcome out;
    check_lpsp_part(random_lpsp_basis(rng), std::nullopt, settings, out);
    out.text += " ";
    check_frobenius_part(random_reduction_input(rng), settings, out);
    return out;
}

CheckOutcome run_file_instance(const json& record, const CheckSettings& settings) {
    CheckOutcome out;
    if (!record.is_object() || !record.contains("denoms") || !record["denoms"].is_array()) {
        throw UsageError("instance record must be an object with a 'denoms' array");
    }
    if (record.contains("label")) {
        out.record["label"] = record["label"];
        out.text = record["label"].get<std::string>() + ": ";
    }
    std::optional<std::int64_t> h;
    if (record.contains("h") && !record["h"].is_null()) {
        h = record["h"].get<std::int64_t>();
    }
    try {
        const Basis basis = validate_basis(record["denoms"].get<std::vector<std::int64_t>>());
        if (basis.contains_one()) {
            check_lpsp_part(basis, h, settings, out);
        } else {
            check_frobenius_part(basis, settings, out);
        }
    } catch (const Error& e) {
        out.record["error"] = e.code();
        out.pass = false;
        out.text += "error=" + e.code();
    }
    return out;
}

int run_check(const std::string& instances_path, bool random_mode, std::int64_t count,
              std::uint64_t seed, const CheckSettings& settings, const std::string& format) {
    std::vector<CheckOutcome> outcomes;
    if (random_mode) {
        Rng rng(seed);
        for (std::int64_t i = 0; i < count; ++i) {
            outcomes.push_back(run_random_instance(rng, settings));
        }
    } else {
        std::ifstream in(instances_path);
        if (!in) {
            throw UsageError("cannot open instances file '" + instances_path + "'");
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json record;
            try {
                record = json::parse(line);
            } catch (const json::parse_error& e) {
                throw UsageError(std::string("bad instance line: ") + e.what());
            }
            outcomes.push_back(run_file_instance(record, settings));
        }
    }

    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        if (o.pass) ++passed;
    }
    const std::size_t failed = outcomes.size() - passed;

    if (format == "json") {
        json doc;
        doc["instances"] = json::array();
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            json rec = outcomes[i].record;
            rec["instance"] = i + 1;
            rec["pass"] = outcomes[i].pass;
            doc["instances"].push_back(std::move(rec));
        }
        doc["summary"] = {{"checked", outcomes.size()}, {"passed", passed}, {"failed", failed}};
        std::cout << doc.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            std::cout << '[' << (i + 1) << '/' << outcomes.size() << "] " << outcomes[i].text
                      << " => " << (outcomes[i].pass ? "pass" : "FAIL") << '\n';
        }
        std::cout << "checked " << outcomes.size() << ", passed " << passed << ", failed "
                  << failed << '\n';
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for the local postage-stamp problem and the Frobenius number"};
    app.require_subcommand(1);

    std::string denoms_csv;
    std::string format = "text";
    std::string method = "residue";
    std::string instances_path;
    std::int64_t h = 0;
    std::int64_t h_max = 0;
    std::int64_t probes = 4;
    std::int64_t i_max = 4;
    std::int64_t count = 10;
    std::uint64_t seed = 0;
    bool verify = false;
    bool random_mode = false;

    auto* nh_cmd = app.add_subcommand("nh", "Compute N_h(a_1..a_k), the smallest amount not "
                                            "coverable with at most h stamps");
    nh_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations, strictly increasing")
        ->required();
    nh_cmd->add_option("--h", h, "Stamp budget h >= 1")->required()->check(CLI::PositiveNumber);
    nh_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* frob_cmd = app.add_subcommand("frobenius", "Compute the Frobenius number g(a_1..a_k)");
    frob_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations")->required();
    frob_cmd->add_option("--method", method, "residue (default) or brute")
        ->check(CLI::IsMember({"residue", "brute"}));
    frob_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* bounds_cmd = app.add_subcommand("bounds", "Compute the stabilization thresholds h0, h1");
    bounds_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations")->required();
    bounds_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* stab_cmd = app.add_subcommand(
        "stabilize", "Certify h*a_k - N_h constant beyond h1 and equal to the complement's g");
    stab_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations")->required();
    stab_cmd->add_option("--probes", probes, "Extra h values beyond h1 to probe (default 4)")
        ->check(CLI::NonNegativeNumber);
    stab_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* reduce_cmd = app.add_subcommand(
        "reduce", "Map a Frobenius instance to an LPSP instance (g = h*a_max - N_h)");
    reduce_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations, smallest >= 2")
        ->required();
    reduce_cmd->add_flag("--verify", verify, "Run the exact identity check");
    reduce_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* table_cmd = app.add_subcommand("table", "Tabulate h, N_h, delta for h = 1..h-max");
    table_cmd->add_option("--denoms", denoms_csv, "Comma-separated denominations")->required();
    table_cmd->add_option("--h-max", h_max, "Largest h")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* check_cmd = app.add_subcommand(
        "check", "Batch-verify lemma checks and reduction identities over instances");
    check_cmd->add_option("--instances", instances_path,
                          "JSON-lines file of {\"denoms\":[...], \"h\":..., \"label\":...}");
    check_cmd->add_flag("--random", random_mode, "Generate seeded random instances instead");
    check_cmd->add_option("--count", count, "Number of random instances (default 10)")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--seed", seed, "Random seed (default 0)");
    check_cmd->add_option("--i-max", i_max, "Lemma probe width (default 4)")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--probes", probes, "Stabilization probe width (default 4)")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const std::int64_t cap = table_cap_from_env();
        if (app.got_subcommand(nh_cmd)) {
            return run_nh(validate_basis(parse_denoms(denoms_csv)), h, format, cap);
        }
        if (app.got_subcommand(frob_cmd)) {
            return run_frobenius(validate_basis(parse_denoms(denoms_csv)), method, format, cap);
        }
        if (app.got_subcommand(bounds_cmd)) {
            return run_bounds(validate_basis(parse_denoms(denoms_csv)), format);
        }
        if (app.got_subcommand(stab_cmd)) {
            return run_stabilize(validate_basis(parse_denoms(denoms_csv)), probes, format, cap);
        }
        if (app.got_subcommand(reduce_cmd)) {
            return run_reduce(validate_basis(parse_denoms(denoms_csv)), verify, format, cap);
        }
        if (app.got_subcommand(table_cmd)) {
            return run_table(validate_basis(parse_denoms(denoms_csv)), h_max, format, cap);
        }
        if (app.got_subcommand(check_cmd)) {
            if (random_mode == instances_path.empty() && !random_mode) {
                throw UsageError("check needs exactly one of --instances or --random");
            }
            if (random_mode && !instances_path.empty()) {
                throw UsageError("check needs exactly one of --instances or --random");
            }
            CheckSettings settings{i_max, probes, cap};
            return run_check(instances_path, random_mode, count, seed, settings, format);
        }
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
