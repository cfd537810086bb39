#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smallcover/smallcover.hpp"

namespace sc = smallcover;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kPropertyViolation = 2;
constexpr int kInternalError = 3;

const std::vector<long long> kTable1Rational = {1, 1, 31, 23, 43, 48, 7, 9, 0};
const std::vector<long long> kTable1Mod2 = {1, 10, 40, 81, 101, 81, 40, 10, 1};

std::vector<int> parse_condition_list(const std::string& spec) {
    if (spec == "all") return {};
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw sc::InputError("bad condition list entry '" + item + "'");
        }
        if (v < 1 || v > 7) throw sc::InputError("conditions are numbered 1..7");
        out.push_back(v);
    }
    if (out.empty()) throw sc::InputError("empty condition list");
    return out;
}

std::string row(const std::vector<long long>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_analyze(const std::string& path, const std::string& format, const std::string& conditions, bool timings) {
    const auto selected = parse_condition_list(conditions);
    const auto doc = sc::read_instance_file(path);
    const auto start = std::chrono::steady_clock::now();
    const auto analysis = sc::analyze(doc.name, doc.pair());
    auto j = sc::report_json(analysis, selected);
    if (timings)
        j["timings_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << sc::render_table(j);
    return analysis.report.verdict() == "disagreement" ? kPropertyViolation : kOk;
}

int cmd_table1() {
    const auto example = sc::bier_example();
    const auto analysis = sc::analyze("bier-example", example.instance);
    const auto& b = analysis.report.betti;
    const bool rational_ok = b.rational == kTable1Rational;
    const bool mod2_ok = b.mod2 == kTable1Mod2;
    std::cout << "k          0 1 2 3 4 5 6 7 8\n";
    std::cout << "b^k(M)     " << row(b.rational) << "\n";
    std::cout << "b^k_Z2(M)  " << row(b.mod2) << "\n";
    std::cout << "rational row " << (rational_ok ? "PASS" : "FAIL") << " (expected " << row(kTable1Rational) << ")\n";
    std::cout << "mod-2 row    " << (mod2_ok ? "PASS" : "FAIL") << " (expected " << row(kTable1Mod2) << ")\n";
    return rational_ok && mod2_ok ? kOk : kPropertyViolation;
}

int cmd_fuzz(const std::string& name, std::size_t samples, std::uint64_t seed) {
    const auto base = sc::catalog_instance(name);
    const auto& k = base.complex;
    const std::size_t n = base.lambda.n();
    const auto shelling = sc::find_shelling(k);
    std::mt19937_64 rng(seed);
    std::uint64_t rejections = 0;
    std::size_t agreements = 0, asserted = 0;
    std::map<std::string, std::size_t> labels;
    int status = kOk;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto pair = sc::random_instance(k, n, rng, rejections);
        const auto a = sc::analyze(name + "#" + std::to_string(s), pair, shelling);
        ++labels[sc::to_string(a.space.pullback.label)];
        if (!a.report.hypotheses_hold) continue;
        ++asserted;
        if (a.report.all_agree) {
            ++agreements;
        } else {
            status = kPropertyViolation;
            std::cout << "disagreement at sample " << s << ":\n" << sc::emit_instance(a.space.name, pair);
        }
    }
    std::cout << "complex " << name << " seed " << seed << " samples " << samples << " rejections " << rejections << "\n";
    for (const auto& [label, count] : labels) std::cout << "  " << label << " " << count << "\n";
    std::cout << agreements << "/" << asserted << " equivalence agreements";
    if (asserted < samples) std::cout << " (" << samples - asserted << " samples outside the hypotheses)";
    std::cout << "\n";
    return status;
}

int cmd_catalog(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& e : sc::catalog()) std::cout << e.name << "  " << e.description << "\n";
        return kOk;
    }
    if (action != "emit") throw sc::InputError("catalog action must be list or emit");
    if (name.empty()) throw sc::InputError("catalog emit needs an entry name");
    const auto& entry = sc::catalog_entry(name);
    if (auto pair = entry.instance())
        std::cout << sc::emit_instance(name, *pair);
    else {
        const auto k = entry.complex();
        std::cout << sc::emit_instance(name, k, static_cast<std::size_t>(k.dimension() + 1), std::nullopt);
    }
    return kOk;
}

int cmd_shelling(const std::string& path, const std::string& order_path) {
    const auto doc = sc::read_instance_file(path);
    const auto& k = doc.complex;
    std::optional<sc::Shelling> s;
    if (!order_path.empty()) {
        std::ifstream in(order_path);
        if (!in) throw sc::InputError("cannot open " + order_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        s = sc::verify_shelling(k, sc::parse_facet_order(k, buf.str()));
        std::cout << "valid shelling\n";
    } else {
        s = sc::find_shelling(k);
        if (!s) {
            std::cout << "no shelling found\n";
            return kPropertyViolation;
        }
        std::cout << "shelling found\n";
    }
    std::vector<long long> counts(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (std::size_t i = 0; i < s->order.size(); ++i) {
        std::cout << "  " << (i + 1) << "  " << nlohmann::json(k.labels_of(s->order[i])).dump() << "  r = "
                  << nlohmann::json(k.labels_of(s->restriction[i])).dump() << "\n";
        ++counts[static_cast<std::size_t>(sc::mask_size(s->restriction[i]))];
    }
    std::cout << "restriction sizes " << row(counts) << "\n";
    return kOk;
}

int cmd_bier(const std::string& path) {
    const auto doc = sc::read_instance_file(path);
    const auto pair = sc::bier_instance(doc.complex);
    std::cout << sc::emit_instance(doc.name.empty() ? "bier" : "bier-" + doc.name, pair);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of small covers and real toric spaces"};
    app.require_subcommand(1);

    std::string file, format = "json", conditions = "all", order_file, complex_name, action, entry;
    bool timings = false;
    std::size_t samples = 100;
    std::uint64_t seed = 1;

    auto* analyze = app.add_subcommand("analyze", "Analyze an instance file");
    analyze->add_option("file", file, "Instance file")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    analyze->add_option("--conditions", conditions, "all, or a comma list such as 1,3,7");
    analyze->add_flag("--timings", timings, "Include wall-clock timings");

    auto* table1 = app.add_subcommand("table1", "Reproduce the Betti numbers of the nine-vertex Bier example");

    auto* fuzz = app.add_subcommand("fuzz", "Random characteristic matrices over a catalog complex");
    fuzz->add_option("--complex", complex_name, "Catalog entry")->required();
    fuzz->add_option("--samples", samples, "Number of samples");
    fuzz->add_option("--seed", seed, "Seed");

    auto* cat = app.add_subcommand("catalog", "List or emit built-in instances");
    cat->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
    cat->add_option("name", entry, "Entry to emit");

    auto* shell = app.add_subcommand("shelling", "Verify or search for a shelling");
    shell->add_option("file", file, "Instance file")->required();
    shell->add_option("--order", order_file, "Facet order file");

    auto* bier = app.add_subcommand("bier", "Bier sphere instance of a complex");
    bier->add_option("file", file, "Complex file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, format, conditions, timings);
        if (table1->parsed()) return cmd_table1();
        if (fuzz->parsed()) return cmd_fuzz(complex_name, samples, seed);
        if (cat->parsed()) return cmd_catalog(action, entry);
        if (shell->parsed()) return cmd_shelling(file, order_file);
        if (bier->parsed()) return cmd_bier(file);
    } catch (const sc::ShellingError& e) {
        std::cerr << "shelling violation at facet " << (e.index + 1) << ": " << e.what() << "\n";
        return kPropertyViolation;
    } catch (const sc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const sc::PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return kPropertyViolation;
    } catch (const sc::InternalConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInputError;
}
