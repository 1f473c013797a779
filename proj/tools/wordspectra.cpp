// wordspectra — explore the Parikh factor spectra of binary words: per-word
// reports, Christoffel generation, cut bijections, attractors, exhaustive
// verification sweeps, and the strongly-symmetric-beyond-balanced scan.
//
// Exit codes: 0 success / all checks pass, 1 counterexample or internal
// claim violation, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "words/attractor.hpp"
#include "words/bijection.hpp"
#include "words/christoffel.hpp"
#include "words/classify.hpp"
#include "words/enumerate.hpp"
#include "words/json_io.hpp"
#include "words/spectrum.hpp"
#include "words/verify.hpp"
#include "words/word.hpp"

namespace {

constexpr std::size_t kReportMaxLength = 5000;

words::Word parse_word(const std::string& s) {
    return words::Word(s);  // throws invalid_argument on letters outside {a,b}
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string positions_text(const words::PositionSet& k) {
    std::string out;
    for (int pos : k) {
        if (!out.empty()) out += ' ';
        out += std::to_string(pos);
    }
    return out;
}

std::string profile_text(const words::ComplexityProfile& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string support_text(const words::SupportSet& pts) {
    std::string out;
    for (const words::ParikhVector& v : pts) {
        if (!out.empty()) out += ' ';
        out += '(' + std::to_string(v.a) + ',' + std::to_string(v.b) + ')';
    }
    return out;
}

int cmd_report(const std::string& raw, bool json) {
    const words::Word w = parse_word(raw);
    if (w.empty() || w.size() > kReportMaxLength)
        throw std::invalid_argument("report: word length must be in 1.." + std::to_string(kReportMaxLength));
    const words::ClassificationReport cls = words::classify(w);
    const words::FactorSpectrum spectrum = words::delta_fast(w);
    const words::ComplexityProfile profile = words::complexity_profile(spectrum);
    const words::SupportSet sup = words::support(spectrum);
    const bool strong = words::is_strongly_factor_symmetric(spectrum);
    const bool fsym = words::is_factor_symmetric(profile);
    const bool ssym = words::is_support_symmetric(spectrum);

    if (json) {
        nlohmann::json j;
        j["word"] = w;
        j["length"] = w.size();
        j["parikh"] = spectrum.total;
        j["classification"] = cls;
        j["strongly_factor_symmetric"] = strong;
        j["factor_symmetric"] = fsym;
        j["support_symmetric"] = ssym;
        j["profile"] = profile;
        j["counts"] = words::spectrum_json(w, spectrum)["counts"];
        j["support"] = sup;
        if (cls.christoffel) {
            j["predicted_support"] = words::predicted_support(w);
            if (w.size() >= 2) {  // single letters have no two-sided cut
                j["palindromic_cut"] = words::palindromic_factorization(w);
                j["cut_attractor"] = words::cut_attractor(w);
            }
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::cout << "word: " << w.str() << '\n'
              << "length: " << w.size() << '\n'
              << "parikh: (" << spectrum.total.a << ',' << spectrum.total.b << ")\n"
              << "balanced: " << bool_text(cls.balanced) << '\n'
              << "lyndon: " << bool_text(cls.lyndon) << '\n'
              << "unbordered: " << bool_text(cls.unbordered) << '\n'
              << "primitive: " << bool_text(cls.primitive) << '\n'
              << "trapezoidal: " << bool_text(cls.trapezoidal) << '\n'
              << "christoffel: " << bool_text(cls.christoffel) << '\n'
              << "conjugate_of_christoffel: " << bool_text(cls.conjugate_of_christoffel) << '\n'
              << "strongly_factor_symmetric: " << bool_text(strong) << '\n'
              << "factor_symmetric: " << bool_text(fsym) << '\n'
              << "support_symmetric: " << bool_text(ssym) << '\n'
              << "profile: " << profile_text(profile) << '\n'
              << "factor array:\n"
              << words::to_grid(spectrum) << "support: " << support_text(sup) << '\n';
    if (cls.christoffel) {
        const words::SupportSet predicted = words::predicted_support(w);
        std::cout << "predicted support: " << support_text(predicted) << '\n'
                  << "predicted support matches: " << bool_text(predicted == sup) << '\n';
        if (w.size() >= 2) {  // single letters have no two-sided cut
            const words::PalindromicCut cut = words::palindromic_factorization(w);
            std::cout << "palindromic cut: " << cut.left.str() << '|' << cut.right.str()
                      << " (cut=" << cut.cut << ")\n"
                      << "cut attractor: " << positions_text(words::cut_attractor(w)) << '\n';
        }
    }
    return 0;
}

int cmd_generate(int p, int q, bool upper, bool with_path, bool json) {
    const words::Word w = upper ? words::generate_upper(p, q) : words::generate_lower(p, q);
    if (json) {
        nlohmann::json j;
        j["word"] = w;
        j["parikh"] = words::parikh(w);
        j["form"] = upper ? "upper" : "lower";
        if (with_path) j["path"] = words::path(w);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << w.str() << '\n';
    if (with_path)
        for (const words::ParikhVector& pt : words::path(w))
            std::cout << pt.a << ' ' << pt.b << '\n';
    return 0;
}

int cmd_spectrum(const std::string& raw, bool grid_only, bool json) {
    const words::Word w = parse_word(raw);
    const words::FactorSpectrum spectrum = words::delta_fast(w);
    if (json) {
        std::cout << words::spectrum_json(w, spectrum).dump(2) << '\n';
        return 0;
    }
    if (grid_only) {
        std::cout << words::to_grid(spectrum);
        return 0;
    }
    std::cout << "word: " << w.str() << '\n'
              << "parikh: (" << spectrum.total.a << ',' << spectrum.total.b << ")\n"
              << "factor array:\n"
              << words::to_grid(spectrum)
              << "profile: " << profile_text(words::complexity_profile(spectrum)) << '\n'
              << "strongly_factor_symmetric: "
              << bool_text(words::is_strongly_factor_symmetric(spectrum)) << '\n';
    return 0;
}

int cmd_bijection(const std::string& raw, int k, bool json) {
    const words::Word w = parse_word(raw);
    const words::BijectionTable table = words::bijection_table(w, k);
    if (json) {
        std::cout << nlohmann::json(table).dump(2) << '\n';
        return 0;
    }
    std::cout << "word: " << w.str() << "\nk: " << table.k << "\ncut: " << table.cut << '\n';
    std::size_t width = 1;
    for (const auto& [f, g] : table.pairs) width = std::max(width, f.size());
    for (const auto& [f, g] : table.pairs)
        std::printf("%-*s  %s\n", static_cast<int>(width), f.str().c_str(), g.str().c_str());
    return 0;
}

int cmd_attractor(const std::string& raw, const std::vector<int>& check, bool minimum, bool circular,
                  bool json) {
    const words::Word w = parse_word(raw);
    if (!check.empty() && minimum)
        throw std::invalid_argument("attractor: --check and --min are mutually exclusive");
    if (!check.empty()) {
        const words::PositionSet k(check.begin(), check.end());
        const bool ok = circular ? words::is_circular_attractor(w, k) : words::is_attractor(w, k);
        if (json) {
            std::cout << nlohmann::json{{"word", w}, {"positions", k}, {"circular", circular}, {"attractor", ok}}
                             .dump(2)
                      << '\n';
        } else {
            std::cout << bool_text(ok) << '\n';
        }
        return 0;
    }
    const words::PositionSet k =
        circular ? words::minimum_circular_attractor(w) : words::minimum_attractor(w);
    if (json)
        std::cout << nlohmann::json{{"word", w}, {"circular", circular}, {"minimum_attractor", k}}.dump(2)
                  << '\n';
    else
        std::cout << positions_text(k) << '\n';
    return 0;
}

int cmd_verify(const std::string& theorem, int bound, int max_power, bool json) {
    const words::VerificationRun run = words::run_theorem(theorem, bound, max_power);
    std::cerr << "elapsed: " << run.elapsed_seconds << " s\n";
    if (json) {
        std::cout << nlohmann::json(run).dump(2) << '\n';
    } else {
        std::cout << run.theorem << " bound=" << run.bound << ": " << (run.passed() ? "PASS" : "FAIL")
                  << " (" << run.checked_count << " cases checked)\n";
        for (const words::Word& w : run.counterexamples)
            std::cout << "counterexample: " << w.str() << '\n';
    }
    return run.passed() ? 0 : 1;
}

int cmd_scan(int max_length, bool json) {
    const std::vector<words::ScanResult> results = words::scan_strongly_symmetric_unbalanced(max_length);
    if (json) {
        std::cout << nlohmann::json(results).dump(2) << '\n';
        return 0;
    }
    for (const words::ScanResult& r : results)
        for (const words::Word& w : r.words) std::cout << r.length << '\t' << w.str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parikh factor spectra of binary words over {a,b}"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");

    auto* rep = app.add_subcommand("report", "classification, factor array, profile, support");
    std::string rep_word;
    rep->add_option("word", rep_word, "word over {a,b}")->required();
    rep->fallthrough();

    auto* gen = app.add_subcommand("generate", "lower or upper Christoffel word for coprime (p,q)");
    int gen_p = 0, gen_q = 0;
    bool gen_upper = false, gen_path = false;
    gen->add_option("p", gen_p, "number of a's")->required();
    gen->add_option("q", gen_q, "number of b's")->required();
    gen->add_flag("--upper", gen_upper, "upper word instead of lower");
    gen->add_flag("--path", gen_path, "also print the lattice path, one 'x y' line per point");
    gen->fallthrough();

    auto* spec = app.add_subcommand("spectrum", "factor array of a word");
    std::string spec_word;
    bool spec_grid = false;
    spec->add_option("word", spec_word, "word over {a,b}")->required();
    spec->add_flag("--grid", spec_grid, "bare grid only, row j=q first");
    spec->fallthrough();

    auto* bij = app.add_subcommand("bijection", "cut bijection table for a Christoffel word");
    std::string bij_word;
    int bij_k = 0;
    bij->add_option("word", bij_word, "Christoffel word")->required();
    bij->add_option("k", bij_k, "factor length, 0..|word|")->required();
    bij->fallthrough();

    auto* attr = app.add_subcommand("attractor", "check or search string attractors");
    std::string attr_word;
    std::vector<int> attr_check;
    bool attr_min = false, attr_circular = false;
    attr->add_option("word", attr_word, "word over {a,b}")->required();
    attr->add_option("--check", attr_check, "verify this position set (1-based, comma separated)")
        ->delimiter(',');
    attr->add_flag("--min", attr_min, "search the smallest attractor (default action)");
    attr->add_flag("--circular", attr_circular, "use circular factors");
    attr->fallthrough();

    auto* ver = app.add_subcommand("verify", "run one exhaustive sweep");
    std::string ver_id;
    int ver_bound = 0, ver_power = 3;
    std::string theorem_help = "theorem id:";
    for (const words::TheoremInfo& t : words::theorem_catalog())
        theorem_help += "\n  " + t.id + "  " + t.description;
    ver->add_option("theorem", ver_id, theorem_help)->required();
    ver->add_option("--bound", ver_bound, "sweep bound (per-theorem cap applies)")->required();
    ver->add_option("--max-power", ver_power, "largest exponent k for the power sweeps (default 3)");
    ver->fallthrough();

    auto* scan = app.add_subcommand("scan", "primitive trapezoidal unbalanced strongly-symmetric words");
    int scan_max = 0;
    scan->add_option("--max-length", scan_max, "scan all words up to this length")->required();
    scan->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rep->parsed()) return cmd_report(rep_word, json_out);
        if (gen->parsed()) return cmd_generate(gen_p, gen_q, gen_upper, gen_path, json_out);
        if (spec->parsed()) {
            if (json_out && spec_grid)
                throw std::invalid_argument("spectrum: --json and --grid are mutually exclusive");
            return cmd_spectrum(spec_word, spec_grid, json_out);
        }
        if (bij->parsed()) return cmd_bijection(bij_word, bij_k, json_out);
        if (attr->parsed()) return cmd_attractor(attr_word, attr_check, attr_min, attr_circular, json_out);
        if (ver->parsed()) return cmd_verify(ver_id, ver_bound, ver_power, json_out);
        if (scan->parsed()) return cmd_scan(scan_max, json_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
