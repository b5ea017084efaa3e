/*
   Copyright 2026 The genbetti authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// genbetti: Hilbert series, unimodality classification, admissible extra
// degrees, graded Betti tables and ghost reports of generic almost complete
// intersections, with a finite-field brute-force verifier.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 the table does
// not exist or is not determinable, 3 oracle mismatch after retries.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genbetti/genbetti.hpp"
#include "genbetti/json_io.hpp"

namespace {

using namespace genbetti;

struct RunSpec {
    std::optional<int> n;
    std::vector<int> degrees;
    std::optional<int> extra_D;
    int family_k = 0;
    std::string format = "text";
    bool partial = false;
    OracleConfig oracle;
};

bool structured(const RunSpec& spec) { return spec.format == "structured"; }

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

// classify and admissible-d work on the complete intersection itself; the
// variable count is the number of forms.
DegreeSequence ci_sequence(const RunSpec& spec) {
    if (spec.n && *spec.n != static_cast<int>(spec.degrees.size()))
        throw std::invalid_argument("a complete intersection needs exactly n generator degrees");
    std::vector<int> ds = spec.degrees;
    for (int& e : ds) {
        if (e < 2) throw std::invalid_argument("generator degrees must be >= 2");
        e -= 1;
    }
    return DegreeSequence(std::move(ds));
}

// betti works on n+1 generator degrees; -D is an alternative spelling for
// appending one more. The largest degree plays the role of the extra form.
DegreeSequence aci_sequence(const RunSpec& spec) {
    std::vector<int> gens = spec.degrees;
    if (spec.extra_D) gens.push_back(*spec.extra_D);
    if (!spec.n) throw std::invalid_argument("-n is required");
    if (static_cast<int>(gens.size()) != *spec.n + 1)
        throw std::invalid_argument("need n+1 generator degrees (via -d, or -d plus -D)");
    return DegreeSequence::from_generators(std::move(gens));
}

int cmd_hilbert(const RunSpec& spec) {
    if (!spec.n) throw std::invalid_argument("-n is required");
    const HilbertData h = generic_series(*spec.n, spec.degrees);
    const int k = static_cast<int>(spec.degrees.size());
    if (structured(spec)) {
        nlohmann::json j = to_json(h);
        j["conjectural"] = k > h.n + 1;
        emit(j);
    } else {
        std::cout << render_hilbert(h, k);
    }
    return 0;
}

int cmd_betti(const RunSpec& spec) {
    const DegreeSequence seq = aci_sequence(spec);
    BettiTable table;
    bool is_partial = false;
    try {
        table = betti_table(seq);
    } catch (const NotDeterminableError&) {
        if (!spec.partial) throw;
        table = betti_table(seq, true);
        is_partial = true;
    }
    const auto ghosts = ghost_terms(table, seq.generator_degrees());
    if (structured(spec)) {
        const HilbertData h = almost_ci_series(seq);
        nlohmann::json j = to_json(h);
        j["betti"] = to_json(table).at("betti");
        j["ghosts"] = to_json(ghosts);
        j["partial"] = is_partial;
        emit(j);
        return 0;
    }
    if (is_partial) {
        std::cout << render_diagram(table, table.regularity - 2);
        std::cout << "note: not determinable; strands " << table.regularity - 1 << " and "
                  << table.regularity << " are omitted\n";
    } else {
        std::cout << render_diagram(table);
    }
    return 0;
}

int cmd_classify(const RunSpec& spec) {
    const UnimodalityClass cls = ci_classification(ci_sequence(spec));
    if (structured(spec))
        emit(to_json(cls));
    else
        std::cout << to_string(cls) << '\n';
    return 0;
}

int cmd_admissible(const RunSpec& spec) {
    const auto ds = admissible_extra_degrees(ci_sequence(spec));
    if (structured(spec)) {
        emit(nlohmann::json{{"admissible_D", ds}});
    } else {
        for (int d : ds) std::cout << d << '\n';
    }
    return 0;
}

int cmd_ghost_family(const RunSpec& spec) {
    const QuadricFamilyReport report = quadric_family_report(spec.family_k);
    if (structured(spec))
        emit(to_json(report));
    else
        std::cout << render_family(report);
    return 0;
}

int cmd_verify(const RunSpec& spec) {
    if (!spec.n) throw std::invalid_argument("-n is required");
    const OracleReport report = hilbert_function_oracle(*spec.n, spec.degrees, spec.oracle);
    if (structured(spec))
        emit(to_json(report));
    else
        std::cout << render_oracle(report);
    return report.all_match ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert series and graded Betti tables of generic forms"};
    app.require_subcommand(1);

    RunSpec spec;
    int n = 0;
    int D = 0;
    int max_degree = 0;
    long long seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_n, bool with_degrees) {
        if (with_n)
            sub->add_option("-n", n, "number of variables")->check(CLI::PositiveNumber);
        if (with_degrees)
            sub->add_option("-d", spec.degrees, "generator degrees, comma separated")
                ->required()
                ->delimiter(',');
        sub->add_option("--format", spec.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        return sub;
    };

    auto* hilbert = add_common(app.add_subcommand("hilbert", "Hilbert series of generic forms"),
                               true, true);
    hilbert->get_option("-n")->required();

    auto* betti = add_common(
        app.add_subcommand("betti", "graded Betti table of an almost complete intersection"),
        true, true);
    betti->get_option("-n")->required();
    betti->add_option("-D", D, "degree of the extra form (alternative to appending to -d)")
        ->check(CLI::PositiveNumber);
    betti->add_flag("--partial", spec.partial,
                    "on a non-determinable table, print the strands that are known anyway");

    auto* classify_cmd = add_common(
        app.add_subcommand("classify", "unimodality class of a complete intersection"), true, true);

    auto* admissible = add_common(
        app.add_subcommand("admissible-d", "extra degrees keeping the Betti table determinable"),
        true, true);

    auto* family = add_common(
        app.add_subcommand("ghost-family", "the 2k quadrics plus one degree-2k form family"),
        false, false);
    family->add_option("-k", spec.family_k, "half the number of variables")
        ->required()
        ->check(CLI::Range(2, 64));

    auto* verify = add_common(
        app.add_subcommand("verify", "compare the series against random forms over F_p"), true,
        true);
    verify->get_option("-n")->required();
    verify->add_option("--prime", spec.oracle.prime, "modulus, a prime > 10^4");
    verify->add_option("--seed", seed, "base seed for the random forms");
    verify->add_option("--max-degree", max_degree, "largest degree to check")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--retries", spec.oracle.retries, "extra attempts on mismatch")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);

        if (hilbert->parsed() || betti->parsed() || verify->parsed() ||
            (classify_cmd->parsed() && classify_cmd->count("-n")) ||
            (admissible->parsed() && admissible->count("-n")))
            spec.n = n;
        if (betti->parsed() && betti->count("-D")) spec.extra_D = D;
        if (verify->count("--seed")) spec.oracle.seed = static_cast<std::uint64_t>(seed);
        if (verify->count("--max-degree")) spec.oracle.max_degree = max_degree;

        if (hilbert->parsed()) return cmd_hilbert(spec);
        if (betti->parsed()) return cmd_betti(spec);
        if (classify_cmd->parsed()) return cmd_classify(spec);
        if (admissible->parsed()) return cmd_admissible(spec);
        if (family->parsed()) return cmd_ghost_family(spec);
        if (verify->parsed()) return cmd_verify(spec);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const genbetti::NotDeterminableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const genbetti::MinimalityViolationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
