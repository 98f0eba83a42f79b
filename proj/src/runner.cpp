#include "ginwb/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ginwb/criterion.hpp"
#include "ginwb/gin.hpp"
#include "ginwb/parser.hpp"
#include "ginwb/reconstructor.hpp"

namespace ginwb {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t resolve_seed(const RunConfig& config) {
    if (config.seed) return *config.seed;
    if (const char* env = std::getenv("GINWB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw invalid_argument("GINWB_SEED is not a valid integer");
        }
    }
    return 42;
}

std::pair<std::vector<Polynomial>, int> load_forms(const RunConfig& config) {
    std::string text;
    if (config.inline_input) {
        text = *config.inline_input;
    } else if (config.input_path) {
        std::ifstream in(*config.input_path);
        if (!in) throw invalid_argument("cannot open input file: " + *config.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        throw invalid_argument("no input: use --inline or --input");
    }
    return parse_forms(text, config.n);
}

std::string roman(int value) {
    static const std::pair<int, const char*> table[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
        {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"},
        {1, "I"}};
    std::string out;
    for (auto [n, s] : table)
        while (value >= n) {
            out += s;
            value -= n;
        }
    return out;
}

Json exponents_json(const Monomial& m) {
    Json a = Json::array();
    for (int i = 0; i < m.arity(); ++i) a.push_back(m.exponent(i));
    return a;
}

Json generators_json(const MonomialIdeal& ideal) {
    Json a = Json::array();
    for (const auto& g : ideal.min_generators()) a.push_back(exponents_json(g));
    return a;
}

Json hilbert_json(const HilbertTable& t) {
    Json a = Json::array();
    for (auto v : t.values) a.push_back(v);
    return a;
}

std::string generator_lines(const MonomialIdeal& ideal, const std::string& indent) {
    std::string out;
    for (const auto& g : ideal.min_generators()) out += indent + g.str() + "\n";
    return out;
}

std::string join_values(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

const char* kind_name(ChangeKind kind) {
    return kind == ChangeKind::triangular ? "upper-triangular" : "general";
}

RunReport finish_json(const Json& doc) { return {kExitOk, doc.dump(2) + "\n"}; }

RunReport run_gin(const RunConfig& config, std::uint64_t seed) {
    auto [forms, n] = load_forms(config);
    GinOptions options;
    options.trials = config.trials;
    options.seed = seed;
    options.coeff_bound = config.coeff_bound;
    options.degree_bound = config.degree_bound;
    options.kind = config.kind;
    options.expect_ci = config.expect_ci;
    GinResult result = compute_gin(forms, options);
    int d = 0;
    for (const auto& f : forms) d = std::max(d, f.degree());
    bool revlex_d = is_revlex_segment(result.ideal, d);
    if (config.format == OutputFormat::json) {
        Json doc;
        doc["n"] = n;
        doc["d"] = d;
        doc["generators"] = generators_json(result.ideal);
        doc["hilbert"] = hilbert_json(result.hilbert);
        doc["agreed"] = result.agreed;
        doc["seeds"] = result.seeds;
        doc["borel"] = result.borel;
        doc["revlex_d"] = revlex_d;
        doc["trials"] = result.trials_used;
        doc["degree_bound"] = result.ideal.degree_bound().value_or(-1);
        doc["kind"] = kind_name(config.kind);
        return finish_json(doc);
    }
    std::ostringstream out;
    out << "gin: n=" << n << " d=" << d << " bound="
        << result.ideal.degree_bound().value_or(-1) << " kind=" << kind_name(config.kind)
        << " trials=" << result.trials_used << "\n";
    out << "agreed across trials: " << (result.agreed ? "yes" : "no")
        << "   strongly stable: " << (result.borel ? "yes" : "no")
        << "   revlex segment in degree " << d << ": " << (revlex_d ? "yes" : "NO") << "\n";
    out << "minimal generators (" << result.ideal.min_generators().size() << "):\n"
        << generator_lines(result.ideal, "  ");
    out << "hilbert: " << join_values(result.hilbert.values) << "\n";
    return {kExitOk, out.str()};
}

RunReport run_hilbert(const RunConfig& config) {
    if (!config.n || !config.d) throw invalid_argument("hilbert needs -n and -d");
    int n = *config.n, d = *config.d;
    HilbertTable table = ci_hilbert_table(n, d);
    std::vector<std::int64_t> oracle = series_oracle(n, d);
    bool match = static_cast<int>(oracle.size()) == n * (d - 1) + 1;
    for (std::size_t k = 0; k < oracle.size() && match; ++k)
        match = oracle[k] == table.at(static_cast<int>(k));
    std::vector<std::int64_t> sizes;
    for (int k = 0; k <= n * (d - 1) + 1; ++k) sizes.push_back(ci_ideal_size(n, d, k));
    if (config.format == OutputFormat::json) {
        Json doc;
        doc["n"] = n;
        doc["d"] = d;
        doc["socle_degree"] = n * (d - 1);
        doc["hilbert"] = hilbert_json(table);
        doc["ideal_sizes"] = sizes;
        doc["oracle_match"] = match;
        return finish_json(doc);
    }
    std::ostringstream out;
    out << "hilbert: n=" << n << " d=" << d << " socle=" << n * (d - 1) << "\n";
    out << "H(S/J): " << join_values(table.values) << "\n";
    out << "|J_k|:  " << join_values(sizes) << "\n";
    out << "closed form matches series oracle: " << (match ? "yes" : "NO") << "\n";
    return {kExitOk, out.str()};
}

RunReport run_reconstruct(const RunConfig& config) {
    if (!config.n || !config.d) throw invalid_argument("reconstruct needs -n and -d");
    int n = *config.n, d = *config.d;
    std::vector<MonomialIdeal> candidates = reconstruct(n, d);
    if (config.format == OutputFormat::json) {
        Json doc;
        doc["n"] = n;
        doc["d"] = d;
        doc["count"] = candidates.size();
        Json list = Json::array();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            Json c;
            c["label"] = roman(static_cast<int>(i) + 1);
            c["generators"] = generators_json(candidates[i]);
            list.push_back(std::move(c));
        }
        doc["candidates"] = std::move(list);
        return finish_json(doc);
    }
    std::ostringstream out;
    out << "reconstruct: n=" << n << " d=" << d << " -> " << candidates.size()
        << " candidate(s)\n";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out << "candidate " << roman(static_cast<int>(i) + 1) << " ("
            << candidates[i].min_generators().size() << " generators):\n"
            << generator_lines(candidates[i], "  ");
    }
    return {kExitOk, out.str()};
}

RunReport run_lefschetz(const RunConfig& config, std::uint64_t seed) {
    auto [forms, n] = load_forms(config);
    bool monomial_input = true;
    for (const auto& f : forms)
        if (f.term_count() != 1 || f.leading_coefficient() != 1) monomial_input = false;

    std::optional<Polynomial> element;
    if (config.element) element = parse_polynomial(*config.element, n);

    std::optional<GradedQuotient> quotient;
    if (monomial_input) {
        std::vector<Monomial> gens;
        gens.reserve(forms.size());
        for (const auto& f : forms) gens.push_back(f.leading_monomial());
        quotient = GradedQuotient::from_monomial_ideal(MonomialIdeal(n, std::move(gens)));
    } else {
        int max_deg = 0;
        bool equigenerated = true;
        for (const auto& f : forms) {
            if (f.is_zero() || !f.is_homogeneous())
                throw invalid_argument("lefschetz input must be nonzero homogeneous forms");
            max_deg = std::max(max_deg, f.degree());
            if (f.degree() != forms.front().degree()) equigenerated = false;
        }
        int bound;
        if (config.degree_bound)
            bound = *config.degree_bound;
        else if (equigenerated)
            bound = n * (forms.front().degree() - 1) + 1;
        else
            throw invalid_argument("mixed-degree input needs --degree-bound");
        quotient = GradedQuotient::from_groebner(buchberger_truncated(forms, bound));
    }

    LefschetzVerdict verdict =
        check_lefschetz(*quotient, config.lefschetz_kind, std::move(element), seed);
    const char* kind_str = verdict.kind == LefschetzKind::strong ? "SLP" : "WLP";
    if (config.format == OutputFormat::json) {
        Json doc;
        doc["n"] = n;
        doc["kind"] = kind_str;
        doc["holds"] = verdict.holds;
        doc["established"] = verdict.decisive();
        doc["element"] = verdict.element.str();
        if (verdict.witness) {
            Json w;
            w["power"] = verdict.witness->first;
            w["degree"] = verdict.witness->second;
            doc["witness"] = std::move(w);
        } else {
            doc["witness"] = nullptr;
        }
        doc["socle_degree"] = quotient->socle_degree();
        return finish_json(doc);
    }
    std::ostringstream out;
    out << "lefschetz: " << kind_str << " with element " << verdict.element.str() << "\n";
    if (verdict.holds) {
        out << "holds: yes\n";
    } else if (verdict.decisive()) {
        out << "holds: no (map by power " << verdict.witness->first << " fails at degree "
            << verdict.witness->second << ")\n";
    } else {
        out << "holds: not established by this witness (power " << verdict.witness->first
            << " fails at degree " << verdict.witness->second
            << "); the property may still hold for another element\n";
    }
    return {kExitOk, out.str()};
}

RunReport run_criterion(const RunConfig& config, std::uint64_t seed) {
    auto [forms, n] = load_forms(config);
    if (static_cast<int>(forms.size()) != n)
        throw invalid_argument("criterion needs exactly n forms in n variables");
    int d = forms.front().degree();

    std::vector<std::uint64_t> seeds;
    std::vector<Rat> deltas;
    bool any_nonzero = false;
    for (int t = 0; t < config.trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        seeds.push_back(trial_seed);
        CoordinateChange change = random_change(n, trial_seed, config.coeff_bound, config.kind);
        deltas.push_back(coefficient_matrix(forms, change).delta);
        if (deltas.back() != 0) any_nonzero = true;
    }
    CoordinateChange first = random_change(n, seeds.front(), config.coeff_bound, config.kind);
    Lemma17Report lemma = lemma17_checks(forms, first);

    if (config.format == OutputFormat::json) {
        Json doc;
        doc["n"] = n;
        doc["d"] = d;
        doc["seeds"] = seeds;
        Json delta_list = Json::array();
        Json nonzero_list = Json::array();
        for (const auto& delta : deltas) {
            delta_list.push_back(rat_str(delta));
            nonzero_list.push_back(delta != 0);
        }
        doc["delta"] = std::move(delta_list);
        doc["delta_nonzero"] = std::move(nonzero_list);
        doc["revlex_segment_certified"] = any_nonzero;
        Json ratios = Json::array();
        for (const auto& r : lemma.specialization.ratios) ratios.push_back(rat_str(r));
        doc["lemma_checks"] = Json{{"first_column_ok", true},
                                   {"ratios", std::move(ratios)},
                                   {"all_determined", lemma.specialization.all_determined}};
        return finish_json(doc);
    }
    std::ostringstream out;
    out << "criterion: n=" << n << " d=" << d << " trials=" << config.trials << "\n";
    for (std::size_t t = 0; t < deltas.size(); ++t)
        out << "  seed " << seeds[t] << ": delta = " << rat_str(deltas[t])
            << (deltas[t] != 0 ? "  (nonzero)" : "  (ZERO)") << "\n";
    if (any_nonzero)
        out << "nonzero specialization found: the degree-" << d
            << " piece of the generic initial ideal is the revlex segment\n";
    else
        out << "criterion fails at all sampled points (no certificate; raise --trials or "
               "--coeff-bound)\n";
    out << "column identity: ok; specialization ratios:";
    for (const auto& r : lemma.specialization.ratios) out << ' ' << rat_str(r);
    out << "\n";
    return {kExitOk, out.str()};
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::parse:
        return kExitParse;
    case ErrorKind::not_regular_sequence:
        return kExitNotRegular;
    case ErrorKind::disagreement_across_trials:
        return kExitDisagreement;
    case ErrorKind::infeasible_state:
        return kExitInfeasible;
    case ErrorKind::invalid_argument:
    case ErrorKind::arity_mismatch:
        return kExitUsage;
    default:
        return kExitInternal;
    }
}

const char* kind_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse:
        return "ParseError";
    case ErrorKind::not_regular_sequence:
        return "NotRegularSequence";
    case ErrorKind::disagreement_across_trials:
        return "DisagreementAcrossTrials";
    case ErrorKind::infeasible_state:
        return "InfeasibleState";
    case ErrorKind::arity_mismatch:
        return "ArityMismatch";
    case ErrorKind::invalid_argument:
        return "InvalidArgument";
    case ErrorKind::zero_polynomial:
        return "ZeroPolynomial";
    case ErrorKind::degree_bound_exceeded:
        return "DegreeBoundExceeded";
    case ErrorKind::singular_matrix:
        return "SingularMatrix";
    case ErrorKind::check_failure:
        return "CheckFailure";
    }
    return "Error";
}

RunReport error_report(const RunConfig& config, const Error& e) {
    int code = exit_code_for(e);
    if (config.format == OutputFormat::json) {
        Json doc;
        Json err;
        err["kind"] = kind_string(e.kind());
        err["message"] = e.what();
        if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
            err["line"] = p->line();
            err["column"] = p->column();
        }
        doc["error"] = std::move(err);
        return {code, doc.dump(2) + "\n"};
    }
    return {code, std::string("error (") + kind_string(e.kind()) + "): " + e.what() + "\n"};
}

} // namespace

RunReport run(const RunConfig& config) {
    try {
        std::uint64_t seed = resolve_seed(config);
        switch (config.command) {
        case Command::gin:
            return run_gin(config, seed);
        case Command::hilbert:
            return run_hilbert(config);
        case Command::reconstruct:
            return run_reconstruct(config);
        case Command::lefschetz:
            return run_lefschetz(config, seed);
        case Command::criterion:
            return run_criterion(config, seed);
        }
        throw invalid_argument("unknown command");
    } catch (const Error& e) {
        return error_report(config, e);
    } catch (const std::exception& e) {
        return {kExitInternal, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace ginwb
