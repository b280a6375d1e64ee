#include "pencil/cli.hpp"

#include "pencil/combinant.hpp"
#include "pencil/error.hpp"
#include "pencil/form_io.hpp"
#include "pencil/omega.hpp"
#include "pencil/syzygy.hpp"
#include "pencil/transvectant.hpp"
#include "pencil/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace pencil {

namespace {

using nlohmann::ordered_json;

// Largest d the Omega oracle runs on without --large.
constexpr int kOracleDefaultMaxD = 7;

struct Options {
    int d = 0;
    int r = 0;
    int i = 0;
    int j = 0;
    int q = 0;
    std::uint64_t seed = 1;
    int trials = 1;
    int bound = 10;
    std::string format = "text";
    bool json = false;
    bool large = false;
    std::string f = "1,0";
    std::vector<std::string> exprs;
    std::vector<std::string> files;
    std::vector<int> twice_j;

    bool as_json() const { return json || format == "json"; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BinaryForm form_from_text(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        return form_from_json(j);
    }
    return parse_form(text);
}

std::vector<BinaryForm> input_forms(const Options& o)
{
    std::vector<BinaryForm> forms;
    for (const auto& e : o.exprs) {
        forms.push_back(form_from_text(e));
    }
    for (const auto& path : o.files) {
        forms.push_back(form_from_text(read_file(path)));
    }
    return forms;
}

std::vector<BinaryForm> exactly(const Options& o, std::size_t n, const char* what)
{
    auto forms = input_forms(o);
    if (forms.size() != n) {
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " forms (--expr or files), got " +
                         std::to_string(forms.size()));
    }
    return forms;
}

// Pencil from two given forms, else a seeded random pencil of order d.
Pencil input_pencil(const Options& o)
{
    auto forms = input_forms(o);
    if (forms.empty()) {
        if (o.d == 0) {
            throw UsageError("give two forms or --d with --seed");
        }
        return random_pencil(o.d, o.seed, o.bound);
    }
    if (forms.size() != 2) {
        throw UsageError("a pencil needs exactly two forms, got " + std::to_string(forms.size()));
    }
    return Pencil(forms[0], forms[1]);
}

LinearSymbol parse_symbol(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--f expects p/q,p/q");
    }
    return LinearSymbol(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
}

// theta / s for a single-term surd s = c sqrt(n): theta/(c n) * sqrt(n).
std::optional<SurdSum> ratio_to_single_surd(const Rational& theta_value, const SurdSum& s)
{
    if (s.is_zero() || !s.is_single_term()) {
        return std::nullopt;
    }
    const auto& [n, c] = *s.terms().begin();
    return SurdSum::term(theta_value / (c * Rational(n)), n);
}

int cmd_transvect(const Options& o, std::ostream& out)
{
    const auto forms = exactly(o, 2, "transvect");
    const BinaryForm result = transvectant(forms[0], forms[1], o.q);
    if (o.as_json()) {
        out << form_to_json(result).dump() << '\n';
    } else {
        out << format_form(result) << '\n';
    }
    return 0;
}

int cmd_combinants(const Options& o, std::ostream& out)
{
    const CombinantSequence seq = combinant_sequence(input_pencil(o));
    if (o.as_json()) {
        auto arr = ordered_json::array();
        for (const auto& c : seq.entries) {
            arr.push_back(form_to_json(c));
        }
        out << arr.dump() << '\n';
    } else {
        for (int r = 1; r <= static_cast<int>(seq.entries.size()); ++r) {
            out << 'C' << 2 * r - 1 << " = " << format_form(seq.at(r)) << '\n';
        }
    }
    return 0;
}

int cmd_syzygy_table(const Options& o, std::ostream& out)
{
    const SyzygyTable table = syzygy_table(o.d, o.r);
    if (o.as_json()) {
        out << table_to_json(table).dump() << '\n';
        return 0;
    }
    out << "d=" << table.d << " r=" << table.r << '\n';
    for (const TermIndex& ij : syzygy_index_set(table.r)) {
        out << "alpha[" << ij.i << ',' << ij.j << "] = " << table.alpha(ij.i, ij.j).str() << "   (C" << 2 * ij.i - 1
            << ", C" << 2 * ij.j - 1 << ")_" << term_transvectant_order(table.r, ij) << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.trials < 1) {
        throw UsageError("--trials must be positive");
    }
    require_syzygy_range(o.d, o.r);
    int vanished = 0;
    auto failures = ordered_json::array();
    for (int k = 0; k < o.trials; ++k) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        if (evaluate_syzygy(random_pencil(o.d, seed, o.bound), o.r).is_zero()) {
            ++vanished;
        } else {
            failures.push_back(seed);
        }
    }
    if (o.as_json()) {
        ordered_json j;
        j["d"] = o.d;
        j["r"] = o.r;
        j["trials"] = o.trials;
        j["vanished"] = vanished;
        j["failed_seeds"] = failures;
        out << j.dump() << '\n';
    } else {
        out << vanished << '/' << o.trials << " syzygies vanish\n";
    }
    return vanished == o.trials ? 0 : 1;
}

int cmd_recover(const Options& o, std::ostream& out)
{
    const Pencil pencil = input_pencil(o);
    require_syzygy_range(pencil.order(), o.r);
    const BinaryForm recovered = recover_combinant(pencil, o.r);
    const BinaryForm direct = transvectant(pencil.a(), pencil.b(), 2 * o.r - 1);
    const bool ok = recovered == direct;
    const std::string name = "C" + std::to_string(2 * o.r - 1);
    if (o.as_json()) {
        ordered_json j;
        j["d"] = pencil.order();
        j["r"] = o.r;
        j["recovered"] = form_to_json(recovered);
        j["direct"] = form_to_json(direct);
        j["verified"] = ok;
        out << j.dump() << '\n';
    } else {
        out << "recovered " << name << (ok ? " matches" : " differs from") << " direct transvectant\n";
        out << (ok ? "VERIFIED" : "FAILED") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_oracle_theta(const Options& o, std::ostream& out)
{
    if (o.d > kOracleDefaultMaxD && !o.large) {
        throw UsageError("d=" + std::to_string(o.d) + " exceeds " + std::to_string(kOracleDefaultMaxD) +
                         "; pass --large to run the expansion anyway");
    }
    const LinearSymbol f = parse_symbol(o.f);
    const Rational oracle = verify_theta(o.d, o.r, o.i, o.j, f);
    const Rational formula = theta(o.d, o.r, o.i, o.j);
    const bool ok = oracle == formula;
    if (o.as_json()) {
        ordered_json j;
        j["d"] = o.d;
        j["r"] = o.r;
        j["i"] = o.i;
        j["j"] = o.j;
        j["f"] = {f.first.str(), f.second.str()};
        j["oracle"] = oracle.str();
        j["formula"] = formula.str();
        j["match"] = ok;
        out << j.dump() << '\n';
    } else {
        out << "oracle  " << oracle.str() << '\n';
        out << "formula " << formula.str() << '\n';
        out << (ok ? "MATCH" : "MISMATCH") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_gamma(const Options& o, std::ostream& out)
{
    PositivityCertificate cert;
    try {
        cert = positivity_certificate(o.r, o.d);
    } catch (const FormulaViolation& e) {
        out << "FAILED: " << e.what() << '\n';
        return 1;
    }
    if (o.as_json()) {
        ordered_json j;
        j["r"] = cert.r;
        j["d"] = cert.d;
        j["gamma"] = cert.gamma.str();
        j["boundary_value"] = cert.boundary_value.str();
        j["d_minus_n"] = cert.dn_difference.str();
        j["d_minus_n_factored"] = cert.dn_factored.str();
        out << j.dump() << '\n';
    } else {
        out << "Gamma(" << cert.r << ',' << cert.d << ") = " << cert.gamma.str() << '\n';
        out << "Gamma(" << cert.r << ',' << 2 * cert.r - 1 << ") = " << cert.boundary_value.str() << '\n';
        out << "D - N = " << cert.dn_difference.str() << " = (r-1)(r-2)(2r-1)(d-2r+3)\n";
        out << "Gamma < 1\n";
    }
    return 0;
}

int cmd_dim_syzygy(const Options& o, std::ostream& out)
{
    const std::int64_t dim = syzygy_space_dim(o.d, o.r);
    if (o.as_json()) {
        ordered_json j;
        j["d"] = o.d;
        j["r"] = o.r;
        j["dim"] = dim;
        out << j.dump() << '\n';
    } else {
        out << dim << '\n';
    }
    return 0;
}

int cmd_ninej(const Options& o, std::ostream& out)
{
    if (o.twice_j.size() != 9) {
        throw UsageError("--twice-j needs nine comma-separated integers");
    }
    std::array<int, 9> tw{};
    std::copy(o.twice_j.begin(), o.twice_j.end(), tw.begin());
    const NineJArray arr = NineJArray::from_twice(tw);
    const SurdSum value = wigner9j(arr);
    if (o.as_json()) {
        ordered_json j;
        j["array"] = arr.str();
        j["value"] = value.str();
        out << j.dump() << '\n';
    } else {
        out << value.str() << '\n';
    }
    return 0;
}

int cmd_ninej_combinant(const Options& o, std::ostream& out)
{
    const CombinantArrays arrays = combinant_9j_array(o.d, o.r, o.i, o.j);
    const SurdSum vb = wigner9j(arrays.b);
    const SurdSum vb_prime = wigner9j(arrays.b_prime);
    const bool equivalent = vb == vb_prime;
    const Rational th = theta(o.d, o.r, o.i, o.j);
    const auto ratio = ratio_to_single_surd(th, vb);
    const std::string ratio_text = ratio ? ratio->str() : "undefined";
    if (o.as_json()) {
        ordered_json j;
        j["B"] = arrays.b.str();
        j["B_prime"] = arrays.b_prime.str();
        j["value_B"] = vb.str();
        j["value_B_prime"] = vb_prime.str();
        j["equivalent"] = equivalent;
        j["single_term"] = vb.is_single_term();
        j["theta"] = th.str();
        j["theta_over_ninej"] = ratio_text;
        out << j.dump() << '\n';
    } else {
        out << "B  = " << arrays.b.str() << '\n';
        out << "B' = " << arrays.b_prime.str() << '\n';
        out << "9j(B)  = " << vb.str() << '\n';
        out << "9j(B') = " << vb_prime.str() << '\n';
        out << (equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
        out << "single radicand: " << (vb.is_single_term() ? "yes" : "no") << '\n';
        out << "theta / 9j(B) (exploratory) = " << ratio_text << '\n';
    }
    return equivalent ? 0 : 1;
}

void add_format(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--json", o.json, "Shorthand for --format json");
}

void add_forms(CLI::App* sub, Options& o)
{
    sub->add_option("--expr", o.exprs, "Form given inline, e.g. \"x1^2 - 3*x2^2\" (repeatable)");
    sub->add_option("files", o.files, "Files holding a form as an expression or JSON");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact transvectants, combinants and quadratic syzygies of binary forms", "pencil"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::function<int(const Options&, std::ostream&)> action;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        add_format(s, o);
        return s;
    };

    auto* transvect = sub("transvect", "q-th transvectant of two forms", cmd_transvect);
    add_forms(transvect, o);
    transvect->add_option("--q", o.q, "Transvectant order")->required();

    auto* combinants = sub("combinants", "Odd transvectants C1, C3, ... of a pencil", cmd_combinants);
    add_forms(combinants, o);
    combinants->add_option("--d", o.d, "Order of a random pencil (when no forms are given)");
    combinants->add_option("--seed", o.seed, "Random pencil seed");
    combinants->add_option("--bound", o.bound, "Coefficient bound")->check(CLI::PositiveNumber);

    auto* table = sub("syzygy-table", "Coefficients of the weight-2r syzygy", cmd_syzygy_table);
    table->add_option("--d", o.d)->required();
    table->add_option("--r", o.r)->required();

    auto* verify = sub("verify", "Check the syzygy on random pencils", cmd_verify);
    verify->add_option("--d", o.d)->required();
    verify->add_option("--r", o.r)->required();
    verify->add_option("--trials", o.trials, "Number of pencils; seeds seed..seed+trials-1");
    verify->add_option("--seed", o.seed, "First seed");
    verify->add_option("--bound", o.bound, "Coefficient bound")->check(CLI::PositiveNumber);

    auto* recover = sub("recover", "Rebuild C_{2r-1} from lower combinants", cmd_recover);
    add_forms(recover, o);
    recover->add_option("--d", o.d, "Order of a random pencil (when no forms are given)");
    recover->add_option("--r", o.r)->required();
    recover->add_option("--seed", o.seed, "Random pencil seed");
    recover->add_option("--bound", o.bound, "Coefficient bound")->check(CLI::PositiveNumber);

    auto* oracle = sub("oracle-theta", "Omega-process eigenvalue against the closed form", cmd_oracle_theta);
    oracle->add_option("--d", o.d)->required();
    oracle->add_option("--r", o.r)->required();
    oracle->add_option("--i", o.i)->required();
    oracle->add_option("--j", o.j)->required();
    oracle->add_option("--f", o.f, "Linear symbol coefficients p/q,p/q");
    oracle->add_flag("--large", o.large, "Allow d above " + std::to_string(kOracleDefaultMaxD));

    auto* gam = sub("gamma", "Gamma(r,d) with its positivity certificate", cmd_gamma);
    gam->add_option("--r", o.r)->required();
    gam->add_option("--d", o.d)->required();

    auto* dim = sub("dim-syzygy", "Dimension of the weight-2r syzygy space", cmd_dim_syzygy);
    dim->add_option("--d", o.d)->required();
    dim->add_option("--r", o.r)->required();

    auto* ninej = sub("ninej", "Exact 9-j symbol", cmd_ninej);
    ninej->add_option("--twice-j", o.twice_j, "Nine entries times two, row by row")->delimiter(',')->required();

    auto* ninej_comb = sub("ninej-combinant", "The arrays B, B' and their 9-j values", cmd_ninej_combinant);
    ninej_comb->add_option("--d", o.d)->required();
    ninej_comb->add_option("--r", o.r)->required();
    ninej_comb->add_option("--i", o.i)->required();
    ninej_comb->add_option("--j", o.j)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return action(o, out);
    } catch (const FormulaViolation& e) {
        err << "pencil: verification failed: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "pencil: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "pencil: " << e.what() << '\n';
        return 2;
    }
}

} // namespace pencil
