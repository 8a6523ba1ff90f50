#include "pseudoprim/cli.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/exls.hpp"
#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/serialization.hpp"
#include "pseudoprim/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pseudoprim::cli {

namespace {

using nlohmann::ordered_json;

/// Re-raises an input error with the flag or argument that caused it.
template <typename Fn>
auto for_flag(const std::string& flag, Fn&& fn)
{
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(flag + ": " + e.what());
    }
}

struct Common {
    std::string theta = "mirror";
    std::optional<std::size_t> alphabet;
    std::string format = "human";
    std::size_t jobs = 1;

    Involution involution() const
    {
        return for_flag("--theta", [&] { return Involution::parse(theta, alphabet.value_or(kDefaultAlphabetSize)); });
    }

    std::vector<Involution> involutions() const
    {
        if (theta == "all")
            return Involution::all(alphabet.value_or(kDefaultAlphabetSize));
        return {involution()};
    }

    bool jsonl() const { return format == "jsonl"; }
};

void add_theta(CLI::App* app, Common& c, bool allow_all = false)
{
    app->add_option("--theta", c.theta,
                    allow_all ? "involution: mirror, an image string such as ba, or all"
                              : "involution: mirror or an image string such as ba")
        ->capture_default_str();
    app->add_option("--alphabet", c.alphabet, "alphabet size (letters a, b, ...)")->check(CLI::Range(1, 26));
}

void add_format(CLI::App* app, Common& c)
{
    app->add_option("--format", c.format, "output mode")
        ->check(CLI::IsMember({"human", "jsonl"}))
        ->capture_default_str();
}

void add_jobs(CLI::App* app, Common& c)
{
    app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

Word parse_word(const Involution& theta, const std::string& text)
{
    return for_flag("<word>", [&] { return Alphabet(theta.alphabet_size()).parse(text); });
}

std::string show(const Word& w)
{
    return Alphabet(w.alphabet_size()).format(w);
}

std::string letters(const Word& w)
{
    return Alphabet(w.alphabet_size()).letters(w);
}

/// Writes to the file named by --out, or to `out` when none is given.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
        : stream_(&fallback)
    {
        if (path.empty())
            return;
        file_.open(path);
        require(file_.good(), "--out: cannot open '" + path + "' for writing");
        stream_ = &file_;
    }

    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// Roots.

int cmd_root(const Common& c, const std::string& text, std::ostream& out)
{
    const auto theta = c.involution();
    const Word w = parse_word(theta, text);
    require(!w.empty(), "<word>: must be non-empty");
    const auto r = primitive_root(w);
    if (c.jsonl())
        out << ordered_json{{"word", letters(w)}, {"root", letters(r.root)}, {"exponent", r.exponent}}.dump() << '\n';
    else
        out << show(r.root) << ' ' << r.exponent << '\n';
    return ok;
}

int cmd_theta_root(const Common& c, const std::string& text, std::ostream& out)
{
    const auto theta = c.involution();
    const Word w = parse_word(theta, text);
    require(!w.empty(), "<word>: must be non-empty");
    const auto d = theta_primitive_root(theta, w);
    if (c.jsonl())
        out << ordered_json{{"word", letters(w)},
                            {"theta", theta.spec()},
                            {"root", letters(d.root)},
                            {"signs", format_signs(d.signs)}}
                   .dump()
            << '\n';
    else
        out << show(d.root) << ' ' << bracket_signs(d.signs) << '\n';
    return ok;
}

int cmd_is_theta_primitive(const Common& c, const std::string& text, std::ostream& out)
{
    const auto theta = c.involution();
    const Word w = parse_word(theta, text);
    require(!w.empty(), "<word>: must be non-empty");
    const bool result = is_theta_primitive(theta, w);
    if (c.jsonl())
        out << ordered_json{{"word", letters(w)}, {"theta", theta.spec()}, {"theta_primitive", result}}.dump() << '\n';
    else
        out << (result ? "true" : "false") << '\n';
    return ok;
}

// ---------------------------------------------------------------------------
// Verifier.

struct CheckArgs {
    std::string target;
    bool list = false;
    bool sharpness = false;
    std::optional<std::size_t> max_len, max_x, max_u, max_product, max_blocks;
    std::size_t max_witnesses = 8;
};

Bounds check_bounds(const Common& c, const CheckArgs& a)
{
    Bounds b;
    b.alphabet_size = c.alphabet.value_or(kDefaultAlphabetSize);
    if (a.max_len) {
        // One knob for all caps, keeping the default proportions.
        b.max_x = *a.max_len;
        b.max_u = 2 * *a.max_len;
        b.max_product = 4 * *a.max_len;
    }
    b.max_x = a.max_x.value_or(b.max_x);
    b.max_u = a.max_u.value_or(b.max_u);
    b.max_product = a.max_product.value_or(b.max_product);
    b.max_blocks = a.max_blocks.value_or(b.max_blocks);
    return b;
}

void print_report(const PropertyReport& r, bool jsonl, std::ostream& out)
{
    if (jsonl) {
        out << report_to_jsonl(r) << '\n';
        return;
    }
    out << (r.expected ? "PASS " : "FAIL ") << r.id << "  universe=" << r.universe_size
        << " violations=" << r.violation_count;
    if (r.sharpness)
        out << " sharpness" << (r.gated ? "" : " (not gated)");
    out << "  " << static_cast<long long>(r.elapsed_ms) << " ms\n";
    for (const auto& w : r.violations)
        out << "    " << format_witness(w) << '\n';
}

int cmd_check(const Common& c, const CheckArgs& a, std::ostream& out)
{
    if (a.list) {
        for (const auto& info : list_properties()) {
            if (c.jsonl())
                out << ordered_json{{"id", info.id},
                                    {"statement", info.statement},
                                    {"has_threshold", info.has_threshold},
                                    {"sharpness_gated", info.sharpness_gated}}
                           .dump()
                    << '\n';
            else
                out << info.id << (info.has_threshold ? " [threshold]" : "") << "  " << info.statement << '\n';
        }
        return ok;
    }
    require(!a.target.empty(), "<property>: give a property id or 'all' (see --list)");
    const Bounds bounds = check_bounds(c, a);
    const CheckOptions options{a.sharpness, c.jobs, a.max_witnesses};
    std::vector<PropertyReport> reports;
    if (a.target == "all") {
        for (const auto& info : list_properties()) {
            if (a.sharpness && !info.has_threshold)
                continue;
            reports.push_back(check_property(info.id, bounds, options));
            print_report(reports.back(), c.jsonl(), out);
            out.flush();
        }
    } else {
        reports.push_back(for_flag("<property>", [&] { return check_property(a.target, bounds, options); }));
        print_report(reports.back(), c.jsonl(), out);
    }
    const bool all_expected = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.expected; });
    if (!c.jsonl() && reports.size() > 1) {
        const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.expected; });
        out << passed << '/' << reports.size() << " properties as expected\n";
    }
    return all_expected ? ok : failure;
}

int cmd_replay(const std::string& id, const std::string& text, std::ostream& out)
{
    const auto j = for_flag("<witness>", [&] {
        try {
            return ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(e.what());
        }
    });
    require(j.is_object(), "<witness>: must be a JSON object of string fields");
    Witness w;
    for (const auto& [key, value] : j.items()) {
        require(value.is_string(), "<witness>: field '" + key + "' must be a string");
        w.emplace_back(key, value.get<std::string>());
    }
    const bool violated = for_flag("<witness>", [&] { return replay(id, w); });
    out << (violated ? "violation confirmed" : "no violation") << '\n';
    return violated ? failure : ok;
}

// ---------------------------------------------------------------------------
// ExLS equations.

struct ExlsArgs {
    std::size_t l = 0, n = 0, m = 0;
    std::size_t max_v = 6, max_w = 6;
    std::string out_path;
    std::string family;
    std::optional<std::int64_t> p_n, p_m, p_i, p_j;
    std::string input = "-";
};

void print_instance_human(const ExlsInstance& inst, std::ostream& out)
{
    out << to_string(inst.triple()) << " theta=" << inst.theta.name() << " u=" << show(inst.u)
        << " v=" << show(inst.v) << " w=" << show(inst.w) << " u_signs=" << bracket_signs(inst.pattern.u)
        << " v_signs=" << bracket_signs(inst.pattern.v) << " w_signs=" << bracket_signs(inst.pattern.w);
}

int cmd_search(const Common& c, const ExlsArgs& a, std::ostream& out)
{
    const Triple triple{a.l, a.n, a.m};
    Sink sink(a.out_path, out);
    std::size_t total = 0;
    for (const auto& theta : c.involutions()) {
        const auto records = exls_search(theta, triple, {a.max_v, a.max_w}, c.jobs);
        total += records.size();
        for (const auto& rec : records) {
            if (c.jsonl()) {
                *sink << record_to_jsonl(rec) << '\n';
            } else {
                print_instance_human(rec.instance, *sink);
                *sink << '\n';
            }
        }
    }
    if (!c.jsonl())
        *sink << total << " counterexample(s) for " << to_string(triple) << " within max_v=" << a.max_v
              << " max_w=" << a.max_w << '\n';
    return ok;
}

int cmd_gen(const Common& c, const ExlsArgs& a, std::ostream& out)
{
    std::map<std::string, std::int64_t> params;
    const std::pair<const char*, const std::optional<std::int64_t>*> given[] = {
        {"n", &a.p_n}, {"m", &a.p_m}, {"i", &a.p_i}, {"j", &a.p_j}};
    for (const auto& [name, value] : given)
        if (value->has_value())
            params[name] = **value;
    const auto inst = gen_example(a.family, params);
    std::string provenance = "gen " + a.family;
    for (const auto& [name, value] : params)
        provenance += " " + name + "=" + std::to_string(value);
    const CounterexampleRecord rec{inst, provenance};
    Sink sink(a.out_path, out);
    if (c.jsonl()) {
        *sink << record_to_jsonl(rec) << '\n';
    } else {
        print_instance_human(inst, *sink);
        *sink << "\nequation holds, no common theta-root\n";
    }
    return ok;
}

int cmd_classify(const Common& c, const ExlsArgs& a, std::ostream& out)
{
    const Triple triple{a.l, a.n, a.m};
    const auto thetas = c.involutions();
    const auto result = classify_triple(thetas, triple, {a.max_v, a.max_w}, c.jobs);
    if (c.jsonl()) {
        ordered_json j{{"l", triple.l},     {"n", triple.n},
                       {"m", triple.m},     {"max_v", a.max_v},
                       {"max_w", a.max_w},  {"thetas", ordered_json::array()},
                       {"status", to_string(result.status)}, {"counterexamples", result.records.size()}};
        for (const auto& theta : thetas)
            j["thetas"].push_back(theta.spec());
        if (!result.records.empty())
            j["example"] = record_to_json(result.records.front());
        out << j.dump() << '\n';
    } else {
        out << to_string(triple) << ' ' << to_string(result.status) << " (" << result.records.size()
            << " counterexample(s) within max_v=" << a.max_v << " max_w=" << a.max_w << ")\n";
        if (!result.records.empty()) {
            out << "  e.g. ";
            print_instance_human(result.records.front().instance, out);
            out << '\n';
        }
    }
    return ok;
}

int cmd_verify(const Common& c, const ExlsArgs& a, std::ostream& out)
{
    std::vector<CounterexampleRecord> records;
    if (a.input == "-") {
        records = read_records(std::cin);
    } else {
        std::ifstream in(a.input);
        require(in.good(), "<file>: cannot open '" + a.input + "'");
        records = for_flag("<file>", [&] { return read_records(in); });
    }
    std::size_t rejected = 0;
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        const auto& inst = records[idx].instance;
        const bool holds = exls_holds(inst);
        const auto witness = theta_periodicity_witness(inst.theta, inst.u, inst.v, inst.w);
        const bool confirmed = holds && !witness;
        rejected += confirmed ? 0 : 1;
        if (c.jsonl()) {
            ordered_json j{{"index", idx}, {"holds", holds}, {"witness", nullptr},
                           {"verdict", confirmed ? "confirmed" : "rejected"}};
            if (witness)
                j["witness"] = letters(*witness);
            out << j.dump() << '\n';
        } else {
            out << (confirmed ? "confirmed " : "rejected  ") << idx << ": ";
            print_instance_human(inst, out);
            if (!holds)
                out << "  (equation fails)";
            if (witness)
                out << "  (common root " << show(*witness) << ')';
            out << '\n';
        }
    }
    if (!c.jsonl())
        out << records.size() - rejected << '/' << records.size() << " record(s) confirmed\n";
    return rejected == 0 ? ok : failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pseudo-primitive words, theta-roots and extended Lyndon-Schützenberger equations", "pseudoprim"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    Common common;
    std::string word_arg;

    auto* root = app.add_subcommand("root", "primitive root and exponent of a word");
    root->add_option("word", word_arg, "the word")->required();
    add_theta(root, common);
    add_format(root, common);

    auto* theta_root = app.add_subcommand("theta-root", "theta-primitive root and block signs of a word");
    theta_root->add_option("word", word_arg, "the word")->required();
    add_theta(theta_root, common);
    add_format(theta_root, common);

    auto* is_tp = app.add_subcommand("is-theta-primitive", "whether a word is theta-primitive");
    is_tp->add_option("word", word_arg, "the word")->required();
    add_theta(is_tp, common);
    add_format(is_tp, common);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "run registered properties over bounded universes");
    check->add_option("property", check_args.target, "property id or 'all'");
    check->add_flag("--list", check_args.list, "list the registry");
    check->add_flag("--sharpness", check_args.sharpness, "lower each threshold by one");
    check->add_option("--alphabet", common.alphabet, "alphabet size")->check(CLI::Range(1, 26));
    check->add_option("--max-len", check_args.max_len, "sets max-x to N, max-u to 2N, max-product to 4N")
        ->check(CLI::PositiveNumber);
    check->add_option("--max-x", check_args.max_x, "cap on generators, v and w")->check(CLI::PositiveNumber);
    check->add_option("--max-u", check_args.max_u, "cap on single words")->check(CLI::PositiveNumber);
    check->add_option("--max-product", check_args.max_product, "cap on products")->check(CLI::PositiveNumber);
    check->add_option("--max-blocks", check_args.max_blocks, "cap on factors per product")->check(CLI::PositiveNumber);
    check->add_option("--max-witnesses", check_args.max_witnesses, "violations listed per property")
        ->capture_default_str();
    add_format(check, common);
    add_jobs(check, common);

    std::string replay_id, replay_witness;
    auto* replay_cmd = app.add_subcommand("replay", "re-evaluate one witness against a property");
    replay_cmd->add_option("property", replay_id, "property id")->required();
    replay_cmd->add_option("witness", replay_witness, "JSON object of witness fields")->required();

    ExlsArgs exls_args;
    auto* exls = app.add_subcommand("exls", "extended Lyndon-Schützenberger equations");
    exls->require_subcommand(1);

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("--l", exls_args.l, "number of u factors")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n", exls_args.n, "number of v factors")->required()->check(CLI::PositiveNumber);
        sub->add_option("--m", exls_args.m, "number of w factors")->required()->check(CLI::PositiveNumber);
        sub->add_option("--max-v", exls_args.max_v, "longest v")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--max-w", exls_args.max_w, "longest w")->check(CLI::PositiveNumber)->capture_default_str();
        add_jobs(sub, common);
    };

    auto* search = exls->add_subcommand("search", "counterexamples for one triple");
    add_triple(search);
    add_theta(search, common, true);
    search->add_option("--format", common.format, "output mode")->check(CLI::IsMember({"human", "jsonl"}));
    search->add_option("--out", exls_args.out_path, "write records to this file");

    auto* gen = exls->add_subcommand("gen", "one instance of a known solution family");
    gen->add_option("family", exls_args.family, "ls2, ls33m, ls33shift or ls34even")->required();
    gen->add_option("--n", exls_args.p_n, "family parameter n");
    gen->add_option("--m", exls_args.p_m, "family parameter m");
    gen->add_option("--i", exls_args.p_i, "family parameter i");
    gen->add_option("--j", exls_args.p_j, "family parameter j");
    gen->add_option("--format", common.format, "output mode")->check(CLI::IsMember({"human", "jsonl"}));
    gen->add_option("--out", exls_args.out_path, "write the record to this file");

    auto* classify = exls->add_subcommand("classify", "bounded classification of one triple");
    add_triple(classify);
    add_theta(classify, common, true);
    add_format(classify, common);

    auto* verify = exls->add_subcommand("verify", "re-check counterexample records");
    verify->add_option("file", exls_args.input, "JSON lines file, or - for stdin")->capture_default_str();
    add_format(verify, common);

    // Search and gen emit records by default.
    for (auto* sub : {search, gen})
        sub->preparse_callback([&](std::size_t) { common.format = "jsonl"; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        // Help for a subcommand is raised from inside it; CLI11 reports that
        // through the same exception types, so inspect the exit code.
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            std::ostringstream help;
            app.exit(e, help, help);
            out << help.str();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (root->parsed())
            return cmd_root(common, word_arg, out);
        if (theta_root->parsed())
            return cmd_theta_root(common, word_arg, out);
        if (is_tp->parsed())
            return cmd_is_theta_primitive(common, word_arg, out);
        if (check->parsed())
            return cmd_check(common, check_args, out);
        if (replay_cmd->parsed())
            return cmd_replay(replay_id, replay_witness, out);
        if (search->parsed())
            return cmd_search(common, exls_args, out);
        if (gen->parsed())
            return cmd_gen(common, exls_args, out);
        if (classify->parsed())
            return cmd_classify(common, exls_args, out);
        if (verify->parsed())
            return cmd_verify(common, exls_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ContradictionError& e) {
        err << "internal contradiction: " << e.what() << '\n';
        return failure;
    }
    err << "error: no subcommand\n";
    return usage;
}

} // namespace pseudoprim::cli
