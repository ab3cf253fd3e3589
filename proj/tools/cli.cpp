#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/channels.hpp"
#include "reconlab/code.hpp"
#include "reconlab/decoders.hpp"
#include "reconlab/error.hpp"
#include "reconlab/probelab.hpp"
#include "reconlab/serialization.hpp"
#include "suites.hpp"

namespace reconlab::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Common {
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    Format fmt() const {
        if (format == "csv") return Format::Csv;
        if (format == "text") return Format::Text;
        return Format::Json;
    }
};

struct ModelFlags {
    std::string kind = "substitution";
    std::size_t t = 0;
    std::optional<std::size_t> te;
    std::optional<std::size_t> ts;

    void add_to(CLI::App* app) {
        app->add_option("--kind", kind, "Error model")
            ->check(CLI::IsMember({"substitution", "erasure", "erasure-substitution", "deletion", "insertion"}));
        app->add_option("--t", t, "Error budget (erasures for the erasure model)");
        app->add_option("--te", te, "Erasure budget of the erasure-substitution model");
        app->add_option("--ts", ts, "Substitution budget of the erasure-substitution model");
    }

    ErrorModel model() const {
        switch (parse_error_kind(kind)) {
            case ErrorKind::Substitution: return ErrorModel::substitution(t);
            case ErrorKind::Erasure: return ErrorModel::erasure(te.value_or(t));
            case ErrorKind::ErasureSubstitution:
                require(te.has_value() && ts.has_value(), "the erasure-substitution model needs --te and --ts");
                return ErrorModel::erasure_substitution(*te, *ts);
            case ErrorKind::Deletion: return ErrorModel::deletion(t);
            case ErrorKind::Insertion: return ErrorModel::insertion(t);
        }
        throw InternalError("unhandled error kind");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << text;
}

ordered_json words_json(const std::vector<Word>& words) {
    ordered_json a = ordered_json::array();
    for (const Word& w : words) a.push_back(to_string(w));
    return a;
}

std::string str(const BigCount& v) { return v.get_str(); }

std::string csv_cell(const ordered_json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        return quoted + "\"";
    }
    return s;
}

// Emits a JSON value. Arrays of flat objects become CSV tables; objects holding
// such an array under "rows" or "instances" emit that table in CSV mode.
void emit(std::ostream& out, const ordered_json& value, Format fmt) {
    if (fmt == Format::Json) {
        out << value.dump(2) << '\n';
        return;
    }
    const ordered_json* rows = nullptr;
    if (value.is_array()) {
        rows = &value;
    } else if (value.is_object()) {
        for (const char* key : {"rows", "instances", "words", "candidates"}) {
            if (value.contains(key) && value.at(key).is_array()) {
                rows = &value.at(key);
                break;
            }
        }
    }
    if (fmt == Format::Csv && rows != nullptr) {
        if (!rows->empty() && rows->front().is_object()) {
            bool first = true;
            for (const auto& [k, _] : rows->front().items()) {
                out << (first ? "" : ",") << csv_cell(k);
                first = false;
            }
            out << '\n';
            for (const auto& row : *rows) {
                first = true;
                for (const auto& [_, v] : row.items()) {
                    out << (first ? "" : ",") << csv_cell(v);
                    first = false;
                }
                out << '\n';
            }
        } else {
            for (const auto& v : *rows) out << csv_cell(v) << '\n';
        }
        return;
    }
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) {
            if (v.is_array()) {
                out << k << ":\n";
                for (const auto& item : v) out << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
            } else {
                out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
        return;
    }
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

ordered_json outcome_json(const DecodeOutcome& outcome) { return ordered_json::parse(outcome_to_json(outcome)); }

ordered_json estimate_json(const ProbEstimate& p) {
    ordered_json j;
    j["p_hat"] = p.p_hat;
    j["successes"] = p.successes;
    j["trials"] = p.trials;
    j["ci95_halfwidth"] = p.ci95_halfwidth;
    if (p.exact) j["exact"] = to_string(*p.exact);
    j["regime"] = std::string(to_string(p.regime));
    return j;
}

// ---------------------------------------------------------------- bounds

struct BoundsCmd {
    long long n = 0;
    unsigned q = 2;
    long long e = 0;
    std::optional<long long> t, ell, N, d, te, ts, a, M;
    std::string eps = "1";

    void setup(CLI::App* app) {
        app->add_option("--n", n, "Word length")->required();
        app->add_option("--q", q, "Alphabet size")->required();
        app->add_option("--e", e, "Correction radius e")->capture_default_str();
        app->add_option("--t", t, "Total error budget t = e + l");
        app->add_option("--ell", ell, "Excess errors l");
        app->add_option("--N", N, "Number of channels (erasure list size)");
        app->add_option("--d", d, "Minimum distance (erasure list size, N')");
        app->add_option("--te", te, "Erasure budget for N'");
        app->add_option("--ts", ts, "Substitution budget for N'");
        app->add_option("--a", a, "List-decoding offset a (q = 2)");
        app->add_option("--eps", eps, "Slack epsilon for N_{t,e,a}, as p, p/q or decimal")->capture_default_str();
        app->add_option("--M", M, "List-ball cap M for the binary list caps");
    }

    ordered_json run() const {
        require(n >= 0 && e >= 0, "n and e must be nonnegative");
        ordered_json j;
        std::optional<long long> l = ell;
        if (t) {
            require(*t >= e, "t must be at least e");
            require(!ell || *ell == *t - e, "--t and --ell disagree");
            l = *t - e;
        }
        if (l && *l >= 1) {
            const long long tt = e + *l;
            const auto th = majority_thresholds(n, q, e, *l);
            j["N_te"] = str(th.channels);
            j["tau_prime"] = to_string(th.tau_prime);
            j["tau"] = to_string(th.tau);
            j["ball_volume"] = str(ball_volume(n, q, tt));
            const auto cl = constant_list_bounds(n, q, e, *l);
            ordered_json c;
            c["threshold"] = str(cl.threshold);
            c["list_cap"] = cl.list_cap ? ordered_json(str(*cl.list_cap)) : ordered_json("not-established");
            c["lower_bound"] = str(cl.lower_bound);
            j["constant_list"] = c;
            if (a) {
                require(q == 2, "N_{t,e,a} and the binary list caps need q = 2");
                const Rational r = parse_rational(eps);
                const auto lt = list_thresholds(n, e, *l, *a, r);
                ordered_json lj;
                lj["a"] = *a;
                lj["eps"] = to_string(r);
                lj["N_tea"] = str(lt.channels);
                lj["tau_prime"] = to_string(lt.tau_prime);
                lj["tau"] = to_string(lt.tau);
                if (M) {
                    const auto caps = binary_list_caps(n, e, *l, *a, big(*M));
                    lj["cap_simple"] = str(caps.cap_simple);
                    lj["cap_refined"] = caps.cap_refined ? ordered_json(str(*caps.cap_refined))
                                                         : ordered_json("not-applicable");
                    lj["b"] = str(caps.b);
                }
                j["list_decoding"] = lj;
            }
        } else if (l) {
            require(*l >= 0, "l must be nonnegative");
            j["ball_volume"] = str(ball_volume(n, q, e + *l));
        }
        if (N) {
            require(t.has_value() || l.has_value(), "the erasure list size needs --t");
            const long long tt = e + l.value_or(0);
            ordered_json ej;
            const auto full = erasure_list_size(n, q, tt, big(*N), std::nullopt, Limits::from_env());
            ej["a"] = full.a;
            ej["L"] = str(full.list_size);
            if (d) {
                require(*d >= 1, "d must be positive");
                const auto md = erasure_list_size(n, q, tt, big(*N), static_cast<std::size_t>(*d), Limits::from_env());
                ej["L_min_distance"] = str(md.list_size);
            }
            j["erasure_list"] = ej;
        }
        if (te || ts) {
            require(te && ts && d, "N' needs --te, --ts and --d");
            j["N_prime"] = str(era_sub_channels(n, q, *te, *ts, *d));
            j["mixed_volume"] = str(mixed_volume(n, q, *te, *ts));
        }
        ordered_json p;
        p["n"] = n;
        p["q"] = q;
        p["e"] = e;
        if (l) {
            p["ell"] = *l;
            p["t"] = e + *l;
        }
        j["params"] = p;
        return j;
    }
};

// ---------------------------------------------------------------- ball / intersect

struct BallCmd {
    unsigned q = 2;
    std::vector<std::string> centers;
    ModelFlags model;
    bool list = true;

    void setup(CLI::App* app, bool many) {
        app->add_option("--q", q, "Alphabet size")->required();
        auto* opt = app->add_option("--x", centers, many ? "Ball centers (repeat)" : "Ball center")->required();
        if (!many) opt->expected(1);
        model.add_to(app);
        app->add_flag("!--count-only", list, "Only report the size");
    }

    ordered_json run() const {
        const ErrorModel m = model.model();
        std::vector<BallSpec> specs;
        for (const auto& c : centers) specs.push_back(BallSpec{m, parse_word(c, q)});
        const auto words = specs.size() == 1 ? enumerate_ball(specs.front(), Limits::from_env().ball_words)
                                             : intersection(specs, Limits::from_env().ball_words);
        ordered_json j;
        j["size"] = words.size();
        if (list) j["words"] = words_json(words);
        return j;
    }
};

// ---------------------------------------------------------------- simulate

struct SimulateCmd {
    unsigned q = 2;
    std::string x;
    ModelFlags model;
    std::size_t N = 1;
    bool multiset = false;
    std::uint64_t stream = 0;
    std::string out_path;

    void setup(CLI::App* app) {
        app->add_option("--q", q, "Alphabet size")->required();
        app->add_option("--x", x, "Transmitted word")->required();
        model.add_to(app);
        app->add_option("--N", N, "Number of channels")->required();
        app->add_flag("--multiset", multiset, "Independent draws (outputs may repeat)");
        app->add_option("--trial", stream, "Trial index selecting the random stream")->capture_default_str();
        app->add_option("--out", out_path, "Also write the batch to this file");
    }

    ordered_json run(const Common& c) const {
        const OutputBatch b = transmit(parse_word(x, q), model.model(), N, multiset, c.seed, stream);
        const std::string text = batch_to_json(b);
        if (!out_path.empty()) write_file(out_path, text + "\n");
        return ordered_json::parse(text);
    }
};

// ---------------------------------------------------------------- decode

struct DecodeCmd {
    std::string alg = "brute";
    std::string batch_path;
    std::string code_path;
    std::optional<unsigned> q;
    std::optional<std::size_t> n;
    std::vector<std::string> ys;
    ModelFlags model;
    bool multiset = false;
    std::size_t e = 1;
    std::size_t ell = 1;
    std::size_t a = 0;
    std::string eps = "1";
    std::optional<std::size_t> M;

    void setup(CLI::App* app) {
        app->add_option("--alg", alg, "Decoder")
            ->check(CLI::IsMember({"majority", "list", "erasure", "insertion-pair", "brute"}))
            ->capture_default_str();
        app->add_option("--batch", batch_path, "OutputBatch JSON file");
        app->add_option("--code", code_path, "Code file (default: the whole space)");
        app->add_option("--q", q, "Alphabet size for inline outputs");
        app->add_option("--n", n, "Transmitted length for inline outputs");
        app->add_option("--y", ys, "Inline output word (repeat)");
        model.add_to(app);
        app->add_flag("--multiset", multiset, "Inline outputs use multiset semantics");
        app->add_option("--e", e, "Correction radius (majority, list)")->capture_default_str();
        app->add_option("--ell", ell, "Excess errors l (majority, list)")->capture_default_str();
        app->add_option("--a", a, "List offset a (list)")->capture_default_str();
        app->add_option("--eps", eps, "Slack epsilon (list)")->capture_default_str();
        app->add_option("--M", M, "List-ball cap M (list; computed exhaustively when omitted)");
    }

    OutputBatch batch() const {
        if (!batch_path.empty()) {
            require(ys.empty(), "use either --batch or --y");
            return batch_from_json(read_file(batch_path));
        }
        require(!ys.empty(), "decode needs --batch or at least one --y");
        require(q.has_value(), "inline outputs need --q");
        OutputBatch b;
        b.q = *q;
        b.model = model.model();
        b.multiset = multiset;
        for (const auto& y : ys) b.outputs.push_back(parse_word(y, *q));
        if (n) {
            b.n = *n;
        } else {
            require(b.model.kind != ErrorKind::Deletion && b.model.kind != ErrorKind::Insertion,
                    "deletion and insertion outputs need --n");
            b.n = b.outputs.front().size();
        }
        b.validate();
        return b;
    }

    ordered_json run() const {
        const OutputBatch b = batch();
        std::optional<Code> code;
        if (!code_path.empty()) code.emplace(code_from_text(read_file(code_path)));
        const CodeRef ref = code ? CodeRef{std::cref(*code)} : CodeRef{FullSpace{b.q, b.n}};
        const Limits limits = Limits::from_env();
        DecodeOutcome out;
        if (alg == "brute") {
            out = reconstruction_list(b, ref, limits.ball_words);
        } else if (alg == "majority") {
            require(code.has_value(), "the majority decoder needs --code");
            out = algorithm1_decode(b, *code, e, ell, limits);
        } else if (alg == "list") {
            require(code.has_value(), "the list decoder needs --code");
            ListDecodeParams p;
            p.e = e;
            p.ell = ell;
            p.a = a;
            p.eps = parse_rational(eps);
            p.max_list = M ? *M : list_ball_cap(*code, e + a, limits);
            out = algorithm2_list_decode(b, *code, p, limits);
        } else if (alg == "erasure") {
            out = erasure_resolve(b, ref, limits);
        } else {
            require(b.outputs.size() >= 2, "the insertion pair decoder needs two outputs");
            out = insertion_pair_decode(b.outputs[0], b.outputs[1], b.n);
        }
        return outcome_json(out);
    }
};

// ---------------------------------------------------------------- code

struct CodeCmd {
    std::string code_path;
    std::size_t n = 0, e = 1, ell = 1;
    unsigned q = 2;
    std::string out_path, batch_out;

    ordered_json code_json(const Code& c) const {
        ordered_json j;
        j["q"] = c.q();
        j["n"] = c.n();
        j["size"] = c.size();
        j["min_distance"] = c.min_distance() ? ordered_json(*c.min_distance()) : ordered_json(nullptr);
        j["correction_radius"] = c.correction_radius();
        j["words"] = words_json(c.words());
        return j;
    }

    ordered_json check() const { return code_json(code_from_text(read_file(code_path))); }

    ordered_json make_cw() const {
        const Code c = constant_weight_code(n, e, q);
        if (!out_path.empty()) write_file(out_path, code_to_text(c));
        return code_json(c);
    }

    ordered_json make_adversarial() const {
        const auto inst = adversarial_code(e, ell, q);
        if (!out_path.empty()) write_file(out_path, code_to_text(inst.code));
        if (!batch_out.empty()) write_file(batch_out, batch_to_json(inst.outputs) + "\n");
        ordered_json j = code_json(inst.code);
        j["outputs"] = words_json(inst.outputs.outputs);
        return j;
    }
};

// ---------------------------------------------------------------- verify

struct VerifyCmd {
    std::string suite;
    SuiteGrid grid;

    void setup(CLI::App* app) {
        app->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
        app->add_option("--max-n", grid.max_n, "Largest word length in the grid (0 = suite default)");
        app->add_option("--max-q", grid.max_q, "Largest alphabet in the grid (0 = suite default)");
        app->add_option("--trials", grid.trials, "Trials for randomized suites (0 = suite default)");
    }
};

// ---------------------------------------------------------------- experiment

struct ExperimentCmd {
    std::vector<unsigned> q_list;
    std::uint64_t trials = 10000;
    std::size_t n = 4, t = 2, N = 2;
    std::string x;
    unsigned q = 3, q_prime = 7;
    std::string kind = "deletion";
    bool exact = true;

    ordered_json pprime(const Common& c) const {
        const auto qs = q_list.empty() ? std::vector<unsigned>{2, 3, 4, 5} : q_list;
        ordered_json rows = ordered_json::array();
        const Limits limits = Limits::from_env();
        for (unsigned qq : qs) {
            const Word x0 = Word::zeros(qq, 2);
            const auto m = ErrorModel::substitution(1);
            ordered_json r;
            r["q"] = qq;
            r["closed_form"] = to_string(worked_example_Pprime(qq));
            const BigCount batches = ipow(1 + 2 * (static_cast<long long>(qq) - 1), 3);
            if (exact && batches <= BigCount(std::to_string(limits.exact_batches))) {
                const auto ex = unique_recovery_prob(x0, m, 3, 0, c.seed, ProbMode::Exact, std::nullopt, c.jobs, limits);
                r["exact"] = to_string(*ex.exact);
            } else {
                r["exact"] = "skipped";
            }
            const auto mc = unique_recovery_prob(x0, m, 3, trials, c.seed, ProbMode::MonteCarlo, std::nullopt, c.jobs,
                                                 limits);
            r["p_hat"] = mc.p_hat;
            r["ci95_halfwidth"] = mc.ci95_halfwidth;
            r["trials"] = mc.trials;
            rows.push_back(r);
        }
        ordered_json j;
        j["experiment"] = "pprime";
        j["rows"] = rows;
        return j;
    }

    ordered_json sweep(const Common& c) const {
        const auto qs = q_list.empty() ? std::vector<unsigned>{8, 16, 32, 64, 128, 256} : q_list;
        const auto rows = insertion_qsweep(n, t, N, qs, trials, c.seed, c.jobs);
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json o;
            o["q"] = r.q;
            o["p_hat"] = r.unique.p_hat;
            o["ci95_halfwidth"] = r.unique.ci95_halfwidth;
            o["lower_bound"] = r.lower_bound;
            o["pair_success"] = r.pair_success.p_hat;
            o["pair_wrong"] = r.pair_wrong;
            o["trials"] = r.unique.trials;
            arr.push_back(o);
        }
        ordered_json j;
        j["experiment"] = "insertion-sweep";
        j["n"] = n;
        j["t"] = t;
        j["N"] = N;
        j["rows"] = arr;
        return j;
    }

    ordered_json pin() const {
        const Rational p = substitution_pin_prob(n, t, N);
        ordered_json j;
        j["experiment"] = "pin-prob";
        j["P"] = to_string(p);
        j["one_minus_P"] = to_string(Rational(1) - p);
        return j;
    }

    ordered_json invariance(const Common& c) const {
        require(!x.empty(), "q-invariance needs --x");
        const ErrorModel m = kind == "erasure" ? ErrorModel::erasure(t) : ErrorModel::deletion(t);
        require(kind == "erasure" || kind == "deletion", "--kind must be deletion or erasure");
        const auto r = deletion_q_invariance(parse_word(x, q), q_prime, m, N, trials, c.seed, c.jobs);
        ordered_json j;
        j["experiment"] = "q-invariance";
        j["balls_identical"] = r.balls_identical;
        j["p_q"] = estimate_json(r.p_q);
        j["p_q_prime"] = estimate_json(r.p_q_prime);
        j["equal"] = r.p_q.successes == r.p_q_prime.successes;
        return j;
    }
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reconlab: sequence reconstruction toolkit", "reconlab"};
    app.fallthrough();
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", common.seed, "Random seed")->capture_default_str();
    app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

    std::function<ordered_json()> action;
    bool verify_mode = false;
    bool failed_suite = false;

    BoundsCmd bounds;
    auto* bounds_app = app.add_subcommand("bounds", "Evaluate the closed-form channel counts and list sizes");
    bounds.setup(bounds_app);
    bounds_app->callback([&] { action = [&] { return bounds.run(); }; });

    BallCmd ball;
    auto* ball_app = app.add_subcommand("ball", "Enumerate an error ball");
    ball.setup(ball_app, false);
    ball_app->callback([&] { action = [&] { return ball.run(); }; });

    BallCmd inter;
    auto* inter_app = app.add_subcommand("intersect", "Intersect error balls around several centers");
    inter.setup(inter_app, true);
    inter_app->callback([&] { action = [&] { return inter.run(); }; });

    SimulateCmd sim;
    auto* sim_app = app.add_subcommand("simulate", "Transmit a word through N channels");
    sim.setup(sim_app);
    sim_app->callback([&] { action = [&] { return sim.run(common); }; });

    DecodeCmd dec;
    auto* dec_app = app.add_subcommand("decode", "Decode an output batch");
    dec.setup(dec_app);
    dec_app->callback([&] { action = [&] { return dec.run(); }; });

    CodeCmd code;
    auto* code_app = app.add_subcommand("code", "Inspect or construct codes");
    code_app->require_subcommand(1);
    auto* check_app = code_app->add_subcommand("check", "Verify a code file and report its distance");
    check_app->add_option("--code", code.code_path, "Code file")->required();
    check_app->callback([&] { action = [&] { return code.check(); }; });
    auto* cw_app = code_app->add_subcommand("make-cw", "Constant-weight code C_e^n");
    cw_app->add_option("--n", code.n, "Length")->required();
    cw_app->add_option("--e", code.e, "Correction radius")->required();
    cw_app->add_option("--q", code.q, "Alphabet size")->capture_default_str();
    cw_app->add_option("--out", code.out_path, "Write the code file here");
    cw_app->callback([&] { action = [&] { return code.make_cw(); }; });
    auto* adv_app = code_app->add_subcommand("make-adversarial", "The (q-1)l+1 word code and its output set Y");
    adv_app->add_option("--e", code.e, "Correction radius")->required();
    adv_app->add_option("--ell", code.ell, "Excess errors l")->required();
    adv_app->add_option("--q", code.q, "Alphabet size")->required();
    adv_app->add_option("--out", code.out_path, "Write the code file here");
    adv_app->add_option("--batch-out", code.batch_out, "Write Y as an OutputBatch file here");
    adv_app->callback([&] { action = [&] { return code.make_adversarial(); }; });

    VerifyCmd verify;
    auto* verify_app = app.add_subcommand("verify", "Run a verification suite");
    verify.setup(verify_app);
    verify_app->callback([&] {
        verify_mode = true;
        action = [&] {
            verify.grid.seed = common.seed;
            verify.grid.jobs = common.jobs;
            const SuiteReport r = verify_suite(verify.suite, verify.grid);
            failed_suite = !r.passed();
            ordered_json j;
            j["suite"] = r.suite;
            j["passed"] = r.passed();
            ordered_json inst = ordered_json::array();
            for (const auto& i : r.instances) {
                ordered_json o;
                o["instance"] = i.instance;
                o["pass"] = i.pass;
                o["detail"] = i.detail;
                inst.push_back(o);
            }
            j["instances"] = inst;
            return j;
        };
    });

    ExperimentCmd exp;
    auto* exp_app = app.add_subcommand("experiment", "Probability experiments");
    exp_app->require_subcommand(1);
    auto* pp_app = exp_app->add_subcommand("pprime", "Unique recovery at n=2, t=1, N=3 against 6(q-1)^3/(2q-1)^3");
    pp_app->add_option("--q-list", exp.q_list, "Alphabet sizes")->delimiter(',');
    pp_app->add_option("--trials", exp.trials, "Monte Carlo trials")->capture_default_str();
    pp_app->add_flag("!--no-exact", exp.exact, "Skip exhaustive enumeration");
    pp_app->callback([&] { action = [&] { return exp.pprime(common); }; });
    auto* sw_app = exp_app->add_subcommand("insertion-sweep", "Unique recovery under insertions across q");
    sw_app->add_option("--n", exp.n, "Length")->capture_default_str();
    sw_app->add_option("--t", exp.t, "Insertions per channel")->capture_default_str();
    sw_app->add_option("--N", exp.N, "Channels")->capture_default_str();
    sw_app->add_option("--q-list", exp.q_list, "Alphabet sizes")->delimiter(',');
    sw_app->add_option("--trials", exp.trials, "Trials per q")->capture_default_str();
    sw_app->callback([&] { action = [&] { return exp.sweep(common); }; });
    auto* pin_app = exp_app->add_subcommand("pin-prob", "Probability that every channel errs in one coordinate");
    pin_app->add_option("--n", exp.n, "Length")->required();
    pin_app->add_option("--t", exp.t, "Substitutions per channel")->required();
    pin_app->add_option("--N", exp.N, "Channels")->required();
    pin_app->callback([&] { action = [&] { return exp.pin(); }; });
    auto* qi_app = exp_app->add_subcommand("q-invariance", "Deletion or erasure recovery under two alphabets");
    qi_app->add_option("--x", exp.x, "Transmitted word over Z_q")->required();
    qi_app->add_option("--q", exp.q, "Alphabet size q (> n)")->required();
    qi_app->add_option("--q-prime", exp.q_prime, "Larger alphabet size q'")->required();
    qi_app->add_option("--kind", exp.kind, "deletion or erasure")->capture_default_str();
    qi_app->add_option("--t", exp.t, "Error budget")->capture_default_str();
    qi_app->add_option("--N", exp.N, "Channels")->capture_default_str();
    qi_app->add_option("--trials", exp.trials, "Trials")->capture_default_str();
    qi_app->callback([&] { action = [&] { return exp.invariance(common); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        require(static_cast<bool>(action), "no subcommand given");
        const ordered_json result = action();
        emit(out, result, common.fmt());
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    if (verify_mode && failed_suite) return 2;
    return 0;
}

}  // namespace reconlab::cli
