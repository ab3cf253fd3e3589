#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/channels.hpp"
#include "reconlab/decoders.hpp"
#include "reconlab/error.hpp"
#include "reconlab/probelab.hpp"
#include "reconlab/rng.hpp"

namespace reconlab::cli {

namespace {

using Task = std::function<InstanceResult()>;

std::vector<InstanceResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<InstanceResult> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out[i] = tasks[i]();
            } catch (const std::exception& ex) {
                out[i].pass = false;
                out[i].detail = std::string("error: ") + ex.what();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

template <typename... Parts>
std::string label(const Parts&... parts) {
    std::ostringstream s;
    ((s << parts), ...);
    return s.str();
}

std::size_t or_default(std::size_t v, std::size_t fallback) { return v == 0 ? fallback : v; }

std::size_t intersect(const ErrorModel& m, const Word& a, const Word& b, const Limits& limits) {
    return intersection({BallSpec{m, a}, BallSpec{m, b}}, limits.ball_words).size();
}

// 1 + max |B(0) ∩ B(x)| over x != 0, or restricted to d(0, x) == only_distance.
BigCount oracle_channels(const ErrorModel& m, unsigned q, std::size_t n, std::optional<std::size_t> only_distance,
                         const Limits& limits) {
    const Word zero = Word::zeros(q, n);
    std::size_t best = 0;
    for (const Word& x : all_words(q, n, limits.code_search_words)) {
        if (x == zero) continue;
        if (only_distance && hamming_distance(zero, x) != *only_distance) continue;
        best = std::max(best, intersect(m, zero, x, limits));
    }
    return BigCount(static_cast<unsigned long>(best + 1));
}

InstanceResult compare(std::string instance, const BigCount& got, const BigCount& want) {
    return {std::move(instance), got == want, "formula " + got.get_str() + ", enumeration " + want.get_str()};
}

std::vector<Task> bounds_oracle_tasks(const SuiteGrid& g, const Limits& limits) {
    std::vector<Task> tasks;
    const unsigned max_q = g.max_q == 0 ? 4 : g.max_q;
    const std::size_t max_n = or_default(g.max_n, 5);
    for (unsigned q = 2; q <= max_q; ++q) {
        for (std::size_t n = 2; n <= max_n; ++n) {
            for (std::size_t t = 1; t <= 2; ++t) {
                tasks.push_back([=] {
                    const BigCount f = channels_unique(static_cast<long long>(n), q, 0, static_cast<long long>(t));
                    const BigCount o = oracle_channels(ErrorModel::substitution(t), q, n, std::nullopt, limits);
                    return compare(label("q=", q, " n=", n, " t=", t, " e=0"), f, o);
                });
            }
        }
    }
    tasks.push_back([=] {
        const BigCount f = channels_unique(15, 3, 1, 1);
        const Word zero = Word::zeros(3, 15);
        std::size_t best = 0;
        // Every distance-3 pair is equivalent to (0, x) with w(x) = 3 up to
        // coordinate permutation and per-coordinate relabeling.
        for (std::size_t i = 0; i < 15; ++i) {
            for (std::size_t j = i + 1; j < 15; ++j) {
                for (std::size_t k = j + 1; k < 15; ++k) {
                    for (Symbol a = 1; a < 3; ++a) {
                        Word x = zero;
                        x.set(i, a);
                        x.set(j, 1);
                        x.set(k, 3 - a);
                        best = std::max(best, intersect(ErrorModel::substitution(2), zero, x, limits));
                    }
                }
            }
        }
        return compare("q=3 n=15 e=1 l=1 (distance-3 pairs)", f, BigCount(static_cast<unsigned long>(best + 1)));
    });
    return tasks;
}

// Checks that intersection sizes never grow with the distance between centers.
InstanceResult monotone(std::string instance, const ErrorModel& m, unsigned q, std::size_t n, const Limits& limits) {
    const Word zero = Word::zeros(q, n);
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> range;  // distance -> (min, max)
    for (const Word& x : all_words(q, n, limits.code_search_words)) {
        const std::size_t d = hamming_distance(zero, x);
        const std::size_t s = intersect(m, zero, x, limits);
        auto [it, fresh] = range.try_emplace(d, s, s);
        if (!fresh) {
            it->second.first = std::min(it->second.first, s);
            it->second.second = std::max(it->second.second, s);
        }
    }
    std::size_t violations = 0;
    std::ostringstream detail;
    for (auto it = range.begin(); it != range.end(); ++it) {
        detail << (it == range.begin() ? "" : " ") << "d" << it->first << "=" << it->second.first;
        if (it->second.first != it->second.second) detail << ".." << it->second.second;
        auto nx = std::next(it);
        if (nx != range.end() && it->second.first < nx->second.second) ++violations;
    }
    detail << "; violations " << violations;
    return {std::move(instance), violations == 0, detail.str()};
}

std::vector<Task> monotonicity_tasks(const SuiteGrid& g, const Limits& limits) {
    std::vector<Task> tasks;
    const unsigned max_q = g.max_q == 0 ? 4 : g.max_q;
    const std::size_t max_n = or_default(g.max_n, 4);
    for (unsigned q = 2; q <= max_q; ++q) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t t = 1; t <= 2; ++t) {
                tasks.push_back([=] {
                    return monotone(label("substitution q=", q, " n=", n, " t=", t), ErrorModel::substitution(t), q,
                                    n, limits);
                });
            }
            for (std::size_t te = 0; te <= 2; ++te) {
                for (std::size_t ts = 0; ts <= 2; ++ts) {
                    if (te + ts == 0) continue;
                    tasks.push_back([=] {
                        return monotone(label("erasure-substitution q=", q, " n=", n, " te=", te, " ts=", ts),
                                        ErrorModel::erasure_substitution(te, ts), q, n, limits);
                    });
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> erasure_list_tasks(const SuiteGrid& g, const Limits& limits) {
    std::vector<Task> tasks;
    const unsigned max_q = g.max_q == 0 ? 3 : g.max_q;
    const std::size_t max_n = or_default(g.max_n, 3);
    for (unsigned q = 2; q <= max_q; ++q) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t t = 1; t <= std::min<std::size_t>(n, 2); ++t) {
                const auto volume = to_u64(ball_volume(static_cast<long long>(n), 2, static_cast<long long>(t)));
                for (std::uint64_t N = 1; N <= volume; ++N) {
                    tasks.push_back([=] {
                        const ErrorModel m = ErrorModel::erasure(t);
                        const FullSpace space{q, n};
                        std::size_t worst = 0, worst_d2 = 0, worst_d3 = 0;
                        AdversarialBatches batches(Word::zeros(q, n), m, static_cast<std::size_t>(N), limits);
                        OutputBatch y;
                        while (batches.next(y)) {
                            const auto list = reconstruction_list(y, space, limits.ball_words).candidates;
                            worst = std::max(worst, list.size());
                            worst_d2 = std::max(worst_d2, max_distance_subset(list, 2).size());
                            worst_d3 = std::max(worst_d3, max_distance_subset(list, 3).size());
                        }
                        const BigCount bN(static_cast<unsigned long>(N));
                        const auto full = erasure_list_size(static_cast<long long>(n), q, static_cast<long long>(t), bN);
                        const auto d2 = erasure_list_size(static_cast<long long>(n), q, static_cast<long long>(t), bN, 2,
                                                          limits);
                        const auto d3 = erasure_list_size(static_cast<long long>(n), q, static_cast<long long>(t), bN, 3,
                                                          limits);
                        const bool ok = full.list_size == worst && d2.list_size == worst_d2 && d3.list_size == worst_d3;
                        return InstanceResult{label("q=", q, " n=", n, " t=", t, " N=", N), ok,
                                              label("a=", full.a, " L=", full.list_size.get_str(), " search ", worst,
                                                    "; d=2 ", d2.list_size.get_str(), "/", worst_d2, "; d=3 ",
                                                    d3.list_size.get_str(), "/", worst_d3)};
                    });
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> era_sub_tasks(const SuiteGrid& g, const Limits& limits) {
    std::vector<Task> tasks;
    const unsigned max_q = g.max_q == 0 ? 3 : g.max_q;
    const std::size_t max_n = or_default(g.max_n, 4);
    for (unsigned q = 2; q <= max_q; ++q) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t te = 0; te <= 2; ++te) {
                for (std::size_t ts = 0; ts <= 2; ++ts) {
                    if (te + ts == 0 || te + ts > n) continue;
                    for (std::size_t d = 1; d <= n; ++d) {
                        tasks.push_back([=] {
                            const BigCount f = era_sub_channels(static_cast<long long>(n), q, static_cast<long long>(te),
                                                                static_cast<long long>(ts), static_cast<long long>(d));
                            const BigCount o =
                                oracle_channels(ErrorModel::erasure_substitution(te, ts), q, n, d, limits);
                            return compare(label("q=", q, " n=", n, " te=", te, " ts=", ts, " d=", d), f, o);
                        });
                    }
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> constructions_tasks(const SuiteGrid& g, const Limits& limits) {
    std::vector<Task> tasks;
    tasks.push_back([] {
        const Code c = constant_weight_code(7, 2);
        const bool ok = c.size() == 2 && to_string(c.words()[0]) == "0001110" && to_string(c.words()[1]) == "1110000";
        return InstanceResult{"constant-weight n=7 e=2", ok, "words " + to_string(c.words()[0]) + " " +
                                                                  to_string(c.words()[1])};
    });
    tasks.push_back([] {
        std::size_t bad = 0;
        for (std::size_t e = 0; e <= 3; ++e) {
            for (std::size_t n = 2 * (e + 1); n <= 12; ++n) {
                const Code c = constant_weight_code(n, e);
                if (c.size() != n / (e + 1) || c.min_distance() != 2 * e + 2) ++bad;
            }
        }
        return InstanceResult{"constant-weight distance 2e+2 (n<=12, e<=3)", bad == 0, label(bad, " mismatches")};
    });
    tasks.push_back([] {
        const auto inst = adversarial_code(2, 2, 3);
        const std::vector<std::string> expect{"101100000000", "200011000000", "010000110000", "020000001100",
                                              "000000000011"};
        std::vector<std::string> got;
        for (const Word& w : inst.code.words()) got.push_back(to_string(w));
        std::vector<std::string> sorted_expect = expect;
        std::sort(sorted_expect.begin(), sorted_expect.end());
        const bool ok = got == sorted_expect && inst.code.min_distance() == 5 && inst.outputs.outputs.size() == 26;
        std::string words;
        for (const auto& w : got) words += " " + w;
        return InstanceResult{"adversarial e=2 l=2 q=3", ok,
                              label("words", words, "; d=", inst.code.min_distance().value_or(0),
                                    "; |Y|=", inst.outputs.outputs.size())};
    });
    for (std::size_t e = 1; e <= 2; ++e) {
        for (std::size_t ell = 1; ell <= 2; ++ell) {
            for (unsigned q = 2; q <= 4; ++q) {
                tasks.push_back([=] {
                    const auto inst = adversarial_code(e, ell, q);
                    const std::size_t n = inst.code.n();
                    const BigCount want_y = ball_volume(static_cast<long long>(n), q, static_cast<long long>(ell) - 1) + 1;
                    bool inside = true;
                    for (const Word& c : inst.code.words()) {
                        for (const Word& y : inst.outputs.outputs) {
                            inside = inside && reachable(c, y, ErrorModel::substitution(e + ell));
                        }
                    }
                    const bool ok = inst.code.corrects(e) && inst.code.size() == (q - 1) * ell + 1 &&
                                    BigCount(static_cast<unsigned long>(inst.outputs.outputs.size())) == want_y &&
                                    inside;
                    return InstanceResult{label("adversarial e=", e, " l=", ell, " q=", q), ok,
                                          label("n=", n, " |C|=", inst.code.size(), " |Y|=",
                                                inst.outputs.outputs.size(), " in all balls: ", inside ? "yes" : "no")};
                });
            }
        }
    }
    const std::size_t max_n = or_default(g.max_n, 4);
    for (unsigned q = 3; q <= 4; ++q) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t e = 0; 2 * e + 1 <= n; ++e) {
                tasks.push_back([=] {
                    // Any e-error-correcting code meets B_t(y1) ∩ B_t(y2) in a subset with
                    // pairwise distance >= 2e+1, so the largest such subset bounds |T(Y)|.
                    const ErrorModel m = ErrorModel::substitution(e + 1);
                    const Word zero = Word::zeros(q, n);
                    std::size_t worst = 0;
                    for (const Word& y : all_words(q, n, limits.code_search_words)) {
                        if (y == zero) continue;
                        const auto common = intersection({BallSpec{m, zero}, BallSpec{m, y}}, limits.ball_words);
                        worst = std::max(worst, max_distance_subset(common, 2 * e + 1).size());
                    }
                    return InstanceResult{label("l=1 list cap q=", q, " n=", n, " e=", e), worst <= q,
                                          label("max list ", worst, ", cap ", q)};
                });
            }
        }
    }
    return tasks;
}

std::vector<Task> algorithm1_tasks(const SuiteGrid& g, const Limits& limits) {
    const std::uint64_t trials = g.trials == 0 ? 1000 : g.trials;
    const std::uint64_t seed = g.seed;
    return {[=] {
        const unsigned q = 3;
        const std::size_t n = 15, e = 1, ell = 1;
        Word c2 = Word::zeros(q, n);
        for (std::size_t i = 0; i < 3; ++i) c2.set(i, 1);
        const Code code(q, n, {Word::zeros(q, n), c2});
        const auto th = majority_thresholds(static_cast<long long>(n), q, static_cast<long long>(e),
                                            static_cast<long long>(ell));
        const std::size_t N = static_cast<std::size_t>(to_u64(th.channels));
        const BallSampler s0(code.words()[0], ErrorModel::substitution(e + ell), limits);
        const BallSampler s1(code.words()[1], ErrorModel::substitution(e + ell), limits);
        std::uint64_t ok = 0, oracle_ok = 0, majority_ok = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Rng rng(seed, i);
            const BallSampler& s = (i % 2 == 0) ? s0 : s1;
            const OutputBatch y = transmit(s, N, false, rng);
            const DecodeOutcome out = algorithm1_decode(y, code, e, ell, limits);
            const DecodeOutcome brute = reconstruction_list(y, std::cref(code), limits.ball_words);
            ok += out.status == DecodeStatus::Unique && out.candidates.front() == s.center();
            oracle_ok += brute.status == DecodeStatus::Unique && brute.candidates == out.candidates;
            majority_ok += majority_errors(majority_word(y, th.tau), s.center()) <= e;
        }
        const bool pass = ok == trials && oracle_ok == trials && majority_ok == trials;
        return InstanceResult{label("q=3 n=15 e=1 l=1 N=", N), pass,
                              label("decoded ", ok, "/", trials, ", oracle agreement ", oracle_ok, "/", trials,
                                    ", majority errors <= e ", majority_ok, "/", trials)};
    }};
}

std::vector<Task> algorithm2_tasks(const SuiteGrid& g, const Limits& limits) {
    const std::uint64_t trials = g.trials == 0 ? 1000 : g.trials;
    const std::uint64_t seed = g.seed;
    std::vector<Task> tasks;
    for (std::size_t a = 0; a <= 1; ++a) {
        tasks.push_back([=] {
            const std::size_t n = 12, e = 1, ell = 2;
            const Code code = shortened_hamming_code(n);
            ListDecodeParams p;
            p.e = e;
            p.ell = ell;
            p.a = a;
            p.eps = 1;
            p.max_list = list_ball_cap(code, e + a, limits);
            const auto N = static_cast<std::size_t>(
                to_u64(list_channel_count(static_cast<long long>(n), static_cast<long long>(e),
                                          static_cast<long long>(ell), static_cast<long long>(a), p.eps)));
            const auto th = list_thresholds(static_cast<long long>(n), static_cast<long long>(e),
                                            static_cast<long long>(ell), static_cast<long long>(a), p.eps);
            const std::size_t cap = (std::size_t{1} << (ell - a)) * p.max_list;
            std::uint64_t contains = 0, subset = 0, small = 0, majority_ok = 0;
            for (std::uint64_t i = 0; i < trials; ++i) {
                Rng rng(seed, i);
                const Word& x = code.words()[static_cast<std::size_t>(rng.below(std::uint64_t{code.size()}))];
                const BallSampler s(x, ErrorModel::substitution(e + ell), limits);
                const OutputBatch y = transmit(s, N, false, rng);
                const DecodeOutcome out = algorithm2_list_decode(y, code, p, limits);
                const auto brute = reconstruction_list(y, std::cref(code), limits.ball_words).candidates;
                contains += std::binary_search(out.candidates.begin(), out.candidates.end(), x);
                subset += std::includes(brute.begin(), brute.end(), out.candidates.begin(), out.candidates.end());
                small += out.candidates.size() <= cap;
                majority_ok += majority_errors(majority_word(y, th.tau), x) <= e + a;
            }
            const bool pass = contains == trials && subset == trials && small == trials && majority_ok == trials;
            return InstanceResult{label("q=2 n=12 e=1 l=2 a=", a, " eps=1 N=", N, " M=", p.max_list), pass,
                                  label("x in list ", contains, "/", trials, ", list within brute force ", subset, "/",
                                        trials, ", |list| <= ", cap, " ", small, "/", trials,
                                        ", majority errors <= e+a ", majority_ok, "/", trials)};
        });
    }
    return tasks;
}

std::vector<Task> prob_exact_tasks(const SuiteGrid& g, const Limits& limits) {
    const std::uint64_t trials = g.trials == 0 ? 100000 : g.trials;
    const std::uint64_t seed = g.seed;
    const unsigned jobs = g.jobs;
    std::vector<Task> tasks;
    for (unsigned q = 2; q <= 3; ++q) {
        tasks.push_back([=] {
            const Word x = Word::zeros(q, 2);
            const auto m = ErrorModel::substitution(1);
            const ProbEstimate ex = unique_recovery_prob(x, m, 3, 0, seed, ProbMode::Exact, std::nullopt, 1, limits);
            const ProbEstimate mc =
                unique_recovery_prob(x, m, 3, trials, seed, ProbMode::MonteCarlo, std::nullopt, jobs, limits);
            const Rational closed = worked_example_Pprime(q);
            const double gap = std::abs(mc.p_hat - closed.get_d());
            const bool pass = ex.exact && *ex.exact == closed && gap <= 4 * mc.ci95_halfwidth;
            return InstanceResult{label("q=", q, " n=2 t=1 N=3"), pass,
                                  label("exact ", ex.exact ? to_string(*ex.exact) : "-", ", closed form ",
                                        to_string(closed), ", monte carlo ", mc.p_hat, " +- ", mc.ci95_halfwidth)};
        });
    }
    return tasks;
}

std::vector<Task> q_invariance_tasks(const SuiteGrid& g, const Limits& limits) {
    const std::uint64_t trials = g.trials == 0 ? 500 : g.trials;
    const std::uint64_t seed = g.seed;
    const std::size_t max_n = or_default(g.max_n, 3);
    std::vector<Task> tasks;
    for (std::size_t n = 2; n <= max_n; ++n) {
        const unsigned q = static_cast<unsigned>(n + 1);
        for (const Word& x : all_words(static_cast<unsigned>(n), n, limits.code_search_words)) {
            const Word xq = reinterpret(x, q);
            for (unsigned qp : {static_cast<unsigned>(n + 3), static_cast<unsigned>(2 * n + 2)}) {
                for (ErrorKind kind : {ErrorKind::Deletion, ErrorKind::Erasure}) {
                    for (std::size_t t = 1; t <= 2; ++t) {
                        tasks.push_back([=] {
                            const ErrorModel m = kind == ErrorKind::Deletion ? ErrorModel::deletion(t)
                                                                              : ErrorModel::erasure(t);
                            const auto r = deletion_q_invariance(xq, qp, m, 3, trials, seed, 1, limits);
                            const bool pass = r.balls_identical && r.p_q.successes == r.p_q_prime.successes;
                            return InstanceResult{label(to_string(kind), " x=", to_string(xq), " q=", q, " q'=", qp,
                                                        " t=", t),
                                                  pass,
                                                  label("balls identical ", r.balls_identical ? "yes" : "no", ", hits ",
                                                        r.p_q.successes, " vs ", r.p_q_prime.successes, " of ",
                                                        trials)};
                        });
                    }
                }
            }
        }
    }
    return tasks;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bounds-oracle", "monotonicity", "erasure-list",
                                                "era-sub-exact", "constructions", "algorithm1",
                                                "algorithm2",    "prob-exact",    "q-invariance"};
    return names;
}

SuiteReport verify_suite(const std::string& name, const SuiteGrid& grid, const Limits& limits) {
    std::vector<Task> tasks;
    if (name == "bounds-oracle") {
        tasks = bounds_oracle_tasks(grid, limits);
    } else if (name == "monotonicity") {
        tasks = monotonicity_tasks(grid, limits);
    } else if (name == "erasure-list") {
        tasks = erasure_list_tasks(grid, limits);
    } else if (name == "era-sub-exact") {
        tasks = era_sub_tasks(grid, limits);
    } else if (name == "constructions") {
        tasks = constructions_tasks(grid, limits);
    } else if (name == "algorithm1") {
        tasks = algorithm1_tasks(grid, limits);
    } else if (name == "algorithm2") {
        tasks = algorithm2_tasks(grid, limits);
    } else if (name == "prob-exact") {
        tasks = prob_exact_tasks(grid, limits);
    } else if (name == "q-invariance") {
        tasks = q_invariance_tasks(grid, limits);
    } else {
        throw PreconditionError("unknown suite '" + name + "'");
    }
    return SuiteReport{name, run_tasks(tasks, grid.jobs)};
}

Code shortened_hamming_code(std::size_t n) {
    require(n >= 3 && n <= 15, "the shortened Hamming code needs 3 <= n <= 15");
    std::vector<Word> words;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        unsigned syndrome = 0;
        std::vector<Symbol> w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = (bits >> (n - 1 - i)) & 1u;
            if (w[i]) syndrome ^= static_cast<unsigned>(i + 1);
        }
        if (syndrome == 0) words.emplace_back(2, std::move(w));
    }
    return Code(2, n, std::move(words));
}

std::size_t list_ball_cap(const Code& code, std::size_t radius, const Limits& limits) {
    std::size_t best = 0;
    for (const Word& u : all_words(code.q(), code.n(), limits.code_search_words)) {
        std::size_t hits = 0;
        for (const Word& c : code.words()) hits += hamming_distance(u, c) <= radius;
        best = std::max(best, hits);
    }
    return best;
}

}  // namespace reconlab::cli
