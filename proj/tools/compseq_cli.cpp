// compseq: build, analyze and search complementary set matrices from
// companion sequence pairs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "compseq/analysis.hpp"
#include "compseq/complementary.hpp"
#include "compseq/construct.hpp"
#include "compseq/search.hpp"

using json = nlohmann::ordered_json;
using namespace compseq;

namespace {

constexpr const char* kSchema = "compseq/1";
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;

json merit_json(const MeritReport& r) {
    json j;
    j["lambda_A"] = {{"value", r.lambda_A.value()}, {"mag_sq", r.lambda_A.mag_sq}};
    j["lambda_P"] = {{"value", r.lambda_P.value()}, {"mag_sq", r.lambda_P.mag_sq}};
    j["S_A"] = {{"value", r.S_A.value()}, {"exact", r.S_A.exact}};
    j["S_P"] = {{"value", r.S_P.value()}, {"exact", r.S_P.exact}};
    if (r.S_A.exact) j["S_A"]["integer"] = r.S_A.integer_value;
    if (r.S_P.exact) j["S_P"]["integer"] = r.S_P.integer_value;
    return j;
}

json matrix_json(const SeqMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).str());
    return rows;
}

std::vector<Seq> load_sequences(const std::string& path, size_t want) {
    auto seqs = read_sequence_file(path);
    if (seqs.size() < want)
        throw DomainError("file '" + path + "' holds " + std::to_string(seqs.size()) +
                          " sequences, need " + std::to_string(want));
    return seqs;
}

int default_jobs() {
    if (const char* env = std::getenv("COMPSEQ_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

std::vector<ExtendMode> parse_modes(const std::string& csv, int count, const char* what) {
    std::vector<ExtendMode> modes;
    if (csv.empty()) {
        modes.assign(static_cast<size_t>(count), ExtendMode::Concat);
        return modes;
    }
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) modes.push_back(extend_mode_from_string(tok));
    if (static_cast<int>(modes.size()) == 1 && count > 1)
        modes.assign(static_cast<size_t>(count), modes.front());
    if (static_cast<int>(modes.size()) != count)
        throw DomainError(std::string(what) + " lists " + std::to_string(modes.size()) +
                          " modes for " + std::to_string(count) + " steps");
    return modes;
}

// ---- build ---------------------------------------------------------------

struct BuildArgs {
    std::string seed;
    int p = 0;
    int t = 0;
    std::string length_modes;
    std::string size_modes;
    std::string out;
    bool as_json = false;
};

int run_build(const BuildArgs& a) {
    Seq c0{{kOne}, Alphabet::Binary}, c1{{kOne}, Alphabet::Binary};
    if (a.seed.rfind("golay:", 0) == 0) {
        const int q = std::stoi(a.seed.substr(6));
        const auto g = golay_seed(q);
        c0 = g.c0;
        c1 = g.c1;
    } else {
        const auto seqs = load_sequences(a.seed, 2);
        c0 = seqs[0];
        c1 = seqs[1];
    }

    BuildRecipe recipe;
    recipe.length_modes = parse_modes(a.length_modes, a.p, "--length-mode");
    recipe.size_modes = parse_modes(a.size_modes, a.t, "--size-mode");

    const MoMatrix mo = build(c0, c1, recipe);
    const auto sets = mo.split();

    bool membership = true;
    for (int j = 0; j < mo.matrix.cols() && membership; ++j)
        membership = rset_member(mo.matrix.column(j), c0, c1, a.t);
    bool complementary = true;
    for (const auto& s : sets) complementary = complementary && is_complementary_set(s);

    json sidecar;
    sidecar["schema"] = kSchema;
    sidecar["command"] = "build";
    sidecar["seed"] = {{"c0", c0.str()}, {"c1", c1.str()}};
    json lm = json::array(), sm = json::array();
    for (auto m : recipe.length_modes) lm.push_back(to_string(m));
    for (auto m : recipe.size_modes) sm.push_back(to_string(m));
    sidecar["recipe"] = {{"p", a.p}, {"t", a.t}, {"length_modes", lm}, {"size_modes", sm}};
    sidecar["dims"] = {{"rows", mo.matrix.rows()},
                       {"sets", mo.sets},
                       {"cols_per_set", mo.set_cols()},
                       {"total_cols", mo.matrix.cols()}};
    sidecar["verified"] = {
        {"complementary", complementary},
        {"mo", is_mo_collection(mo)},
        {"mo_up_to_duplicates", is_mo_collection_up_to_duplicates(mo)},
        {"column_membership", membership}};

    std::ostringstream text;
    write_matrices(text, sets);

    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw DomainError("cannot write '" + a.out + "'");
        f << text.str();
        std::cout << sidecar.dump(2) << "\n";
    } else if (a.as_json) {
        json out = sidecar;
        json blocks = json::array();
        for (const auto& s : sets) blocks.push_back(matrix_json(s));
        out["sets"] = blocks;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text.str();
        std::cerr << sidecar.dump(2) << "\n";
    }
    return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

int run_analyze(const std::string& path, bool periodic, bool as_json) {
    const auto mats = read_matrix_file(path);
    if (mats.empty()) throw DomainError("no matrices in '" + path + "'");
    SeqMatrix wide = mats[0];
    for (size_t k = 1; k < mats.size(); ++k) wide = SeqMatrix::concat(wide, mats[k]);
    const auto rep = column_report(wide);

    if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = "analyze";
        j["rows"] = wide.rows();
        j["cols"] = wide.cols();
        j["sets"] = mats.size();
        json cols = json::array();
        for (size_t i = 0; i < rep.columns.size(); ++i) {
            json c = merit_json(rep.columns[i]);
            c["zeros"] = rep.zero_counts[i];
            cols.push_back(std::move(c));
        }
        j["columns"] = cols;
        j["aggregate"] = {{"lambda_A", rep.lambda_A_max.value()},
                          {"lambda_A_mag_sq", rep.lambda_A_max.mag_sq},
                          {"lambda_P", rep.lambda_P_max.value()},
                          {"S_A", rep.S_A_max.value()},
                          {"S_A_exact", rep.S_A_max.exact},
                          {"S_P", rep.S_P_max.value()}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "col  lambda_A  S_A";
    if (periodic) std::cout << "  lambda_P  S_P";
    std::cout << "  zeros\n";
    for (size_t i = 0; i < rep.columns.size(); ++i) {
        const auto& r = rep.columns[i];
        std::cout << i << "  " << r.lambda_A.value() << "  " << r.S_A.value();
        if (periodic) std::cout << "  " << r.lambda_P.value() << "  " << r.S_P.value();
        std::cout << "  " << rep.zero_counts[i] << "\n";
    }
    std::cout << "max  " << rep.lambda_A_max.value() << "  " << rep.S_A_max.value();
    if (periodic) std::cout << "  " << rep.lambda_P_max.value() << "  " << rep.S_P_max.value();
    std::cout << "\n";
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

int run_bounds(int m, int t, double E, std::optional<double> lambda0, std::optional<double> S0,
               bool as_json) {
    const auto r = bound_report(m, t, E, lambda0, S0);
    if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = "bounds";
        j["m"] = r.m;
        j["t"] = r.t;
        j["E"] = r.E;
        if (r.sufficient_lambda_A) j["sufficient_lambda_A"] = *r.sufficient_lambda_A;
        if (r.sufficient_S_A) j["sufficient_S_A"] = *r.sufficient_S_A;
        j["necessary_lambda_A"] = r.necessary_lambda_A;
        j["lambda_min_t"] = r.lambda_min_t;
        j["threshold_lambda0"] = r.threshold_lambda0;
        j["welch_A"] = r.welch_A;
        j["welch_P"] = r.welch_P;
        j["lambda_W_A"] = r.lambda_W_A;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "m=" << r.m << " t=" << r.t << " E=" << r.E << "\n";
    if (r.sufficient_lambda_A)
        std::cout << "sufficient lambda_A: " << *r.sufficient_lambda_A << "\n";
    if (r.sufficient_S_A) std::cout << "sufficient S_A: " << *r.sufficient_S_A << "\n";
    std::cout << "necessary lambda_A:  " << r.necessary_lambda_A << "\n"
              << "lambda0 threshold:   " << r.threshold_lambda0 << "\n"
              << "welch lambda_A:      " << r.welch_A << "\n"
              << "welch lambda_P:      " << r.welch_P << "\n"
              << "lambda_W_A:          " << r.lambda_W_A << "\n";
    return kExitOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
    std::string alphabet = "binary";
    int m = 0;
    int t = 0;
    std::string constraint;
    std::string minimize;
    bool anneal = false;
    int half_len = 0;
    double budget = 0;
    std::uint64_t rng_seed = 0;
    int jobs = 0;
    double cap = 0;
    bool as_json = false;
};

json pair_json(const FoundPair& p) {
    json j;
    j["c0"] = p.c0.str();
    j["c1"] = p.c1.str();
    j["merits_c0"] = merit_json(p.merits0);
    j["merits_c1"] = merit_json(p.merits1);
    return j;
}

int run_search(const SearchArgs& a) {
    const auto t_start = std::chrono::steady_clock::now();
    json j;
    j["schema"] = kSchema;
    j["command"] = "search";

    if (a.anneal) {
        if (a.half_len < 2) throw DomainError("--anneal requires --half-len");
        SearchBudget budget;
        if (a.budget > 0) budget.max_iterations = static_cast<std::uint64_t>(a.budget);
        const auto res =
            anneal_pair(a.half_len, alphabet_from_string(a.alphabet), budget, a.rng_seed);
        if (a.as_json) {
            j["mode"] = "anneal";
            j["half_len"] = a.half_len;
            j["rng_seed"] = a.rng_seed;
            j["s0"] = res.s0.str();
            j["s1"] = res.s1.str();
            j["cost"] = res.cost;
            j["evaluations"] = res.evaluations;
            json hist = json::array();
            for (const auto& h : res.history)
                hist.push_back({{"iteration", h.iteration},
                                {"temperature", h.temperature},
                                {"cost", h.cost},
                                {"restart", h.restart}});
            j["history"] = hist;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "best cost " << res.cost << " after " << res.evaluations
                      << " evaluations\ns0: " << res.s0.str() << "\ns1: " << res.s1.str() << "\n";
        }
        std::cerr << "[elapsed "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
                         .count()
                  << " s]\n";
        return kExitOk;
    }

    if (!a.minimize.empty() && !a.constraint.empty())
        throw DomainError("--minimize and --constraint are mutually exclusive");

    SearchResult res;
    const int jobs = a.jobs > 0 ? a.jobs : default_jobs();
    const std::uint64_t cap =
        a.cap > 0 ? static_cast<std::uint64_t>(a.cap) : (std::uint64_t{1} << 26);
    if (!a.minimize.empty()) {
        res = min_constraint_search(alphabet_from_string(a.alphabet), a.m,
                                    merit_kind_from_string(a.minimize), jobs, cap);
        j["mode"] = "minimize";
        j["merit"] = a.minimize;
    } else if (!a.constraint.empty()) {
        const auto colon = a.constraint.find(':');
        if (colon == std::string::npos)
            throw DomainError("--constraint expects KIND:BOUND, e.g. lambdaA:2");
        SearchConfig cfg;
        cfg.alphabet = alphabet_from_string(a.alphabet);
        cfg.m = a.m;
        cfg.t = a.t;
        cfg.constraint = Constraint{merit_kind_from_string(a.constraint.substr(0, colon)),
                                    std::stod(a.constraint.substr(colon + 1))};
        cfg.jobs = jobs;
        cfg.budget.max_candidates = cap;
        res = exhaustive_search(cfg);
        j["mode"] = "exhaustive";
        j["constraint"] = a.constraint;
        j["t"] = a.t;
    } else {
        throw DomainError("search needs --constraint, --minimize or --anneal");
    }

    if (a.as_json) {
        j["alphabet"] = a.alphabet;
        j["m"] = a.m;
        j["candidates_examined"] = res.candidates_examined;
        j["retained"] = res.retained;
        if (res.achieved_minimum) j["achieved_minimum"] = *res.achieved_minimum;
        json pairs = json::array();
        for (const auto& p : res.pairs) pairs.push_back(pair_json(p));
        j["pairs"] = pairs;
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.achieved_minimum) std::cout << "minimum: " << *res.achieved_minimum << "\n";
        std::cout << res.pairs.size() << " pairs (" << res.candidates_examined
                  << " candidates examined)\n";
        for (const auto& p : res.pairs)
            std::cout << p.c0.str() << "  |  " << p.c1.str() << "\n";
    }
    std::cerr << "[elapsed " << res.elapsed_seconds << " s]\n";
    return kExitOk;
}

// ---- lift ------------------------------------------------------------------

int run_lift(int which_case, const std::string& s0_path, const std::string& s1_path,
             bool as_json) {
    const Seq s0 = load_sequences(s0_path, 1)[0];
    const Seq s1 = load_sequences(s1_path, 1)[0];
    const CompanionPair cp = which_case == 1 ? case1_lift(s0, s1) : case2_lift(s0, s1);
    const auto m0 = merits(cp.c0);
    const auto m1 = merits(cp.c1);
    const auto cb = case_bounds(s0, s1);

    if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = "lift";
        j["case"] = which_case;
        j["c0"] = cp.c0.str();
        j["c1"] = cp.c1.str();
        j["merits_c0"] = merit_json(m0);
        j["merits_c1"] = merit_json(m1);
        j["lambda_B"] = lambda_B(s0, s1);
        j["bounds"] = {{"lambda_A", cb.lambda_A},
                       {"lambda_P", cb.lambda_P},
                       {"S_A", cb.S_A},
                       {"S_P", cb.S_P},
                       {"lambda_A_concat", cb.lambda_A_concat}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "c0: " << cp.c0.str() << "\nc1: " << cp.c1.str() << "\nlambda_A max: "
                  << std::max(m0.lambda_A.value(), m1.lambda_A.value())
                  << "\nlambda_B: " << lambda_B(s0, s1) << "\n";
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int emit_verdict(const std::string& predicate, bool verdict, json witness, bool as_json) {
    if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = "verify";
        j["predicate"] = predicate;
        j["verdict"] = verdict;
        if (!witness.is_null()) j["witness"] = witness;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << predicate << ": " << (verdict ? "true" : "false") << "\n";
    }
    return verdict ? kExitOk : kExitVerifyFail;
}

int run_verify(const std::string& companion, const std::string& complementary,
               const std::string& mates, const std::string& mo, const std::string& golay,
               bool as_json) {
    const int given = !companion.empty() + !complementary.empty() + !mates.empty() +
                      !mo.empty() + !golay.empty();
    if (given != 1)
        throw DomainError("verify needs exactly one of --companion --complementary --mates "
                          "--mo --golay");

    if (!companion.empty()) {
        const auto seqs = load_sequences(companion, 2);
        const auto w = is_companion_pair(seqs[0], seqs[1]);
        json witness;
        if (w) {
            json pairing = json::array();
            for (auto [x, y] : w->pairing) pairing.push_back({x, y});
            witness = {{"pairing", pairing}};
        }
        return emit_verdict("companion", w.has_value(), witness, as_json);
    }
    if (!complementary.empty()) {
        const auto mats = read_matrix_file(complementary);
        if (mats.empty()) throw DomainError("no matrices in '" + complementary + "'");
        return emit_verdict("complementary", is_complementary_set(mats[0]), {}, as_json);
    }
    if (!mates.empty()) {
        const auto mats = read_matrix_file(mates);
        if (mats.size() != 2) throw DomainError("mate check needs exactly two matrices");
        return emit_verdict("mates", are_mates(mats[0], mats[1]), {}, as_json);
    }
    if (!mo.empty()) {
        const auto mats = read_matrix_file(mo);
        const bool strict = is_mo_collection(std::span<const SeqMatrix>(mats));
        const bool loose = is_mo_collection_up_to_duplicates(std::span<const SeqMatrix>(mats));
        json witness = {{"sets", mats.size()}, {"mo_up_to_duplicates", loose}};
        return emit_verdict("mo", strict, witness, as_json);
    }
    const auto seqs = read_sequence_file(golay);
    if (seqs.empty()) throw DomainError("no sequences in '" + golay + "'");
    const bool verdict =
        seqs.size() >= 2 ? is_golay_pair(seqs[0], seqs[1]) : is_golay_sequence(seqs[0]);
    return emit_verdict(seqs.size() >= 2 ? "golay_pair" : "golay_sequence", verdict, {},
                        as_json);
}

// ---- selftest ----------------------------------------------------------------

int run_selftest(const std::string& data_dir) {
    int failures = 0;
    auto item = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    auto path = [&](const char* f) { return data_dir + "/" + f; };

    try {
        // quadriphase seed pair reproduction
        const Seq c0 = Seq::parse("+ +j - +j");
        const Seq c1 = f_i_conj(c0);
        const auto cmat = read_matrix_file(path("quad_c_4x4.txt"));
        const auto dmat = read_matrix_file(path("quad_d_4x4.txt"));
        const SeqMatrix c1m =
            length_extended(c0, c1, std::vector<ExtendMode>{ExtendMode::Concat});
        item("quadriphase 4x4 pair reproduction",
             c1m == cmat.at(0) && mate_of(c1m) == dmat.at(0));

        // one size extension and its column merits
        const auto blocks = read_matrix_file(path("quad_mo4_8x32.txt"));
        const MoMatrix mo = build(c0, c1, BuildRecipe::uniform(1, 1));
        SeqMatrix wide = blocks.at(0);
        for (size_t k = 1; k < blocks.size(); ++k) wide = SeqMatrix::concat(wide, blocks[k]);
        const auto rep = column_report(mo);
        item("8x32 collection reproduction", mo.matrix == wide);
        item("8x32 column merits (peak 4, sum 12)",
             rep.lambda_A_max.mag_sq == 16 && rep.S_A_max.exact &&
                 rep.S_A_max.integer_value == 12);

        // golay seed and the interleaved 8x8
        const auto g = golay_seed(2);
        const auto gmat = read_matrix_file(path("golay_c_8x8.txt"));
        const SeqMatrix g2 =
            length_extended(g.c0, g.c1, std::vector<ExtendMode>(2, ExtendMode::Interleave));
        bool golay_cols = g2 == gmat.at(0);
        for (int j = 0; j < g2.cols() && golay_cols; ++j) {
            const Seq col = g2.column(j);
            Seq partner = g.c0_mate;
            if (col == g.c0 || col == negate(g.c0))
                partner = col == g.c0 ? g.c0_mate : negate(g.c0_mate);
            else
                partner = col == g.c1 ? g.c1_mate : negate(g.c1_mate);
            golay_cols = is_golay_pair(col, partner);
        }
        item("golay seed q=2 and interleaved 8x8 with golay columns", golay_cols);

        // ternary pair with one zero per column
        const Seq t0 = Seq::parse("+ - - + + + 0 +");
        const Seq t1 = f_i(t0);
        const auto tc = read_matrix_file(path("ternary_c_8x8.txt"));
        const auto td = read_matrix_file(path("ternary_d_8x8.txt"));
        const SeqMatrix t2 =
            length_extended(t0, t1, std::vector<ExtendMode>(2, ExtendMode::Concat));
        bool zeros = true;
        for (int j = 0; j < t2.cols(); ++j) zeros = zeros && t2.column(j).zero_count() == 1;
        item("ternary 8x8 pair with mate and single zeros",
             t2 == tc.at(0) && mate_of(t2) == td.at(0) && are_mates(t2, mate_of(t2)) && zeros);

        // bundled companion pairs and merit values
        std::ifstream pf(path("companion_pairs_small.json"));
        json pairs = json::parse(pf);
        bool pairs_ok = true;
        for (const auto& row : pairs["pairs"]) {
            const Seq a = Seq::parse(
                [&] {
                    std::string s;
                    for (char ch : row["c0"].get<std::string>()) (s += ch) += ' ';
                    return s;
                }());
            const Seq b = Seq::parse([&] {
                std::string s;
                for (char ch : row["c1"].get<std::string>()) (s += ch) += ' ';
                return s;
            }());
            if (!is_companion_pair(a, b)) pairs_ok = false;
            const auto ma = merits(a);
            const auto mb = merits(b);
            if (!row["lambda_min"].is_null()) {
                const auto lam = std::max(ma.lambda_A.integer(), mb.lambda_A.integer());
                if (lam != row["lambda_min"].get<std::uint64_t>()) pairs_ok = false;
            }
            if (!row["s_min"].is_null()) {
                const auto s = std::max(ma.S_A.integer_value, mb.S_A.integer_value);
                if (s != row["s_min"].get<std::uint64_t>()) pairs_ok = false;
            }
        }
        item("bundled companion pairs verify with published merits", pairs_ok);

        // integer existence floors
        std::ifstream wf(path("welch_targets.json"));
        json welch = json::parse(wf);
        bool welch_ok = true;
        for (const auto& row : welch["rows"])
            if (existence_thresholds(row["m"].get<int>()).lambda_W_A !=
                row["lambda_W"].get<std::int64_t>())
                welch_ok = false;
        item("integer existence floors match all published values", welch_ok);

        // long seed pairs: pair cost and lifted column merit
        std::ifstream lf(path("long_seed_pairs.json"));
        json longs = json::parse(lf);
        bool longs_ok = true;
        for (const auto& row : longs["pairs"]) {
            std::string s0s, s1s;
            for (char ch : row["s0"].get<std::string>()) (s0s += ch) += ' ';
            for (char ch : row["s1"].get<std::string>()) (s1s += ch) += ' ';
            const Seq s0 = Seq::parse(s0s);
            const Seq s1 = Seq::parse(s1s);
            if (lambda_B(s0, s1) != row["lambda_B"].get<double>()) longs_ok = false;
            const auto cp = case1_lift(s0, s1);
            const double lam_u =
                std::max(merits(cp.c0).lambda_A.value(), merits(cp.c1).lambda_A.value());
            if (lam_u != row["lambda_u"].get<double>()) longs_ok = false;
        }
        item("long seed pairs: pair cost and lifted column merit", longs_ok);
    } catch (const std::exception& e) {
        std::cout << "[FAIL] selftest aborted: " << e.what() << "\n";
        ++failures;
    }

    return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary set matrices from companion sequence pairs"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "construct an MO collection from a seed pair");
    build_cmd->add_option("--seed", build_args.seed, "seed pair file or golay:<q>")->required();
    build_cmd->add_option("--p", build_args.p, "length-extension steps")->check(CLI::NonNegativeNumber);
    build_cmd->add_option("--t", build_args.t, "size-extension steps")->check(CLI::NonNegativeNumber);
    build_cmd->add_option("--length-mode", build_args.length_modes,
                          "concat|interleave, single value or comma list");
    build_cmd->add_option("--size-mode", build_args.size_modes,
                          "concat|interleave, single value or comma list");
    build_cmd->add_option("-o,--out", build_args.out, "write matrix text here, sidecar to stdout");
    build_cmd->add_flag("--json", build_args.as_json, "JSON on stdout");

    std::string analyze_path;
    bool analyze_periodic = false, analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "per-column correlation merits");
    analyze_cmd->add_option("matrix", analyze_path, "matrix text file")->required();
    analyze_cmd->add_flag("--periodic", analyze_periodic, "include periodic merits in the table");
    analyze_cmd->add_flag("--json", analyze_json, "JSON on stdout");

    int bounds_m = 0, bounds_t = 0;
    double bounds_E = -1;
    std::optional<double> bounds_lambda0, bounds_S0;
    double lambda0_in = -1, S0_in = -1;
    bool bounds_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form column correlation bounds");
    bounds_cmd->add_option("--m", bounds_m, "companion pair length")->required();
    bounds_cmd->add_option("--t", bounds_t, "size-extension steps");
    bounds_cmd->add_option("--E", bounds_E, "sequence energy (default m)");
    bounds_cmd->add_option("--lambda0", lambda0_in, "seed peak merit");
    bounds_cmd->add_option("--S0", S0_in, "seed sum merit");
    bounds_cmd->add_flag("--json", bounds_json, "JSON on stdout");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "companion pair search");
    search_cmd->add_option("--alphabet", search_args.alphabet, "binary|ternary|quad");
    search_cmd->add_option("--m", search_args.m, "sequence length (even)");
    search_cmd->add_option("--t", search_args.t, "size-extension level for the constraint");
    search_cmd->add_option("--constraint", search_args.constraint, "KIND:BOUND, e.g. lambdaA:2");
    search_cmd->add_option("--minimize", search_args.minimize, "merit kind to minimize");
    search_cmd->add_flag("--anneal", search_args.anneal, "simulated annealing over half-length pairs");
    search_cmd->add_option("--half-len", search_args.half_len, "half length for --anneal");
    search_cmd->add_option("--budget", search_args.budget, "evaluation budget for --anneal");
    search_cmd->add_option("--seed", search_args.rng_seed, "RNG seed");
    search_cmd->add_option("--jobs", search_args.jobs, "worker threads (or COMPSEQ_JOBS)");
    search_cmd->add_option("--cap", search_args.cap, "exhaustive candidate cap (default 2^26)");
    search_cmd->add_flag("--json", search_args.as_json, "JSON on stdout");

    int lift_case = 1;
    std::string lift_s0, lift_s1;
    bool lift_json = false;
    auto* lift_cmd = app.add_subcommand("lift", "companion pair from two half-length sequences");
    lift_cmd->add_option("--case", lift_case, "1 = interleaved, 2 = concatenated")
        ->check(CLI::Range(1, 2));
    lift_cmd->add_option("--s0", lift_s0, "first sequence file")->required();
    lift_cmd->add_option("--s1", lift_s1, "second sequence file")->required();
    lift_cmd->add_flag("--json", lift_json, "JSON on stdout");

    std::string v_companion, v_complementary, v_mates, v_mo, v_golay;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "predicate checks with witnesses");
    verify_cmd->add_option("--companion", v_companion, "two-sequence file");
    verify_cmd->add_option("--complementary", v_complementary, "matrix file");
    verify_cmd->add_option("--mates", v_mates, "file with two matrices");
    verify_cmd->add_option("--mo", v_mo, "file with one matrix per set");
    verify_cmd->add_option("--golay", v_golay, "file with one sequence (or a pair)");
    verify_cmd->add_flag("--json", verify_json, "JSON on stdout");

    std::string selftest_data = "data/published";
    auto* selftest_cmd = app.add_subcommand("selftest", "run the bundled reproduction suite");
    selftest_cmd->add_option("--data", selftest_data, "bundled data directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build_cmd->parsed()) return run_build(build_args);
        if (analyze_cmd->parsed()) return run_analyze(analyze_path, analyze_periodic, analyze_json);
        if (bounds_cmd->parsed()) {
            if (lambda0_in >= 0) bounds_lambda0 = lambda0_in;
            if (S0_in >= 0) bounds_S0 = S0_in;
            const double E = bounds_E >= 0 ? bounds_E : static_cast<double>(bounds_m);
            return run_bounds(bounds_m, bounds_t, E, bounds_lambda0, bounds_S0, bounds_json);
        }
        if (search_cmd->parsed()) return run_search(search_args);
        if (lift_cmd->parsed()) return run_lift(lift_case, lift_s0, lift_s1, lift_json);
        if (verify_cmd->parsed())
            return run_verify(v_companion, v_complementary, v_mates, v_mo, v_golay, verify_json);
        if (selftest_cmd->parsed()) return run_selftest(selftest_data);
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
