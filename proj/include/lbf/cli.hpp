#pragma once

// Command-line front end. run() is a pure function of argv: it returns the
// exit code and the text that would be printed, so the same code path serves
// the executable and the tests.
//
// The first output line is always `ok|fail|error <summary>`.
// Exit codes: 0 success / verified, 1 verified false or nothing found,
// 2 usage or parse error, 3 infeasible input or exhausted budget.

#include "lbf.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lbf::cli {

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string join(const std::vector<unsigned> & xs, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
    return s;
}

inline std::string subset_string(std::uint32_t mask)
{
    std::vector<unsigned> idx;
    for (unsigned i = 0; mask >> i; ++i)
        if ((mask >> i) & 1u)
            idx.push_back(i + 1);
    return "{" + join(idx) + "}";
}

inline std::string p_or_none(const std::optional<Rational> & p) { return p ? to_string(*p) : "none"; }

inline CubeFunction load_cube(const std::string & path) { return read_file<CubeFunction>(path, [](auto & in) { return read_cube(in); }); }

inline std::optional<Rational> parse_p(const std::string & text)
{
    if (text.empty())
        return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }
}

class Runner {
public:
    CommandResult run(const std::vector<std::string> & argv)
    {
        CLI::App app{"Locally biased and locally stable Boolean functions", "lbf"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Print help for every subcommand");
        setup(app);
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        try {
            app.parse(std::move(reversed));
        } catch (const CLI::CallForHelp &) {
            return {0, "ok help\n" + app.help()};
        } catch (const CLI::CallForAllHelp &) {
            return {0, "ok help\n" + app.help("", CLI::AppFormatMode::All)};
        } catch (const CLI::ParseError & e) {
            return {2, "error usage " + std::string(e.what()) + "\n"};
        }
        try {
            action_();
        } catch (const ParseError & e) {
            return {2, "error parse " + std::string(e.what()) + "\n"};
        } catch (const UsageError & e) {
            return {2, "error usage " + std::string(e.what()) + "\n"};
        } catch (const std::invalid_argument & e) {
            return {3, "error infeasible " + std::string(e.what()) + "\n"};
        } catch (const std::out_of_range & e) {
            return {3, "error infeasible " + std::string(e.what()) + "\n"};
        } catch (const std::domain_error & e) {
            return {3, "error infeasible " + std::string(e.what()) + "\n"};
        } catch (const std::exception & e) {
            return {2, "error " + std::string(e.what()) + "\n"};
        }
        return {code_, out_.str()};
    }

private:
    void emit_cube(const std::string & summary, const CubeFunction & f)
    {
        out_ << "ok " << summary << " n=" << f.dimension() << '\n';
        if (out_path_.empty())
            write_cube(out_, f);
        else
            write_file(out_path_, [](std::ostream & o, const CubeFunction & g) { write_cube(o, g); }, f);
    }

    void setup(CLI::App & app)
    {
        setup_construct(app);
        setup_verify(app);
        setup_spectrum(app);
        setup_isomorphic(app);
        setup_enumerate(app);
        setup_count(app);
        setup_scenery(app);
        setup_lattice(app);
        setup_cayley(app);
        setup_tree(app);
    }

    void setup_construct(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("construct", "Build a function (or code) and write it in file format");
        cmd->add_option("builder", builder_,
                        "g | h | h_k | hamming | from-code | m-over-n | tensor-lift | product | signature | "
                        "stable-parity | stable-from-biased | stable-extend | biased")
            ->required();
        cmd->add_option("--n", n_, "dimension");
        cmd->add_option("--k", k_, "index parameter");
        cmd->add_option("--m", m_, "numerator / count parameter");
        cmd->add_option("--c", c_, "lift factor");
        cmd->add_option("--p", p_text_, "target bias b/d");
        cmd->add_option("--sig", sig_, "signature entries, e.g. 1,1,2")->delimiter(',');
        cmd->add_option("--fn", fn_, "input cube file");
        cmd->add_option("--fn-a", fn_a_, "first input cube file");
        cmd->add_option("--fn-b", fn_b_, "second input cube file");
        cmd->add_option("--code", code_path_, "input code file");
        cmd->add_flag("--rearranged", rearranged_, "hamming: move parity bits to the right");
        cmd->add_option("--translate", translate_, "hamming: parity-bit translate index (implies --rearranged)");
        cmd->add_option("--out", out_path_, "output path");
        cmd->callback([this] { action_ = [this] { construct(); }; });
    }

    unsigned need(const std::optional<unsigned> & v, const char * flag)
    {
        if (!v)
            throw UsageError(std::string("missing ") + flag + " for builder '" + builder_ + "'");
        return *v;
    }

    const std::string & need(const std::string & v, const char * flag)
    {
        if (v.empty())
            throw UsageError(std::string("missing ") + flag + " for builder '" + builder_ + "'");
        return v;
    }

    void construct()
    {
        const auto & b = builder_;
        if (b == "g")
            return emit_cube("g", parity_g(need(n_, "--n")));
        if (b == "h")
            return emit_cube("h", base_h());
        if (b == "h_k")
            return emit_cube("h_k", h_k(need(k_, "--k")));
        if (b == "hamming") {
            const unsigned k = need(k_, "--k");
            auto code = hamming_code(k);
            if (rearranged_ || translate_)
                code = rearrange_parity_right(code, k);
            if (translate_)
                code = xor_translate(code, parity_translate_mask(k, *translate_));
            out_ << "ok hamming length=" << code.length() << " words=" << code.size() << '\n';
            if (out_path_.empty())
                write_code(out_, code);
            else
                write_file(out_path_, [](std::ostream & o, const BinaryCode & c) { write_code(o, c); }, code);
            return;
        }
        if (b == "from-code") {
            auto code = read_file<BinaryCode>(need(code_path_, "--code"), [](auto & in) { return read_code(in); });
            return emit_cube("from-code", biased_from_code(code));
        }
        if (b == "m-over-n")
            return emit_cube("m-over-n", biased_m_over_n(need(k_, "--k"), need(m_, "--m")));
        if (b == "tensor-lift")
            return emit_cube("tensor-lift", tensor_lift(load_cube(need(fn_, "--fn")), need(c_, "--c")));
        if (b == "product")
            return emit_cube("product", product(load_cube(need(fn_a_, "--fn-a")), load_cube(need(fn_b_, "--fn-b"))));
        if (b == "signature")
            return emit_cube("signature", half_biased_from_signature(need(n_, "--n"), sig_));
        if (b == "stable-parity")
            return emit_cube("stable-parity", stable_parity(need(n_, "--n"), need(m_, "--m")));
        if (b == "stable-from-biased")
            return emit_cube("stable-from-biased", stable_from_biased(load_cube(need(fn_, "--fn"))));
        if (b == "stable-extend")
            return emit_cube("stable-extend", stable_extend(load_cube(need(fn_, "--fn")), need(n_, "--n")));
        if (b == "biased") {
            auto p = parse_p(need(p_text_, "--p"));
            return emit_cube("biased", build_locally_biased(need(n_, "--n"), *p));
        }
        throw UsageError("unknown builder '" + b + "'");
    }

    void setup_verify(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("verify", "Check local bias / stability of a cube function, or a code");
        cmd->add_option("--fn", fn_, "cube file");
        cmd->add_option("--code", code_path_, "code file");
        cmd->add_option("--kind", kind_, "biased | stable")->check(CLI::IsMember({"biased", "stable"}));
        cmd->callback([this] { action_ = [this] { verify(); }; });
    }

    void verify()
    {
        if (!code_path_.empty()) {
            auto code = read_file<BinaryCode>(code_path_, [](auto & in) { return read_code(in); });
            const bool perfect = is_perfect_radius1(code);
            const std::string dist = code.size() >= 2 ? std::to_string(min_distance(code)) : "none";
            out_ << (perfect ? "ok perfect" : "fail not-perfect") << " words=" << code.size()
                 << " min-distance=" << dist << '\n';
            code_ = perfect ? 0 : 1;
            return;
        }
        const auto f = load_cube(need(fn_, "--fn"));
        const bool biased = kind_ == "biased";
        const auto p = biased ? is_locally_biased(f) : is_locally_stable(f);
        const char * word = biased ? "biased" : "stable";
        if (p) {
            out_ << "ok " << word << " p=" << to_string(*p) << '\n';
        } else {
            const auto prof = local_profile(f, biased ? ProfileKind::bias : ProfileKind::stability);
            const auto [lo, hi] = std::minmax_element(prof.counts.begin(), prof.counts.end());
            out_ << "fail not-" << word << " counts-range=" << unsigned(*lo) << ".." << unsigned(*hi) << '\n';
            code_ = 1;
        }
    }

    void setup_spectrum(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("spectrum", "Exact Walsh spectrum and degree weights");
        cmd->add_option("--fn", fn_, "cube file")->required();
        cmd->callback([this] { action_ = [this] { spectrum(); }; });
    }

    void spectrum()
    {
        const auto f = load_cube(fn_);
        const auto s = walsh_transform(f);
        out_ << "ok spectrum n=" << s.n << " nonzero=" << s.support_size() << '\n';
        const Rational scale = Rational(BigInt(1) << s.n);
        for (std::uint32_t m = 0; m < s.coeffs.size(); ++m)
            if (s[m] != 0)
                out_ << "coeff " << subset_string(m) << ' ' << s[m] << ' ' << to_string(Rational(s[m]) / scale) << '\n';
        for (unsigned d = 0; d <= s.n; ++d) {
            const auto w = degree_weight(s, d);
            if (w != 0)
                out_ << "weight " << d << ' ' << to_string(w) << '\n';
        }
    }

    void setup_isomorphic(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("isomorphic", "Decide whether two cube functions are isomorphic");
        cmd->add_option("--fn-a", fn_a_, "first cube file")->required();
        cmd->add_option("--fn-b", fn_b_, "second cube file")->required();
        cmd->add_option("--exact-bound", iso_opts_.exact_bound, "largest n searched exhaustively")->capture_default_str();
        cmd->add_option("--budget", iso_opts_.node_budget, "permutation search node budget")->capture_default_str();
        cmd->callback([this] { action_ = [this] { isomorphic(); }; });
    }

    void isomorphic()
    {
        const auto a = load_cube(fn_a_), b = load_cube(fn_b_);
        if (a.dimension() != b.dimension())
            throw std::invalid_argument("dimensions differ: " + std::to_string(a.dimension()) + " vs "
                                        + std::to_string(b.dimension()));
        const auto r = are_isomorphic(a, b, iso_opts_);
        switch (r.verdict) {
        case Verdict::isomorphic: {
            std::vector<unsigned> perm;
            for (auto p : r.witness->perm)
                perm.push_back(p + 1u);
            std::vector<unsigned> flips;
            for (unsigned i = 0; i < a.dimension(); ++i)
                if ((r.witness->flips >> i) & 1u)
                    flips.push_back(i + 1);
            out_ << "ok isomorphic perm=" << join(perm) << " flips={" << join(flips) << "}\n";
            break;
        }
        case Verdict::non_isomorphic:
            out_ << "fail non-isomorphic " << r.certificate << '\n';
            code_ = 1;
            break;
        case Verdict::unknown:
            out_ << "error unknown " << r.certificate << '\n';
            code_ = 3;
            break;
        }
    }

    void setup_enumerate(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("enumerate", "Enumerate locally biased/stable functions on a small cube");
        cmd->add_option("--n", n_, "dimension")->required();
        cmd->add_option("--p", p_text_, "restrict to this p (b/d)");
        cmd->add_option("--kind", kind_, "biased | stable")->check(CLI::IsMember({"biased", "stable"}));
        cmd->add_option("--mode", mode_, "oracle | backtrack")->check(CLI::IsMember({"oracle", "backtrack"}));
        cmd->add_option("--threads", threads_, "worker threads")->check(CLI::PositiveNumber);
        cmd->callback([this] { action_ = [this] { enumerate(); }; });
    }

    void enumerate()
    {
        const auto p = parse_p(p_text_);
        const auto kind = kind_ == "stable" ? ProfileKind::stability : ProfileKind::bias;
        const auto mode = mode_ == "oracle" ? EnumerationMode::oracle : EnumerationMode::backtrack;
        const auto r = enumerate_functions(*n_, {kind, p}, mode, threads_);
        std::string ps;
        for (const auto & q : r.realised_p())
            ps += (ps.empty() ? "" : ",") + to_string(q);
        out_ << (r.functions.empty() ? "fail" : "ok") << " enumerate n=" << r.n << " kind=" << kind_
             << " p=" << (p ? to_string(*p) : "any") << " functions=" << r.total_functions()
             << " classes=" << r.class_representatives.size() << " realised-p={" << ps << "} nodes=" << r.nodes
             << '\n';
        for (const auto & c : r.class_representatives) {
            const auto q = kind == ProfileKind::bias ? is_locally_biased(c) : is_locally_stable(c);
            out_ << table_string(c) << ' ' << to_string(*q) << '\n';
        }
        code_ = r.functions.empty() ? 1 : 0;
    }

    void setup_count(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("count", "Counting identities");
        cmd->add_option("--what", what_, "solutions | partitions | bound | nullspace")
            ->required()
            ->check(CLI::IsMember({"solutions", "partitions", "bound", "nullspace"}));
        cmd->add_option("--k", k_, "argument (for bound and nullspace: the dimension n)");
        cmd->add_option("--n", n_, "dimension for bound / nullspace");
        cmd->callback([this] { action_ = [this] { count(); }; });
    }

    void count()
    {
        auto arg = [&]() -> unsigned {
            if (n_)
                return *n_;
            if (k_)
                return *k_;
            throw UsageError("count needs --k");
        };
        if (what_ == "solutions") {
            const unsigned k = arg();
            out_ << "ok solutions k=" << k << " value=" << count_solutions_leq(k) << '\n';
        } else if (what_ == "partitions") {
            const unsigned k = arg();
            out_ << "ok partitions k=" << k << " value=" << count_partitions(k) << '\n';
        } else if (what_ == "bound") {
            const unsigned n = arg();
            const auto b = half_biased_lower_bound(n);
            const bool holds = b.exact >= b.binomial;
            out_ << (holds ? "ok" : "fail") << " bound n=" << n << " k=" << b.k << " exact=" << b.exact
                 << " binomial=" << b.binomial << '\n';
            code_ = holds ? 0 : 1;
        } else {
            const unsigned n = arg();
            out_ << "ok nullspace n=" << n << " value=" << null_space_dimension(n);
            if (n <= 8)
                out_ << " rank-check=" << adjacency_kernel_dimension(n);
            out_ << '\n';
        }
    }

    void setup_scenery(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("scenery", "Scenery laws and samples");
        cmd->require_subcommand(1);
        auto * exact = cmd->add_subcommand("exact", "Exact law of the scenery word");
        exact->add_option("--fn", fn_, "cube file")->required();
        exact->add_option("--len", len_, "number of walk steps L")->required();
        exact->add_flag("--pairs", pairs_, "law of consecutive products f(S_i)f(S_i+1) instead");
        exact->callback([this] { action_ = [this] { scenery_exact(); }; });

        auto * sample = cmd->add_subcommand("sample", "Sample walks and compare with the exact law");
        sample->add_option("--fn", fn_, "cube file")->required();
        sample->add_option("--len", len_, "number of walk steps L")->required();
        sample->add_option("--n-samples", samples_, "number of walks")->required()->check(CLI::PositiveNumber);
        sample->add_option("--seed", seed_, "64-bit seed")->capture_default_str();
        sample->add_option("--bernoulli", p_text_, "compare against the product law with this p instead");
        sample->callback([this] { action_ = [this] { scenery_sample(); }; });

        auto * compare = cmd->add_subcommand("compare", "Exact equality of two scenery laws");
        compare->add_option("--fn-a", fn_a_, "first cube file")->required();
        compare->add_option("--fn-b", fn_b_, "second cube file")->required();
        compare->add_option("--len", len_, "number of walk steps L")->required();
        compare->add_flag("--pairs", pairs_, "compare consecutive-product laws");
        compare->callback([this] { action_ = [this] { scenery_compare(); }; });
    }

    SceneryDistribution law(const CubeFunction & f) const
    {
        return pairs_ ? stability_pair_distribution(f, len_) : exact_scenery_distribution(f, len_);
    }

    void scenery_exact()
    {
        const auto d = law(load_cube(fn_));
        out_ << "ok scenery-law L=" << len_ << " length=" << d.length << " words=" << d.probs.size() << '\n';
        write_distribution(out_, d);
    }

    void scenery_sample()
    {
        const auto f = load_cube(fn_);
        const auto p = parse_p(p_text_);
        const auto reference = p ? bernoulli_product(*p, len_ + 1) : exact_scenery_distribution(f, len_);
        const auto counts = sample_scenery_counts(f, len_, samples_, seed_);
        const auto r = chi_square_report(counts, reference);
        std::ostringstream stat;
        stat.precision(6);
        stat << std::fixed << r.statistic;
        const bool ok = r.incompatible.empty();
        out_ << (ok ? "ok" : "fail") << " scenery-sample N=" << r.total << " seed=" << seed_ << " chi2=" << stat.str()
             << " dof=" << r.degrees_of_freedom << " incompatible=" << r.incompatible.size() << '\n';
        for (const auto & [w, c] : counts)
            out_ << w << ' ' << c << '\n';
        code_ = ok ? 0 : 1;
    }

    void scenery_compare()
    {
        const auto a = law(load_cube(fn_a_)), b = law(load_cube(fn_b_));
        const bool eq = distributions_equal(a, b);
        out_ << (eq ? "ok equal" : "fail different") << " L=" << len_ << " words=" << a.probs.size() << ","
             << b.probs.size() << '\n';
        code_ = eq ? 0 : 1;
    }

    void setup_lattice(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("lattice", "Periodic colorings of Z^n");
        cmd->require_subcommand(1);
        auto * extend = cmd->add_subcommand("extend", "Extend a cube function periodically to Z^n");
        extend->add_option("--fn", fn_, "cube file")->required();
        extend->add_option("--out", out_path_, "output path");
        extend->callback([this] { action_ = [this] { lattice_extend(); }; });
        auto * verify = cmd->add_subcommand("verify", "Check local bias of a lattice file");
        verify->add_option("--file", file_, "lattice file")->required();
        verify->callback([this] { action_ = [this] { lattice_verify(); }; });
    }

    void lattice_extend()
    {
        const auto g = extend_to_lattice(load_cube(fn_));
        const auto p = verify_lattice_bias(g);
        out_ << "ok lattice n=" << g.dimension() << " periods=" << join(g.periods()) << " p=" << p_or_none(p) << '\n';
        if (out_path_.empty())
            write_lattice(out_, g);
        else
            write_file(out_path_, [](std::ostream & o, const PeriodicLatticeFunction & x) { write_lattice(o, x); }, g);
    }

    void lattice_verify()
    {
        const auto g = read_file<PeriodicLatticeFunction>(file_, [](auto & in) { return read_lattice(in); });
        const auto p = verify_lattice_bias(g);
        out_ << (p ? "ok lattice-biased p=" + to_string(*p) : std::string("fail not-lattice-biased")) << '\n';
        code_ = p ? 0 : 1;
    }

    void setup_cayley(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("cayley", "Colorings of Cayley graphs of Z");
        cmd->require_subcommand(1);
        auto * search = cmd->add_subcommand("search", "All periodic locally p-biased colorings up to symmetry");
        search->add_option("--gens", gens_, "generators, e.g. 2,3")->required()->delimiter(',');
        search->add_option("--p", p_text_, "bias b/d")->required();
        search->add_option("--pmax", pmax_, "largest period searched")->capture_default_str();
        search->callback([this] { action_ = [this] { cayley_search(); }; });
        auto * half = cmd->add_subcommand("half", "The period-2(a+b) half-biased coloring for generators {a,b}");
        half->add_option("--a", a_, "first generator")->required();
        half->add_option("--b", b_, "second generator")->required();
        half->add_option("--out", out_path_, "output path");
        half->callback([this] { action_ = [this] { cayley_half(); }; });
        auto * verify = cmd->add_subcommand("verify", "Check local bias of a cayleyz file");
        verify->add_option("--file", file_, "cayleyz file")->required();
        verify->callback([this] { action_ = [this] { cayley_verify(); }; });
    }

    void cayley_search()
    {
        const auto p = parse_p(p_text_);
        const auto r = search_cayley(gens_, pmax_, *p);
        out_ << (r.classes.empty() ? "fail" : "ok") << " cayley-search gens=" << join(gens_) << " p=" << to_string(*p)
             << " pmax=" << pmax_ << " classes=" << r.classes.size() << '\n';
        for (const auto & c : r.classes)
            out_ << c.period() << ' ' << pattern_string(c.pattern) << '\n';
        code_ = r.classes.empty() ? 1 : 0;
    }

    void cayley_half()
    {
        const auto f = cayley_half_biased(a_, b_);
        out_ << "ok cayley-half period=" << f.period() << " p=" << p_or_none(verify_cayley_bias(f)) << '\n';
        if (out_path_.empty())
            write_cayley(out_, f);
        else
            write_file(out_path_, [](std::ostream & o, const CayleyZFunction & x) { write_cayley(o, x); }, f);
    }

    void cayley_verify()
    {
        const auto f = read_file<CayleyZFunction>(file_, [](auto & in) { return read_cayley(in); });
        const auto p = verify_cayley_bias(f);
        out_ << (p ? "ok cayley-biased p=" + to_string(*p) : std::string("fail not-cayley-biased")) << '\n';
        code_ = p ? 0 : 1;
    }

    void setup_tree(CLI::App & app)
    {
        auto * cmd = app.add_subcommand("tree", "Locally biased labelings of regular trees");
        cmd->require_subcommand(1);
        auto * greedy = cmd->add_subcommand("greedy", "Greedy labeling of the truncated n-regular tree");
        greedy->add_option("--deg", deg_, "degree n")->required();
        greedy->add_option("--depth", depth_, "truncation depth")->required();
        greedy->add_option("--b", tree_b_, "number of +1 neighbors per vertex")->required();
        greedy->add_option("--seed", tree_seed_, "randomized mode seed");
        greedy->callback([this] { action_ = [this] { tree(); }; });
    }

    void tree()
    {
        const auto t = tree_greedy(deg_, depth_, tree_b_, tree_seed_);
        const bool ok = verify_tree(t, tree_b_);
        out_ << (ok ? "ok" : "fail") << " tree degree=" << deg_ << " depth=" << depth_ << " b=" << tree_b_
             << " vertices=" << t.size() << " mode=" << (tree_seed_ ? "random" : "greedy") << '\n';
        std::vector<std::string> levels(depth_ + 1);
        for (std::size_t v = 0; v < t.size(); ++v)
            levels[t.level[v]].push_back(t.signs[v] > 0 ? '+' : '-');
        for (unsigned d = 0; d <= depth_; ++d)
            out_ << d << ' ' << levels[d] << '\n';
        code_ = ok ? 0 : 1;
    }

    std::function<void()> action_ = [] {};
    std::ostringstream out_;
    int code_ = 0;

    std::string builder_, fn_, fn_a_, fn_b_, code_path_, out_path_, p_text_, file_;
    std::string kind_ = "biased", mode_ = "backtrack", what_;
    std::optional<unsigned> n_, k_, m_, c_, translate_;
    std::vector<unsigned> sig_, gens_;
    bool rearranged_ = false, pairs_ = false;
    IsomorphismOptions iso_opts_;
    unsigned threads_ = 1, len_ = 0, pmax_ = 20, a_ = 0, b_ = 0, deg_ = 0, depth_ = 0, tree_b_ = 0;
    std::uint64_t samples_ = 0, seed_ = kDefaultSeed;
    std::optional<std::uint64_t> tree_seed_;
};

} // namespace detail

/// argv excludes the program name.
inline CommandResult run(const std::vector<std::string> & argv)
{
    detail::Runner r;
    return r.run(argv);
}

} // namespace lbf::cli
