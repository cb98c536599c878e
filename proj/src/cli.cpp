#include "tsg/cli.hpp"

#include "tsg/char_table.hpp"
#include "tsg/errors.hpp"
#include "tsg/growth.hpp"
#include "tsg/markov.hpp"
#include "tsg/pieri.hpp"
#include "tsg/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>

namespace tsg::cli {

namespace {

using nlohmann::json;

struct Outcome {
    json params = json::object();
    json result = json::object();
    std::string text;
    int code = kOk;
};

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json partition_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

json fusion_json(const FusionVector& v)
{
    json coeffs = json::array();
    for (const auto& c : v.coeffs())
        coeffs.push_back(c.get_str());
    return json{{"p", v.p()}, {"coeffs", coeffs}, {"text", v.to_string()}};
}

json matrix_json(const TransitionMatrix& m)
{
    json rows = json::array();
    for (int r = 0; r < m.p(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.p(); ++c)
            row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

std::string ring_map_text(const IntegerRingMap& s)
{
    std::string out;
    for (int r = 0; r < s.p(); ++r) {
        out += "[";
        for (int c = 0; c < s.p(); ++c)
            out += (c ? ", " : "") + s(r, c).get_str();
        out += "]\n";
    }
    return out;
}

int require_prime_arg(int p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw PreconditionError("p = " + std::to_string(p) + " is not prime");
    return p;
}

// ---- pieri ---------------------------------------------------------------

struct PieriArgs {
    int m = 2;
    int n = 0;
    bool canonical = false;
    bool csv = false;
};

Outcome cmd_pieri(const PieriArgs& a)
{
    if (a.m < 1 || a.n < 0)
        throw PreconditionError("pieri needs m >= 1 and n >= 0");
    const Decomposition d = tensor_power_decomposition(a.m, a.n);
    const Decomposition::Map rows = a.canonical ? d.canonical() : d.mults;

    Outcome o;
    o.params = {{"m", a.m}, {"n", a.n}, {"canonical", a.canonical}};
    json summands = json::array();
    std::ostringstream text;
    if (a.csv)
        text << "partition,multiplicity,dimension\n";
    for (const auto& [lambda, mult] : rows) {
        const BigInt dim = weyl_dimension(lambda);
        summands.push_back({{"partition", partition_json(lambda)}, {"multiplicity", mult.get_str()}, {"dimension", dim.get_str()}});
        if (a.csv)
            text << csv_quote(lambda.to_string()) << ',' << mult.get_str() << ',' << dim.get_str() << '\n';
        else
            text << lambda.to_string() << ':' << mult.get_str() << '\n';
    }
    o.result = {{"summands", summands}, {"total_dimension", d.total_dimension().get_str()}};
    o.text = text.str();
    return o;
}

// ---- ts ------------------------------------------------------------------

Outcome series_outcome(const GrowthSeries& s)
{
    Outcome o;
    const auto roots = nth_root_sequence(s);
    const GrowthEstimate est = estimate(s);
    std::ostringstream text;
    text << "k,n,ts,nth_root\n";
    json rows = json::array();
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const auto k = i + 1;
        const auto n = static_cast<unsigned long>(s.step) * k;
        text << k << ',' << n << ',' << s.values[i].get_str() << ',' << format_real(roots[i]) << '\n';
        rows.push_back({{"k", k}, {"n", n}, {"ts", s.values[i].get_str()}, {"nth_root", roots[i]}});
    }
    text << "# lower=" << format_real(est.lower) << " upper=" << format_real(est.upper)
         << " fekete_ok=" << (est.fekete_ok ? "true" : "false") << '\n';
    o.result = {{"rows", rows},
                {"estimate", {{"lower", est.lower}, {"upper", est.upper}, {"fekete_ok", est.fekete_ok}}}};
    o.text = text.str();
    return o;
}

struct TsArgs {
    int m = 2;
    int p = 3;
    std::string seed = "V1";
    unsigned step = 2;
    unsigned max = 4;
};

Outcome cmd_ts_sl(const TsArgs& a)
{
    if (a.m < 1 || a.max < 1)
        throw PreconditionError("ts sl needs m >= 1 and max >= 1");
    Outcome o = series_outcome(ts_series_sl(a.m, static_cast<int>(a.max)));
    o.params = {{"mode", "sl"}, {"m", a.m}, {"max", a.max}};
    return o;
}

Outcome cmd_ts_modular(const TsArgs& a)
{
    require_prime_arg(a.p);
    if (a.step < 1 || a.max < 1)
        throw PreconditionError("ts modular needs step >= 1 and max >= 1");
    const FusionVector seed = FusionVector::parse(a.p, a.seed);
    Outcome o = series_outcome(ts_series_modular(seed, a.step, a.max));
    o.params = {{"mode", "modular"}, {"p", a.p}, {"seed", seed.to_string()}, {"step", a.step}, {"max", a.max}};
    return o;
}

// ---- fusion --------------------------------------------------------------

struct FusionArgs {
    int p = 3;
    int m = 0;
    int n = 0;
    bool oracle = false;
};

Outcome cmd_fusion(const FusionArgs& a, const Hooks& hooks)
{
    require_prime_arg(a.p);
    const FusionVector closed = fuse_basis(a.p, a.m, a.n);
    Outcome o;
    o.params = {{"p", a.p}, {"m", a.m}, {"n", a.n}, {"oracle", a.oracle}};
    o.result = {{"decomposition", fusion_json(closed)}};
    o.text = closed.to_string();
    if (a.oracle) {
        const FusionVector check = hooks.fusion_oracle(a.p, a.m, a.n);
        const bool agree = check == closed;
        o.result["oracle"] = fusion_json(check);
        o.result["agree"] = agree;
        o.text += agree ? " | AGREE" : " | DISAGREE (oracle: " + check.to_string() + ")";
        if (!agree)
            o.code = kComputationFailure;
    }
    o.text += '\n';
    return o;
}

// ---- markov --------------------------------------------------------------

struct MarkovArgs {
    int p = 2;
    bool example = false;
    std::string seed = "V1";
    unsigned power = 1;
};

Outcome cmd_markov_example()
{
    const IntegerRingMap s = example_map();
    const IntegerRingMap s2 = s.compose(s);
    const TransitionMatrix ps = p_of_map(s);
    const TransitionMatrix ps2 = p_of_map(s2);
    const TransitionMatrix ps_squared = ps * ps;
    const bool differ = ps2 != ps_squared;

    Outcome o;
    o.params = {{"p", 2}, {"example", true}};
    o.result = {{"P(S)", matrix_json(ps)}, {"P(S^2)", matrix_json(ps2)}, {"P(S)^2", matrix_json(ps_squared)},
                {"P(S^2) != P(S)^2", differ}};
    std::ostringstream text;
    text << "[S] =\n" << ring_map_text(s) << "[S^2] =\n" << ring_map_text(s2) << "P(S) =\n" << ps.to_string()
         << "P(S^2) =\n" << ps2.to_string() << "P(S)^2 =\n" << ps_squared.to_string()
         << (differ ? "P(S^2) != P(S)^2\n" : "P(S^2) == P(S)^2\n");
    o.text = text.str();
    if (!differ)
        o.code = kComputationFailure;
    return o;
}

Outcome cmd_markov_seed(const MarkovArgs& a)
{
    require_prime_arg(a.p);
    const FusionVector seed = FusionVector::parse(a.p, a.seed);
    if (seed.is_zero())
        throw PreconditionError("markov needs a nonzero seed");
    const TransitionMatrix step = p_of_tensor_by(seed);
    const TransitionMatrix iterated = step.pow(a.power);
    const TransitionMatrix direct = p_of_tensor_by(tensor_power(seed, a.power));
    const bool multiplicative = iterated == direct;

    Outcome o;
    o.params = {{"p", a.p}, {"seed", seed.to_string()}, {"power", a.power}};
    std::ostringstream text;
    text << "P(T)^" << a.power << " =\n" << iterated.to_string();
    o.result = {{"matrix", matrix_json(iterated)}, {"multiplicative", multiplicative}};
    try {
        const Rational r = decay_rate(seed);
        text << "decay_rate: " << r.get_str() << '\n';
        o.result["decay_rate"] = r.get_str();
    } catch (const PreconditionError& e) {
        text << "decay_rate: undefined (" << e.what() << ")\n";
        o.result["decay_rate"] = nullptr;
    }
    text << "check P(T)^" << a.power << " = P(T^" << a.power << "): " << (multiplicative ? "OK" : "FAIL") << '\n';
    o.text = text.str();
    if (!multiplicative)
        o.code = kComputationFailure;
    return o;
}

// ---- torus ---------------------------------------------------------------

struct TorusArgs {
    std::vector<long> weights;
    bool diagonal = false;
    int m = 2;
    int n = 0;
};

Outcome cmd_torus(const TorusArgs& a)
{
    if (a.n < 0)
        throw PreconditionError("torus needs n >= 0");
    Outcome o;
    if (a.diagonal) {
        if (a.m < 1)
            throw PreconditionError("torus --diagonal needs m >= 1");
        const BigInt count = diagonal_zero_count(a.m, a.n);
        o.params = {{"diagonal", true}, {"m", a.m}, {"n", a.n}};
        o.result = {{"count", count.get_str()}};
        o.text = count.get_str() + '\n';
        return o;
    }
    if (a.weights.empty())
        throw PreconditionError("torus needs --weights or --diagonal");
    const TorusWeights w{a.weights};
    const BigInt count = zero_weight_count(w, a.n);
    const Rational prob = zero_weight_probability(w, a.n);
    o.params = {{"weights", a.weights}, {"n", a.n}};
    o.result = {{"count", count.get_str()}, {"probability", prob.get_str()}};
    std::ostringstream text;
    text << "count: " << count.get_str() << "\nprobability: " << prob.get_str() << '\n';
    try {
        const BernsteinBound b = bernstein_zero_bound(w, a.n);
        text << "bound: " << format_real(b.bound) << " (t=" << b.input.t.get_str() << " v=" << b.input.v.get_str()
             << " b=" << b.input.b.get_str() << ")\n";
        o.result["bound"] = {{"value", b.bound},
                             {"t", b.input.t.get_str()},
                             {"v", b.input.v.get_str()},
                             {"b", b.input.b.get_str()}};
    } catch (const InapplicableBound& e) {
        text << "bound: inapplicable (" << e.what() << ")\n";
        o.result["bound"] = nullptr;
    }
    o.text = text.str();
    return o;
}

// ---- chartab -------------------------------------------------------------

struct ChartabArgs {
    std::string table;
    std::string irrep;
    std::string target;
    unsigned power = 1;
    unsigned max = 0;
};

CharacterTable load_table(const std::string& source)
{
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0)
        return CharacterTable::builtin(source.substr(prefix.size()));
    return CharacterTable::parse_file(source);
}

std::string multiplicity_text(const CharacterTable& t, const std::vector<long>& mults)
{
    std::string out;
    for (std::size_t i = 0; i < mults.size(); ++i)
        out += (i ? " " : "") + t.irreps()[i].name + ":" + std::to_string(mults[i]);
    return out;
}

json multiplicity_json(const CharacterTable& t, const std::vector<long>& mults)
{
    json out = json::object();
    for (std::size_t i = 0; i < mults.size(); ++i)
        out[t.irreps()[i].name] = mults[i];
    return out;
}

Outcome cmd_chartab(const ChartabArgs& a, const std::string& sub)
{
    const CharacterTable t = load_table(a.table);
    const std::size_t idx = t.index_of(a.irrep);
    const ClassFunction& f = t.irreps()[idx].character;
    Outcome o;
    o.params = {{"table", a.table}, {"subcommand", sub}, {"irrep", a.irrep}};
    std::ostringstream text;

    if (sub == "decompose") {
        const auto mults = decompose(t, tensor_power_char(f, a.power));
        o.params["power"] = a.power;
        o.result = {{"multiplicities", multiplicity_json(t, mults)}};
        text << multiplicity_text(t, mults) << '\n';
    } else if (sub == "first-power") {
        const unsigned cap = a.max ? a.max : static_cast<unsigned>(t.order());
        o.params["max"] = cap;
        std::vector<std::size_t> targets;
        if (a.target.empty())
            for (std::size_t i = 0; i < t.irreps().size(); ++i)
                targets.push_back(i);
        else {
            targets.push_back(t.index_of(a.target));
            o.params["target"] = a.target;
        }
        json found = json::object();
        for (std::size_t target : targets) {
            const auto d = first_power_containing(t, f, target, cap);
            const auto& name = t.irreps()[target].name;
            found[name] = d ? json(*d) : json(nullptr);
            text << name << ": " << (d ? std::to_string(*d) : "not found (d <= " + std::to_string(cap) + ")") << '\n';
        }
        o.result = {{"first_power", found}};
    } else if (sub == "regular-check") {
        const RegularCheck r = regular_tensor_check(t, f);
        o.result = {{"ok", r.ok},
                    {"degree", r.degree},
                    {"multiplicities", multiplicity_json(t, r.multiplicities)},
                    {"ts", r.trivial_summands}};
        text << (r.ok ? "OK" : "FAIL") << ": V⊗V_G = " << r.degree << "·V_G, TS=" << r.trivial_summands << '\n';
        if (!r.ok)
            o.code = kComputationFailure;
    } else {
        const unsigned cap = a.max ? a.max : static_cast<unsigned>(4 * t.order());
        o.params["max"] = cap;
        const RegularPower r = min_power_containing_regular(t, f, cap);
        o.result = {{"power", r.power ? json(*r.power) : json(nullptr)}, {"monotone_next", r.monotone_next}};
        if (r.power)
            text << "N = " << *r.power << " (N+1, N+2: " << (r.monotone_next ? "OK" : "FAIL") << ")\n";
        else
            text << "not found (N <= " << cap << ")\n";
        if (!r.power || !r.monotone_next)
            o.code = kComputationFailure;
    }
    o.text = text.str();
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks)
{
    CLI::App app{"Trivial-summand growth: tensor-power decompositions and checks", "tsgrowth"};
    app.require_subcommand(1);
    bool as_json = false;

    PieriArgs pieri_args;
    auto* pieri = app.add_subcommand("pieri", "Decompose V^{⊗n} for SL_m");
    pieri->add_option("--m", pieri_args.m, "rank")->required();
    pieri->add_option("--n", pieri_args.n, "tensor exponent")->required();
    pieri->add_flag("--canonical", pieri_args.canonical, "merge keys modulo full columns");
    auto* pieri_json = pieri->add_flag("--json", as_json, "JSON output");
    pieri->add_flag("--csv", pieri_args.csv, "CSV output")->excludes(pieri_json);

    TsArgs ts_args;
    auto* ts = app.add_subcommand("ts", "Trivial-summand series and growth estimate");
    ts->require_subcommand(1);
    ts->add_flag("--json", as_json, "JSON output");
    auto* ts_sl = ts->add_subcommand("sl", "SL_m natural representation, exponents m·k");
    ts_sl->add_option("--m", ts_args.m, "rank")->required();
    ts_sl->add_option("--max", ts_args.max, "number of terms")->required();
    ts_sl->add_flag("--json", as_json, "JSON output");
    auto* ts_mod = ts->add_subcommand("modular", "Z/pZ in characteristic p, exponents step·k");
    ts_mod->add_option("--p", ts_args.p, "prime")->required();
    ts_mod->add_option("--seed", ts_args.seed, "representation, e.g. V1 or V0+2V2")->required();
    ts_mod->add_option("--step", ts_args.step, "exponent spacing");
    ts_mod->add_option("--max", ts_args.max, "number of terms")->required();
    ts_mod->add_flag("--json", as_json, "JSON output");

    FusionArgs fusion_args;
    auto* fusion = app.add_subcommand("fusion", "V_m ⊗ V_n for Z/pZ");
    fusion->add_option("--p", fusion_args.p, "prime")->required();
    fusion->add_option("m", fusion_args.m, "first index")->required();
    fusion->add_option("n", fusion_args.n, "second index")->required();
    fusion->add_flag("--oracle", fusion_args.oracle, "cross-check with the Jordan-form oracle");
    fusion->add_flag("--json", as_json, "JSON output");

    MarkovArgs markov_args;
    auto* markov = app.add_subcommand("markov", "Transition matrices P(S)");
    markov->add_option("--p", markov_args.p, "prime")->required();
    auto* example = markov->add_flag("--example", markov_args.example, "the p = 2 non-multiplicative example");
    markov->add_option("--seed", markov_args.seed, "tensor-by representation")->excludes(example);
    markov->add_option("--power", markov_args.power, "matrix power")->excludes(example);
    markov->add_flag("--json", as_json, "JSON output");

    TorusArgs torus_args;
    auto* torus = app.add_subcommand("torus", "Zero-weight counts for torus actions");
    auto* weights = torus->add_option("--weights", torus_args.weights, "comma-separated weights")->delimiter(',');
    torus->add_flag("--diagonal", torus_args.diagonal, "diagonal torus of SL_m on V^{⊗mn}")->excludes(weights);
    torus->add_option("--m", torus_args.m, "rank (with --diagonal)");
    torus->add_option("--n", torus_args.n, "exponent")->required();
    torus->add_flag("--json", as_json, "JSON output");

    ChartabArgs chartab_args;
    auto* chartab = app.add_subcommand("chartab", "Finite-group character computations");
    chartab->add_option("table", chartab_args.table, "table file or builtin:NAME")->required();
    chartab->require_subcommand(1);
    chartab->add_flag("--json", as_json, "JSON output");
    std::vector<CLI::App*> chartab_subs;
    for (const char* name : {"decompose", "first-power", "regular-check", "min-regular"}) {
        auto* sub = chartab->add_subcommand(name);
        sub->add_option("--irrep", chartab_args.irrep, "character to use")->required();
        sub->add_flag("--json", as_json, "JSON output");
        chartab_subs.push_back(sub);
    }
    chartab_subs[0]->add_option("--power", chartab_args.power, "tensor power");
    chartab_subs[1]->add_option("--target", chartab_args.target, "irrep to look for (default: all)");
    chartab_subs[1]->add_option("--max", chartab_args.max, "largest power tried (default |G|)");
    chartab_subs[3]->add_option("--max", chartab_args.max, "largest N tried (default 4|G|)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::string command;
    Outcome outcome;
    try {
        if (pieri->parsed()) {
            command = "pieri";
            outcome = cmd_pieri(pieri_args);
            if (pieri_args.csv)
                as_json = false;
        } else if (ts->parsed()) {
            command = ts_sl->parsed() ? "ts sl" : "ts modular";
            outcome = ts_sl->parsed() ? cmd_ts_sl(ts_args) : cmd_ts_modular(ts_args);
        } else if (fusion->parsed()) {
            command = "fusion";
            outcome = cmd_fusion(fusion_args, hooks);
        } else if (markov->parsed()) {
            command = "markov";
            if (markov_args.example) {
                if (markov_args.p != 2)
                    throw PreconditionError("--example is defined for p = 2");
                outcome = cmd_markov_example();
            } else {
                outcome = cmd_markov_seed(markov_args);
            }
        } else if (torus->parsed()) {
            command = "torus";
            outcome = cmd_torus(torus_args);
        } else {
            std::string sub;
            for (auto* s : chartab_subs)
                if (s->parsed())
                    sub = s->get_name();
            command = "chartab " + sub;
            outcome = cmd_chartab(chartab_args, sub);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidPartition& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kComputationFailure;
    }

    if (as_json) {
        const json doc = {{"command", command}, {"params", outcome.params}, {"result", outcome.result}};
        out << doc.dump(2) << '\n';
    } else {
        out << outcome.text;
    }
    return outcome.code;
}

} // namespace tsg::cli
