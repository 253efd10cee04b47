// seqspace — command-line front end for the weighted-mean difference
// sequence-space toolkit: triangular transforms, basis expansions, dual
// condition batteries, and matrix-class verdicts at finite truncation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "seqspace/basis.hpp"
#include "seqspace/json_io.hpp"

using namespace seqspace;
using seqspace::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotMember = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string input;
    std::string mode;
    std::string format = "text";
    std::string r, s, t, x, y, a;
    std::string preset_name, alpha, u, v;
    std::string matrix;  // inline JSON array of rows
    std::string kind;    // triangle kind or dual kind
    std::string which;   // battery condition ids
    std::string from = "c0", to = "c0";
    std::string form = "c0";
    std::string ell;
    long basis_index = 0;
    long reconstruct_order = -1;
    std::size_t trunc = 0;  // N
    std::size_t table = 0;  // M
    double tol = 1e-9;
    std::size_t window = 8;
    std::size_t subset_max_col = 12;
};

// Input document plus consumed-key tracking so leftovers can be warned
// about.
struct Doc {
    json value;
    std::set<std::string> consumed;

    bool has(const std::string& key) const { return value.is_object() && value.contains(key); }
    const json& get(const std::string& key) {
        consumed.insert(key);
        return value.at(key);
    }
    void warn_unused() const {
        if (!value.is_object()) return;
        for (const auto& [key, unused] : value.items())
            if (!consumed.count(key))
                std::cerr << "warning: ignoring unused input field '" << key << "'\n";
    }
};

Doc load_doc(const std::string& path) {
    if (path.empty()) return {json(), {}};
    if (path == "-") return {io::parse_stream(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    return {io::parse_stream(in), {}};
}

Mode resolve_mode(const Options& opt, Doc& doc) {
    if (!opt.mode.empty()) return mode_from_name(opt.mode);
    if (doc.has("mode")) return mode_from_name(doc.get("mode").get<std::string>());
    if (const char* env = std::getenv("SEQSPACE_MODE")) return mode_from_name(env);
    return Mode::Exact;
}

std::vector<Scalar> csv_scalars(const std::string& text, Mode mode, const std::string& what) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item, mode));
    if (out.empty()) throw std::invalid_argument(what + ": empty sequence");
    return out;
}

std::optional<SeqPrefix> seq_input(const std::string& flag, Doc& doc, const std::string& key,
                                   Mode mode, Tail tail) {
    if (!flag.empty()) return SeqPrefix(csv_scalars(flag, mode, key), tail);
    if (doc.has(key)) return io::seq_from(doc.get(key), mode, tail, key);
    return std::nullopt;
}

SeqPrefix require_seq(const std::string& flag, Doc& doc, const std::string& key, Mode mode,
                      Tail tail) {
    auto s = seq_input(flag, doc, key, mode, tail);
    if (!s)
        throw std::invalid_argument("missing input '" + key + "' (flag --" + key +
                                    " or JSON field)");
    return *s;
}

std::size_t resolve_count(std::size_t flag, Doc& doc, const std::string& key,
                          std::size_t fallback) {
    if (flag != 0) return flag;
    if (doc.has(key)) return doc.get(key).get<std::size_t>();
    return fallback;
}

double resolve_tol(const Options& opt, Doc& doc) {
    if (opt.tol != 1e-9) return opt.tol;
    if (doc.has("tol")) {
        const json& j = doc.get("tol");
        if (j.is_string()) return std::stod(j.get<std::string>());
        return j.get<double>();
    }
    return opt.tol;
}

std::size_t resolve_window(const Options& opt, Doc& doc) {
    if (opt.window != 8) return opt.window;
    if (doc.has("trend_window")) return doc.get("trend_window").get<std::size_t>();
    return opt.window;
}

// Parameter triple from explicit r/s/t or a preset, materialized to cover
// `length` entries.
ParamTriple params_input(const Options& opt, Doc& doc, Mode mode, std::size_t length) {
    std::string preset_id = opt.preset_name;
    PresetArgs args;
    if (doc.has("preset")) {
        const json& pj = doc.get("preset");
        if (preset_id.empty() && pj.contains("name")) preset_id = pj.at("name").get<std::string>();
        if (pj.contains("alpha")) args.alpha = io::scalar_from(pj.at("alpha"), mode, "preset.alpha");
        if (pj.contains("u")) args.u = io::seq_from(pj.at("u"), mode, Tail::Unknown, "preset.u");
        if (pj.contains("v")) args.v = io::seq_from(pj.at("v"), mode, Tail::Unknown, "preset.v");
    }
    if (!opt.alpha.empty()) args.alpha = Scalar::parse(opt.alpha, mode);
    if (!opt.u.empty()) args.u = SeqPrefix(csv_scalars(opt.u, mode, "u"));
    if (!opt.v.empty()) args.v = SeqPrefix(csv_scalars(opt.v, mode, "v"));

    if (!preset_id.empty()) return preset(preset_from_name(preset_id), length, mode, args);

    auto r = seq_input(opt.r, doc, "r", mode, Tail::Unknown);
    auto s = seq_input(opt.s, doc, "s", mode, Tail::Unknown);
    auto t = seq_input(opt.t, doc, "t", mode, Tail::Unknown);
    if (!r || !s || !t)
        throw std::invalid_argument("parameters needed: give --preset or all of r, s, t");
    std::size_t len = std::min({r->length(), s->length(), t->length()});
    if (len < length)
        throw std::invalid_argument("parameter prefixes shorter than required length " +
                                    std::to_string(length));
    return ParamTriple(r->truncated(len), s->truncated(len), t->truncated(len));
}

std::vector<SeqPrefix> matrix_input(const Options& opt, Doc& doc, Mode mode) {
    if (!opt.matrix.empty()) return io::matrix_rows_from(io::parse_text(opt.matrix), mode, "A");
    if (doc.has("A")) return io::matrix_rows_from(doc.get("A"), mode, "A");
    throw std::invalid_argument("missing matrix input 'A' (flag --A or JSON field)");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

bool want_json(const Options& opt, Doc& doc) {
    std::string f = opt.format;
    if (f.empty() && doc.has("format")) f = doc.get("format").get<std::string>();
    if (f.empty()) f = "text";
    if (f != "text" && f != "json")
        throw std::invalid_argument("unknown format '" + f + "' (expected text|json)");
    return f == "json";
}

std::string seq_text(const SeqPrefix& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (i) out += ", ";
        out += x[i].str();
    }
    return out + "]";
}

std::string scalars_text(const std::vector<Scalar>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

void print_verdict_line(const std::string& id, const Verdict& v) {
    std::cout << "  " << id << ": ";
    switch (v.state) {
        case VerdictState::HoldsAtTruncation: std::cout << "HOLDS*"; break;
        case VerdictState::Fails: std::cout << "FAILS"; break;
        case VerdictState::Inconclusive: std::cout << "INCONCLUSIVE"; break;
    }
    std::cout << "  estimate " << v.estimate.str();
    if (v.witness) std::cout << ", witness index " << *v.witness;
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << "\n";
}

int print_report(const ConditionReport& report, bool as_json, std::size_t truncation,
                 bool fails_exit) {
    if (as_json) {
        std::cout << io::to_json(report).dump(2) << "\n";
    } else {
        std::cout << report.subject() << "\n";
        for (const auto& [id, v] : report.conditions()) print_verdict_line(id, v);
        std::cout << "conclusion: " << conclusion_name(report.conclusion()) << "\n";
        std::cout << "* holds at truncation N=" << truncation
                  << "; not a proof of the infinite statement\n";
    }
    if (fails_exit && report.conclusion() == Conclusion::NotMember) return kExitNotMember;
    return kExitOk;
}

int run_selftest(std::size_t n, bool as_json) {
    struct Case {
        std::string name;
        ParamTriple params;
    };
    std::vector<Case> cases;
    cases.push_back({"all-ones",
                     ParamTriple(SeqPrefix::ones(n, Mode::Exact), SeqPrefix::ones(n, Mode::Exact),
                                 SeqPrefix::ones(n, Mode::Exact))});
    cases.push_back({"cesaro", preset(PresetName::Cesaro, n, Mode::Exact)});
    PresetArgs half;
    half.alpha = Scalar::exact(1, 2);
    cases.push_back({"euler(1/2)", preset(PresetName::Euler, n, Mode::Exact, half)});
    cases.push_back({"aydin_basar(1/2)", preset(PresetName::AydinBasar, n, Mode::Exact, half)});

    std::mt19937_64 rng(20240911);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    auto rand_scalar = [&](bool nonzero) {
        long v = num(rng);
        while (nonzero && v == 0) v = num(rng);
        return Scalar::exact(v, den(rng));
    };
    {
        std::vector<Scalar> r, s, t;
        for (std::size_t i = 0; i < n; ++i) {
            r.push_back(rand_scalar(true));
            s.push_back(rand_scalar(i == 0));
            t.push_back(rand_scalar(true));
        }
        cases.push_back({"random", ParamTriple(SeqPrefix(std::move(r)), SeqPrefix(std::move(s)),
                                               SeqPrefix(std::move(t)))});
    }

    bool all_ok = true;
    json results = json::array();
    for (const Case& c : cases) {
        Triangle a = build_triangle(c.params, TriangleKind::Mean, n);
        Triangle b = build_triangle(c.params, TriangleKind::MeanInverse, n);
        Triangle tt = build_triangle(c.params, TriangleKind::MeanDifference, n);
        Triangle ss = build_triangle(c.params, TriangleKind::MeanDifferenceInverse, n);
        bool ok = product(a, b) == Triangle::identity(n, Mode::Exact) &&
                  product(tt, ss) == Triangle::identity(n, Mode::Exact) && invert(tt) == ss;

        std::vector<Scalar> ye;
        for (std::size_t i = 0; i < n; ++i) ye.push_back(rand_scalar(false));
        SeqPrefix yr(std::move(ye));
        SeqPrefix x = inverse_transform(c.params, yr);
        ok = ok && forward_transform(c.params, x) == yr;
        ok = ok && inverse_transform(c.params, forward_transform(c.params, x)) == x;
        ok = ok && space_norm(c.params, x) == yr.sup_abs();

        all_ok = all_ok && ok;
        if (as_json) {
            results.push_back({{"case", c.name}, {"ok", ok}});
        } else {
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name
                      << ": inverse identities, round trips, norm preservation at N=" << n << "\n";
        }
    }
    if (as_json)
        std::cout << json{{"selftest", results}, {"ok", all_ok}}.dump(2) << "\n";
    else
        std::cout << (all_ok ? "selftest passed\n" : "selftest FAILED\n");
    return all_ok ? kExitOk : kExitNotMember;
}

int run(const std::string& command, const Options& opt) {
    Doc doc = load_doc(opt.input);
    Mode mode = resolve_mode(opt, doc);
    bool as_json = want_json(opt, doc);
    BatteryOptions bopts;
    bopts.tol = resolve_tol(opt, doc);
    bopts.window = resolve_window(opt, doc);
    bopts.subset_max_col = opt.subset_max_col;

    // 0 means "not given"; explicit values obey N >= 2, M >= N.
    std::size_t n_given = resolve_count(opt.trunc, doc, "N", 0);
    std::size_t m_given = resolve_count(opt.table, doc, "M", 0);
    if (n_given == 1 || m_given == 1)
        throw std::invalid_argument("truncation sizes N and M must be >= 2");
    if (n_given != 0 && m_given != 0 && m_given < n_given)
        throw std::invalid_argument("table size M must be >= truncation N");

    int code = kExitOk;
    if (command == "dcoeffs") {
        SeqPrefix s = require_seq(opt.s, doc, "s", mode, Tail::Unknown);
        std::size_t count = n_given != 0 ? n_given : s.length();
        DCoeffs d = d_coeffs(s, count);
        if (as_json)
            std::cout << json{{"values", io::to_json(SeqPrefix(d.values))}}.dump(2) << "\n";
        else
            std::cout << "D = " << scalars_text(d.values) << "\n";
    } else if (command == "build") {
        std::size_t n = n_given != 0 ? n_given : 12;
        ParamTriple p = params_input(opt, doc, mode, n);
        Triangle tri = build_triangle(p, triangle_kind_from_name(opt.kind), n);
        if (as_json) {
            std::cout << json{{"kind", opt.kind}, {"rows", io::to_json(tri.table())}}.dump(2)
                      << "\n";
        } else {
            std::cout << "triangle " << opt.kind << ", N=" << n << "\n";
            for (std::size_t row = 0; row < n; ++row) {
                std::cout << "  ";
                for (std::size_t k = 0; k <= row; ++k)
                    std::cout << tri.entry(row, k).str() << (k == row ? "\n" : " ");
            }
        }
    } else if (command == "transform") {
        auto x = seq_input(opt.x, doc, "x", mode, Tail::Unknown);
        auto y = seq_input(opt.y, doc, "y", mode, Tail::Unknown);
        if (!x && !y) throw std::invalid_argument("transform needs x (forward) or y (inverse)");
        const SeqPrefix& in = x ? *x : *y;
        ParamTriple p = params_input(opt, doc, mode, in.length());
        SeqPrefix out = x ? forward_transform(p, in) : inverse_transform(p, in);
        if (as_json)
            std::cout << json{{x ? "y" : "x", io::to_json(out)}}.dump(2) << "\n";
        else
            std::cout << seq_text(out) << "\n";
    } else if (command == "norm") {
        SeqPrefix x = require_seq(opt.x, doc, "x", mode, Tail::Unknown);
        ParamTriple p = params_input(opt, doc, mode, x.length());
        Scalar nv = space_norm(p, x);
        if (as_json)
            std::cout << json{{"norm", io::to_json(nv)}}.dump(2) << "\n";
        else
            std::cout << nv.str() << "\n";
    } else if (command == "basis") {
        std::size_t n = n_given != 0 ? n_given : 12;
        ParamTriple p = params_input(opt, doc, mode, n);
        BasisVector b = basis_vector(p, opt.basis_index, n);
        if (as_json)
            std::cout << json{{"index", b.index}, {"prefix", io::to_json(b.prefix)}}.dump(2)
                      << "\n";
        else
            std::cout << "b^(" << b.index << ") = " << seq_text(b.prefix) << "\n";
    } else if (command == "expand") {
        SeqPrefix x = require_seq(opt.x, doc, "x", mode, Tail::Unknown);
        ParamTriple p = params_input(opt, doc, mode, x.length());
        ExpansionResult e =
            opt.ell.empty() ? expand(p, x) : expand(p, x, Scalar::parse(opt.ell, mode));
        json out;
        out["mu"] = io::to_json(e.coefficients);
        if (e.limit) {
            out["limit"] = io::to_json(*e.limit);
            out["limit_is_estimate"] = e.limit_is_estimate;
        }
        std::string text = "mu = " + seq_text(e.coefficients) + "\n";
        if (e.limit)
            text += std::string("limit = ") + e.limit->str() +
                    (e.limit_is_estimate ? " (stabilization estimate)\n" : "\n");
        if (opt.reconstruct_order >= 0) {
            ReconstructionForm form =
                opt.form == "c" ? ReconstructionForm::WithLimit : ReconstructionForm::NullLimit;
            Reconstruction rec =
                reconstruct(p, e, static_cast<std::size_t>(opt.reconstruct_order), form);
            out["partial"] = io::to_json(rec.partial);
            json res = json::array();
            for (const Scalar& s : rec.residual_norms) res.push_back(io::to_json(s));
            out["residual_norms"] = std::move(res);
            text += "partial = " + seq_text(rec.partial) + "\n";
            text += "residual norms = " + scalars_text(rec.residual_norms) + "\n";
        }
        if (as_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << text;
    } else if (command == "dual") {
        SeqPrefix a = require_seq(opt.a, doc, "a", mode, Tail::Zero);
        std::size_t table = m_given;
        if (table == 0) {
            std::size_t bound = a.support_bound() ? *a.support_bound() : 0;
            table = bound + bopts.window + 2;
        }
        ParamTriple p = params_input(opt, doc, mode, table);
        ConditionReport report = dual_membership(p, a, dual_kind_from_name(opt.kind), table, bopts);
        code = print_report(report, as_json, table, /*fails_exit=*/true);
    } else if (command == "battery") {
        std::vector<SeqPrefix> rows = matrix_input(opt, doc, mode);
        Rows rect;
        std::size_t width = 0;
        for (const SeqPrefix& r : rows) width = std::max(width, r.length());
        for (const SeqPrefix& r : rows) {
            std::vector<Scalar> row;
            row.reserve(width);
            for (std::size_t k = 0; k < width; ++k) row.push_back(r.get(k));
            rect.push_back(std::move(row));
        }
        ConditionReport report = st_battery(rect, split_csv(opt.which), bopts);
        code = print_report(report, as_json, rect.size(), /*fails_exit=*/false);
    } else if (command == "classify") {
        std::vector<SeqPrefix> rows = matrix_input(opt, doc, mode);
        std::size_t table = m_given;
        if (table == 0) {
            std::size_t bound = 0;
            for (const SeqPrefix& r : rows)
                if (auto b = r.support_bound()) bound = std::max(bound, *b);
            table = bound + bopts.window + 2;
        }
        ParamTriple p = params_input(opt, doc, mode, table);
        ClassifyReport report =
            classify(p, rows, space_from_name(opt.from), space_from_name(opt.to), table, bopts);
        if (as_json) {
            std::cout << io::to_json(report).dump(2) << "\n";
            if (report.conclusion() == Conclusion::NotMember) code = kExitNotMember;
        } else {
            code = print_report(report.report, false, table, /*fails_exit=*/true);
        }
    } else if (command == "preset-list") {
        json presets = json::array();
        presets.push_back({{"name", "polat_uv"},
                           {"args", "u, v (nonzero prefixes)"},
                           {"params", "r_n = 1/u_n, s_n = 1, t_n = v_n"}});
        presets.push_back(
            {{"name", "cesaro"}, {"args", "none"}, {"params", "r_n = n+1, s_n = t_n = 1"}});
        presets.push_back({{"name", "euler"},
                           {"args", "alpha in (0,1)"},
                           {"params", "r_n = 1/n!, s_n = (1-alpha)^n/n!, t_n = alpha^n/n!"}});
        presets.push_back({{"name", "aydin_basar"},
                           {"args", "alpha in (0,1)"},
                           {"params", "r_n = n+1, s_n = 1, t_n = 1 + alpha^n"}});
        if (as_json) {
            std::cout << presets.dump(2) << "\n";
        } else {
            for (const auto& p : presets)
                std::cout << p.at("name").get<std::string>() << "  ("
                          << p.at("args").get<std::string>() << ")\n    "
                          << p.at("params").get<std::string>() << "\n";
        }
    } else if (command == "selftest") {
        std::size_t n = n_given != 0 ? n_given : 12;
        code = run_selftest(n, as_json);
    } else {
        throw std::invalid_argument("unknown command '" + command + "'");
    }
    doc.warn_unused();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seqspace: weighted-mean difference sequence-space toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"dcoeffs", "build", "transform", "norm", "basis", "expand", "dual",
                             "battery", "classify", "preset-list", "selftest"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "JSON input file ('-' for stdin)");
        sub->add_option("--mode", opt.mode, "numeric mode: exact|float");
        sub->add_option("--format", opt.format, "output format: text|json");
        sub->add_option("--r", opt.r, "r prefix, comma separated");
        sub->add_option("--s", opt.s, "s prefix, comma separated");
        sub->add_option("--t", opt.t, "t prefix, comma separated");
        sub->add_option("--x", opt.x, "input sequence x");
        sub->add_option("--y", opt.y, "input sequence y");
        sub->add_option("--a", opt.a, "finitely supported sequence a (tail = 0)");
        sub->add_option("--A", opt.matrix, "matrix rows as inline JSON, e.g. [[1,0],[0,1]]");
        sub->add_option("--preset", opt.preset_name, "parameter preset name");
        sub->add_option("--alpha", opt.alpha, "preset parameter alpha");
        sub->add_option("--u", opt.u, "polat_uv preset: u prefix");
        sub->add_option("--v", opt.v, "polat_uv preset: v prefix");
        sub->add_option("--kind", opt.kind, "triangle kind (A|B|T|S|Delta) or dual kind");
        sub->add_option("--which", opt.which, "battery conditions, e.g. 4.4,4.6");
        sub->add_option("--from", opt.from, "source space: c0|c|linf");
        sub->add_option("--to", opt.to, "target space: c0|c|linf");
        sub->add_option("--j", opt.basis_index, "basis index (>= -1)");
        sub->add_option("--n,--N", opt.trunc, "truncation size N");
        sub->add_option("--M", opt.table, "derived table size M");
        sub->add_option("--tol", opt.tol, "float-mode tolerance");
        sub->add_option("--trend-window", opt.window, "trend window K");
        sub->add_option("--subset-max-col", opt.subset_max_col,
                        "largest column index for the subset-sup condition (<= 12)");
        sub->add_option("--ell", opt.ell, "expansion limit for the convergent-space form");
        sub->add_option("--reconstruct-order", opt.reconstruct_order,
                        "partial-sum order J for expand");
        sub->add_option("--form", opt.form, "reconstruction form: c0|c");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        for (CLI::App* sub : subs)
            if (sub->parsed()) return run(sub->get_name(), opt);
        throw std::invalid_argument("no subcommand given");
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}
