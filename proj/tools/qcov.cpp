// Command-line front end for the covering-group kernel.

#include "qcov/expression.hpp"
#include "qcov/pbw.hpp"
#include "qcov/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace qcov;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RawDatum {
    std::string name;
    std::vector<std::vector<long>> cartan;
    std::vector<int> parity;
    std::vector<long> symmetrizer;
};

RawDatum builtin(const std::string& name) {
    auto raw = [&](const CartanDatum& c) { return RawDatum{name, c.cartan(), c.parities(), c.symmetrizer()}; };
    if (name == "rank1-odd") return raw(CartanDatum::rank1_odd());
    if (name == "spin") return raw(CartanDatum::spin_rank2());
    if (name == "b2-super") return raw(CartanDatum::b2_super());
    if (name == "a2") return raw(CartanDatum::a2());
    if (name == "rank1-even") return {name, {{2}}, {0}, {2}};
    throw UsageError("unknown datum '" + name + "' (builtins: rank1-odd, rank1-even, spin, b2-super, a2)");
}

RawDatum load_datum(const std::string& source) {
    std::ifstream in(source);
    if (!in) return builtin(source);
    json j;
    try {
        j = json::parse(in);
        RawDatum r;
        r.name = j.value("name", source);
        r.cartan = j.at("cartan").get<std::vector<std::vector<long>>>();
        r.parity = j.at("parity").get<std::vector<int>>();
        r.symmetrizer = j.at("symmetrizer").get<std::vector<long>>();
        return r;
    } catch (const json::exception& e) {
        throw UsageError(source + ": " + e.what());
    }
}

CartanDatum make_datum(const RawDatum& r) {
    try {
        return CartanDatum(r.cartan, r.parity, r.symmetrizer);
    } catch (const DatumError& e) {
        throw UsageError(std::string("invalid datum: ") + e.what());
    }
}

std::vector<long> parse_csv(const std::string& text, const std::string& what) {
    std::vector<long> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad " + what + " '" + text + "'");
        }
    }
    return v;
}

BraidWord braid_word(const std::string& text, int rank) {
    BraidWord w;
    try {
        w = parse_braid_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& l : w)
        if (l.index >= rank) throw UsageError("braid index " + std::to_string(l.index + 1) + " exceeds the rank");
    return w;
}

// "1 2 1 2", "T1 T2 T1 T2" or "1212".
Word index_word(const std::string& text, int rank) {
    Word w;
    for (char ch : text) {
        if (ch == 'T' || ch == ' ' || ch == ',') continue;
        if (ch < '1' || ch > '9') throw UsageError("bad word '" + text + "'");
        int i = ch - '1';
        if (i >= rank) throw UsageError("index " + std::to_string(i + 1) + " exceeds the rank");
        w.push_back(i);
    }
    return w;
}

std::string u0j_text(const PositivePart& P, const U0JElement& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [j, c] : a) {
        std::string mono;
        for (int k = 0; k < P.rank(); ++k)
            if (j[k]) mono += (mono.empty() ? "" : "*") + std::string("Jt_") + std::to_string(k + 1);
        if (!out.empty()) out += " + ";
        out += mono.empty() ? "(" + c.to_string() + ")" : "(" + c.to_string() + ")*" + mono;
    }
    return out;
}

json datum_json(const RawDatum& r) {
    return {{"name", r.name}, {"cartan", r.cartan}, {"parity", r.parity}, {"symmetrizer", r.symmetrizer}};
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_validate(const RawDatum& r, bool as_json) {
    json j{{"schema", 1}, {"command", "validate"}, {"datum", datum_json(r)}};
    std::ostringstream os;
    if (auto err = CartanDatum::check(r.cartan, r.parity, r.symmetrizer)) {
        j["valid"] = false;
        j["axiom"] = DatumError::name(err->axiom());
        j["message"] = err->what();
        os << "invalid: " << err->what() << "\n";
        emit(j, as_json, os.str());
        return kFail;
    }
    const CartanDatum c(r.cartan, r.parity, r.symmetrizer);
    j["valid"] = true;
    j["rank"] = c.rank();
    j["finite_type"] = c.is_finite_type();
    json orders = json::array();
    for (int i = 0; i < c.rank(); ++i)
        for (int k = i + 1; k < c.rank(); ++k) {
            const int m = c.braid_order(i, k);
            orders.push_back({{"pair", {i + 1, k + 1}}, {"order", m == kInfiniteOrder ? json(nullptr) : json(m)}});
        }
    j["braid_orders"] = orders;
    os << "valid datum '" << r.name << "', rank " << c.rank() << (c.is_finite_type() ? ", finite type" : "") << "\n";
    if (c.is_finite_type()) {
        std::vector<int> w;
        for (int k : c.longest_word()) w.push_back(k + 1);
        j["longest_word"] = w;
        json roots = json::array();
        for (const auto& a : c.positive_roots()) roots.push_back(a);
        j["positive_roots"] = roots;
        os << "longest word:";
        for (int k : w) os << " " << k;
        os << "\npositive roots: " << roots.size() << "\n";
    }
    emit(j, as_json, os.str());
    return kPass;
}

Value evaluate(const Evaluator& ev, const std::string& text) {
    return ev.evaluate(parse_expression(text));
}

int cmd_eval(const CartanDatum& c, const std::string& text, bool as_json) {
    CoverAlgebra u(c);
    Evaluator ev(u);
    const Expr e = parse_expression(text);
    const Value v = ev.evaluate(e);
    const std::string out = ev.to_string(v);
    json j{{"schema", 1}, {"command", "eval"}, {"input", text}, {"parsed", print_expression(e)},
           {"kind", v.scalar ? "scalar" : "element"}, {"value", out}};
    emit(j, as_json, out + "\n");
    return kPass;
}

int cmd_braid(const CartanDatum& c, const std::string& word, const std::vector<std::string>& exprs, bool as_json) {
    CoverAlgebra u(c);
    BraidGroupAction T(u);
    Evaluator ev(u);
    const BraidWord w = braid_word(word, c.rank());
    std::vector<std::pair<std::string, CoverElement>> inputs;
    if (exprs.empty()) {
        inputs = T.generators();
    } else {
        for (const auto& s : exprs) inputs.emplace_back(s, ev.element(evaluate(ev, s)));
    }
    json images = json::array();
    std::ostringstream os;
    for (const auto& [name, x] : inputs) {
        const std::string img = u.to_string(T.apply(w, x));
        images.push_back({{"input", name}, {"image", img}});
        os << braid_word_to_string(w) << " (" << name << ") = " << img << "\n";
    }
    emit({{"schema", 1}, {"command", "braid"}, {"word", braid_word_to_string(w)}, {"images", images}}, as_json, os.str());
    return kPass;
}

std::vector<PbwMonomial> pbw_set(const PositivePart& P, const CartanDatum& c, const std::string& word, long degree, int sign) {
    if (!c.is_finite_type()) throw UsageError("pbw needs a datum of finite type");
    const Word h = word.empty() ? c.longest_word() : index_word(word, c.rank());
    if (degree < 0) throw UsageError("degree must be nonnegative");
    try {
        return P.pbw_by_degree(h, degree, sign);
    } catch (const NotReduced& e) {
        throw UsageError(e.what());
    }
}

std::string word_text(const Word& h) {
    std::string s;
    for (int k : h) s += (s.empty() ? "" : " ") + std::to_string(k + 1);
    return s;
}

int cmd_pbw(const CartanDatum& c, const std::string& word, long degree, int sign, bool as_json) {
    CoverAlgebra u(c);
    PositivePart P(u);
    const auto basis = pbw_set(P, c, word, degree, sign);
    const GramCertificate cert = P.gram_certificate(basis, false);
    json mons = json::array();
    std::ostringstream os;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& b = basis[k];
        const std::string norm = u0j_text(P, P.form(b.element, b.element));
        mons.push_back({{"c", b.c}, {"weight", b.weight}, {"element", u.to_string(P.to_cover(b.element))}, {"norm", norm},
                        {"pi_exponent", cert.pi_exponents[k]}});
        os << "c = (";
        for (std::size_t t = 0; t < b.c.size(); ++t) os << (t ? "," : "") << b.c[t];
        os << ")  norm " << norm << "\n";
    }
    os << basis.size() << " monomials; orthogonal " << (cert.orthogonal ? "yes" : "no") << ", norms match "
       << (cert.norms_match ? "yes" : "no") << "\n";
    json j{{"schema", 1},          {"command", "pbw"},        {"word", word_text(basis.empty() ? Word{} : basis.front().word)},
           {"sign", sign},         {"degree", degree},        {"monomials", mons},
           {"orthogonal", cert.orthogonal}, {"norms_match", cert.norms_match}, {"units", cert.units}};
    emit(j, as_json, os.str());
    return cert.orthogonal && cert.norms_match && cert.units ? kPass : kFail;
}

int cmd_gram(const CartanDatum& c, const std::string& word, long degree, int sign, bool as_json) {
    CoverAlgebra u(c);
    PositivePart P(u);
    const auto basis = pbw_set(P, c, word, degree, sign);
    json rows = json::array();
    std::ostringstream os;
    for (const auto& a : basis) {
        json row = json::array();
        for (const auto& b : basis) {
            const std::string s = u0j_text(P, P.form(a.element, b.element));
            row.push_back(s);
            os << s << (&b == &basis.back() ? "\n" : " | ");
        }
        rows.push_back(row);
    }
    json labels = json::array();
    for (const auto& b : basis) labels.push_back(b.c);
    emit({{"schema", 1}, {"command", "gram"}, {"sign", sign}, {"degree", degree}, {"labels", labels}, {"matrix", rows}}, as_json,
         os.str());
    return kPass;
}

// E1, F_2, T1, T2^-1 or K{..}/J{..}.
ModuleVector apply_op(const WeightModule& v, const CoverAlgebra& u, const std::string& op, const ModuleVector& z) {
    if (!op.empty() && op[0] == 'T') return module_braid(v, braid_word(op, v.datum().rank()), z);
    Evaluator ev(u);
    std::string text = op;
    if (text.size() >= 2 && (text[0] == 'E' || text[0] == 'F') && text[1] != '_') text.insert(1, "_");
    return v.act(ev.element(evaluate(ev, text)), z);
}

int cmd_module(const CartanDatum& c, const std::string& lambda_text, const std::vector<std::string>& ops, bool as_json) {
    if (lambda_text.empty()) throw UsageError("module needs --lambda");
    const Weight lambda = parse_csv(lambda_text, "weight");
    if (static_cast<int>(lambda.size()) != c.rank()) throw UsageError("--lambda needs " + std::to_string(c.rank()) + " entries");
    WeightModule v = [&] {
        try {
            return WeightModule::simple(c, lambda);
        } catch (const NotDominant& e) {
            throw UsageError(e.what());
        } catch (const NotFiniteType& e) {
            throw UsageError(e.what());
        }
    }();
    CoverAlgebra u(c);
    json weights = json::array();
    std::ostringstream os;
    os << "V(" << lambda_text << "): dimension " << v.dim() << "\n";
    for (const auto& [mu, idx] : v.weights()) {
        weights.push_back({{"weight", mu}, {"dim", idx.size()}});
        os << "  weight (";
        for (std::size_t t = 0; t < mu.size(); ++t) os << (t ? "," : "") << mu[t];
        os << "): " << idx.size() << "\n";
    }
    json opj = json::array();
    for (const auto& op : ops) {
        // blocks keyed by (source weight, target weight); columns are source basis vectors
        std::map<std::pair<Weight, Weight>, std::vector<std::vector<std::string>>> blocks;
        for (const auto& [mu, idx] : v.weights()) {
            for (std::size_t col = 0; col < idx.size(); ++col) {
                const ModuleVector img = apply_op(v, u, op, ModuleVector(idx[col]));
                for (const auto& [nu, part] : v.split(img)) {
                    const auto& tidx = v.weights().at(nu);
                    auto& m = blocks[{mu, nu}];
                    if (m.empty()) m.assign(tidx.size(), std::vector<std::string>(idx.size(), "0"));
                    for (const auto& [k, s] : part) {
                        const auto row = std::find(tidx.begin(), tidx.end(), k) - tidx.begin();
                        m[row][col] = s.to_string();
                    }
                }
            }
        }
        json bl = json::array();
        for (const auto& [key, m] : blocks) bl.push_back({{"from", key.first}, {"to", key.second}, {"matrix", m}});
        opj.push_back({{"op", op}, {"blocks", bl}});
        os << op << ": " << blocks.size() << " nonzero weight blocks\n";
    }
    json basis = json::array();
    for (std::size_t k = 0; k < v.dim(); ++k) basis.push_back({{"weight", v.basis(k).weight}, {"vector", v.to_string(ModuleVector(k))}});
    emit({{"schema", 1}, {"command", "module"}, {"lambda", lambda}, {"dim", v.dim()}, {"weights", weights}, {"basis", basis},
          {"operators", opj}},
         as_json, os.str());
    return kPass;
}

int cmd_verify(const RawDatum& r, const CartanDatum& c, const std::vector<std::string>& suites, const std::string& lambda_text,
               unsigned threads, bool as_json) {
    std::vector<std::string> names = suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw UsageError("unknown suite '" + n + "'");
    SuiteOptions opt;
    opt.threads = threads;
    if (!lambda_text.empty()) {
        opt.lambda = parse_csv(lambda_text, "weight");
        if (static_cast<int>(opt.lambda->size()) != c.rank()) throw UsageError("--lambda needs " + std::to_string(c.rank()) + " entries");
    }
    bool all_ok = true;
    json js = json::array();
    std::ostringstream os;
    for (const auto& n : names) {
        const SuiteReport rep = run_suite(n, c, opt);
        all_ok = all_ok && rep.ok();
        json items = json::array();
        for (const auto& it : rep.items) {
            json ij{{"name", it.name}, {"checks", it.checks}, {"pass", it.pass}};
            if (!it.pass) ij["counterexample"] = it.counterexample;
            if (!it.skipped.empty()) ij["skipped"] = it.skipped;
            items.push_back(ij);
            os << (it.pass ? "PASS " : "FAIL ") << n << "/" << it.name << " (" << it.checks << " checks)";
            if (!it.skipped.empty()) os << " skipped: " << it.skipped;
            if (!it.pass) os << "\n     first counterexample: " << it.counterexample;
            os << "\n";
        }
        js.push_back({{"suite", n}, {"pass", rep.ok()}, {"items", items}});
    }
    os << (all_ok ? "all suites passed" : "verification failed") << "\n";
    emit({{"schema", 1}, {"command", "verify"}, {"datum", datum_json(r)}, {"pass", all_ok}, {"suites", js}}, as_json, os.str());
    return all_ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in quantum covering groups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string datum_arg = "b2-super";
    bool as_json = false;
    app.add_option("--datum", datum_arg, "Datum JSON file or builtin (rank1-odd, rank1-even, spin, b2-super, a2)");
    app.add_flag("--json", as_json, "Emit JSON");

    std::string expr_text, word, lambda_text;
    long degree = 3;
    bool inverse = false;
    unsigned threads = 0;
    std::vector<std::string> exprs, ops, suites;

    auto* validate = app.add_subcommand("validate", "Check the datum axioms");
    auto* eval = app.add_subcommand("eval", "Evaluate an expression to normal form");
    eval->add_option("expr", expr_text, "Expression")->required();
    auto* braid = app.add_subcommand("braid", "Apply a braid word");
    braid->add_option("--word", word, "Braid word, e.g. \"T1 T2^-1\"")->required();
    braid->add_option("expr", exprs, "Expressions (default: all generators)");
    auto* pbw = app.add_subcommand("pbw", "PBW monomials with norms");
    auto* gram = app.add_subcommand("gram", "Gram matrix of the PBW monomials");
    for (auto* sc : {pbw, gram}) {
        sc->add_option("--word", word, "Reduced expression of the longest element (default: the datum's)");
        sc->add_option("--degree", degree, "Bound on c_1 + ... + c_n")->check(CLI::NonNegativeNumber);
        sc->add_flag("--inverse", inverse, "Use T_i^-1 in place of T_i");
    }
    auto* module = app.add_subcommand("module", "Weight spaces and operator matrices of V(lambda)");
    module->add_option("--lambda", lambda_text, "Highest weight, comma separated")->required();
    module->add_option("--op", ops, "Operator: E1, F2, T1, T1^-1, K{..}, J{..}")->take_all();
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suites, "Suite name or 'all'")->take_all();
    verify->add_option("--lambda", lambda_text, "Restrict module suites to one highest weight");
    verify->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const RawDatum raw = load_datum(datum_arg);
        if (validate->parsed()) return cmd_validate(raw, as_json);
        const CartanDatum c = make_datum(raw);
        if (eval->parsed()) return cmd_eval(c, expr_text, as_json);
        if (braid->parsed()) return cmd_braid(c, word, exprs, as_json);
        if (pbw->parsed()) return cmd_pbw(c, word, degree, inverse ? -1 : 1, as_json);
        if (gram->parsed()) return cmd_gram(c, word, degree, inverse ? -1 : 1, as_json);
        if (module->parsed()) return cmd_module(c, lambda_text, ops, as_json);
        if (verify->parsed()) return cmd_verify(raw, c, suites, lambda_text, threads, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kUsage;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
