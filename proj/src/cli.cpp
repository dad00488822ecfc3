#include "dlcalc/cli.hpp"

#include "dlcalc/error.hpp"
#include "dlcalc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace dlcalc {

namespace {

using nlohmann::json;

enum class Format { Text, Csv, Json };

struct Options
{
    std::string space = "rp-inf";
    bool reduced = false;
    int degree = -1;
    int max_degree = kDefaultMaxDegree;
    std::string tail = "primitive";
    std::string target = "all";
    std::string format = "text";
    std::string map = "transfer";
    std::string element;
};

class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kVerbs{"basis", "primitives", "verify", "map-eval", "poincare", "betti"};
const std::vector<std::string> kSpaces{"rp-inf", "bspin2", "bspin3", "sigma-cp-inf"};
const std::vector<std::string> kMaps{"transfer", "composite", "iota-plus-c"};

std::string listing(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ", ") + x;
    return s;
}

std::vector<std::string> target_names()
{
    std::vector<std::string> out{"all"};
    for (Target t : all_targets())
        out.emplace_back(target_name(t));
    return out;
}

Format parse_format(const std::string& f)
{
    if (f == "text")
        return Format::Text;
    if (f == "csv")
        return Format::Csv;
    if (f == "json")
        return Format::Json;
    throw UsageError("unknown format '" + f + "'; valid formats: text, csv, json");
}

SpaceId space_of(const Options& o)
{
    auto s = parse_space(o.space);
    if (!s)
        throw UsageError("unknown space '" + o.space + "'; valid spaces: " + listing(kSpaces));
    if (o.reduced && *s != SpaceId::RPinf)
        throw UsageError("--reduced only applies to rp-inf");
    return *s;
}

TailPolicy tail_of(const Options& o)
{
    auto t = parse_tail(o.tail);
    if (!t)
        throw UsageError("unknown tail policy '" + o.tail + "'; valid policies: zero, primitive");
    return *t;
}

void check_max_degree(int n)
{
    if (n < 0 || n > kHardMaxDegree)
        throw UsageError("--max-degree must lie in 0.." + std::to_string(kHardMaxDegree));
}

int required_degree(const Options& o)
{
    if (o.degree < 0)
        throw UsageError("--degree is required");
    if (o.degree > kHardMaxDegree)
        throw UsageError("--degree must lie in 0.." + std::to_string(kHardMaxDegree));
    return o.degree;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Dimension rows shared by poincare and betti.
void emit_dims(std::ostream& out, Format fmt, const std::vector<std::size_t>& dims,
               const std::map<std::string, std::vector<std::size_t>>& factors)
{
    if (fmt == Format::Csv)
        out << "degree,dimension\n";
    for (std::size_t n = 0; n < dims.size(); ++n) {
        switch (fmt) {
        case Format::Csv: out << n << "," << dims[n] << "\n"; break;
        case Format::Json: {
            json f = json::object();
            for (const auto& [name, v] : factors)
                f[name] = v[n];
            out << json{{"degree", n}, {"dim", dims[n]}, {"factors", f}}.dump() << "\n";
            break;
        }
        case Format::Text: {
            out << n << "\t" << dims[n];
            if (!factors.empty()) {
                out << "\t";
                bool first = true;
                for (const auto& [name, v] : factors) {
                    out << (first ? "" : " ") << name << "=" << v[n];
                    first = false;
                }
            }
            out << "\n";
            break;
        }
        }
    }
}

// Lines of (label, element) pairs for one degree.
void emit_elements(std::ostream& out, Format fmt, int degree, const std::vector<std::pair<std::string, std::string>>& rows,
                   const std::string& label_key)
{
    if (fmt == Format::Csv)
        out << "degree," << label_key << ",element\n";
    for (const auto& [label, element] : rows) {
        switch (fmt) {
        case Format::Csv: out << degree << "," << csv_field(label) << "," << csv_field(element) << "\n"; break;
        case Format::Json: out << json{{"degree", degree}, {label_key, label}, {"element", element}}.dump() << "\n"; break;
        case Format::Text:
            if (label.empty())
                out << element << "\n";
            else
                out << label << " = " << element << "\n";
            break;
        }
    }
}

int cmd_basis(const Options& o, std::ostream& out)
{
    QHopf H(space_of(o), o.reduced);
    int d = required_degree(o);
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& m : H.basis(d).monomials())
        rows.emplace_back("", H.model().render(m));
    emit_elements(out, parse_format(o.format), d, rows, "label");
    return kExitOk;
}

int cmd_primitives(const Options& o, std::ostream& out)
{
    SpaceId s = space_of(o);
    int d = required_degree(o);
    std::vector<std::pair<std::string, std::string>> rows;
    if (s == SpaceId::RPinf) {
        RPPrimitives rp(o.reduced);
        for (const auto& l : rp.primitive_basis(d))
            rows.emplace_back(l.name(), rp.model().render(rp.canonical_primitive(l)));
    } else if (d >= 1) {
        QHopf H(s);
        for (const auto& p : H.primitive_elements(d))
            rows.emplace_back("", H.model().render(p));
    }
    emit_elements(out, parse_format(o.format), d, rows, "label");
    return kExitOk;
}

int cmd_poincare(const Options& o, std::ostream& out)
{
    check_max_degree(o.max_degree);
    QHopf H(space_of(o), o.reduced);
    std::vector<std::size_t> dims, prim(o.max_degree + 1, 0), indec(o.max_degree + 1, 0);
    for (int n = 0; n <= o.max_degree; ++n) {
        dims.push_back(H.dim(n));
        if (n >= 1) {
            prim[n] = H.primitives(n).dim();
            indec[n] = H.indecomposable_dim(n);
        }
    }
    emit_dims(out, parse_format(o.format), dims, {{"primitives", prim}, {"indecomposables", indec}});
    return kExitOk;
}

std::optional<BettiTable> read_cache(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        json j = json::parse(in);
        BettiTable t;
        t.dims = j.at("dims").get<std::vector<std::size_t>>();
        t.factors = j.at("factors").get<std::map<std::string, std::vector<std::size_t>>>();
        t.convention = j.at("convention").get<std::string>();
        return t;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void write_cache(const std::filesystem::path& file, const BettiTable& t)
{
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream f(file);
    if (f)
        f << json{{"dims", t.dims}, {"factors", t.factors}, {"convention", t.convention}}.dump() << "\n";
}

int cmd_betti(const Options& o, std::ostream& out)
{
    check_max_degree(o.max_degree);
    TailPolicy policy = tail_of(o);
    Format fmt = parse_format(o.format);
    std::optional<BettiTable> table;
    std::filesystem::path file;
    if (const char* dir = std::getenv("DLCALC_CACHE_DIR"); dir && *dir) {
        file = std::filesystem::path(dir) /
               ("betti-" + std::string(tail_name(policy)) + "-" + std::to_string(o.max_degree) + ".json");
        table = read_cache(file);
    }
    if (!table) {
        Workspace ws;
        table = spin_betti(ws, o.max_degree, policy);
        if (!file.empty())
            write_cache(file, *table);
    }
    if (fmt == Format::Text)
        out << "# " << table->convention << "\n";
    emit_dims(out, fmt, table->dims, table->factors);
    return kExitOk;
}

int cmd_map_eval(const Options& o, std::ostream& out)
{
    Format fmt = parse_format(o.format);
    Workspace ws;
    std::vector<std::pair<std::string, std::string>> rows;
    int d = -1;
    if (o.map == "transfer") {
        PartialMap& f = ws.partial(tail_of(o), false);
        Model& src = ws.sigma().model();
        Model& tgt = ws.rp().model();
        if (!o.element.empty()) {
            Element x = src.normalize(src.parse(o.element));
            d = src.degree(x);
            rows.emplace_back(src.render(x), tgt.render(f.apply(x)));
        } else {
            d = required_degree(o);
            for (const auto& m : ws.sigma().basis(d).monomials())
                rows.emplace_back(src.render(m), tgt.render(f.apply(Element(m))));
        }
    } else if (o.map == "composite") {
        Model& src = ws.bspin3().model();
        Model& tgt = ws.bspin2().model();
        d = required_degree(o);
        for (GenId g : src.normalized_generators(d)) {
            const Generator& G = src.generator(g);
            std::string value;
            try {
                value = tgt.render(theorem2_composite(tgt, G));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonDoubledWord)
                    throw;
                value = "not defined: " + std::string(e.what());
            }
            rows.emplace_back(src.render(g), value);
        }
    } else if (o.map == "iota-plus-c") {
        d = required_degree(o);
        if (d % 2 != 0)
            throw UsageError("iota-plus-c acts on a_i of even degree 2i");
        Model& m = ws.bspin2().model();
        rows.emplace_back(m.render(m.base_element(d / 2)), m.render(transfer_iota_plus_c(m, d / 2)));
    } else {
        throw UsageError("unknown map '" + o.map + "'; valid maps: " + listing(kMaps));
    }
    std::sort(rows.begin(), rows.end());
    if (fmt == Format::Csv)
        out << "degree,source,value\n";
    for (const auto& [x, y] : rows) {
        switch (fmt) {
        case Format::Csv: out << d << "," << csv_field(x) << "," << csv_field(y) << "\n"; break;
        case Format::Json: out << json{{"degree", d}, {"source", x}, {"value", y}}.dump() << "\n"; break;
        case Format::Text: out << x << " -> " << y << "\n"; break;
        }
    }
    return kExitOk;
}

std::string render_report(const Report& r, Format fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case Format::Json:
        for (const auto& c : r.checks)
            os << json{{"target", r.target}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << "\n";
        for (const auto& n : r.notes)
            os << json{{"target", r.target}, {"note", n}}.dump() << "\n";
        os << json{{"target", r.target}, {"pass", r.pass()}, {"passed", r.passed()}, {"total", r.checks.size()}}.dump()
           << "\n";
        break;
    case Format::Csv:
        for (const auto& c : r.checks)
            os << r.target << "," << csv_field(c.name) << "," << (c.pass ? "pass" : "fail") << "," << csv_field(c.detail)
               << "\n";
        break;
    case Format::Text:
        os << r.target << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.passed() << "/" << r.checks.size() << ")\n";
        for (const auto& c : r.checks) {
            os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty())
                os << ": " << c.detail;
            os << "\n";
        }
        for (const auto& n : r.notes)
            os << "  note: " << n << "\n";
        break;
    }
    return os.str();
}

int cmd_verify(const Options& o, std::ostream& out)
{
    Format fmt = parse_format(o.format);
    std::vector<Target> targets;
    if (o.target == "all") {
        targets = all_targets();
    } else if (auto t = parse_target(o.target)) {
        targets.push_back(*t);
    } else {
        throw UsageError("unknown target '" + o.target + "'; valid targets: " + listing(target_names()));
    }
    if (o.max_degree < 1 || o.max_degree > kHardMaxDegree)
        throw UsageError("--max-degree must lie in 1.." + std::to_string(kHardMaxDegree));
    TailPolicy policy = tail_of(o);
    // One workspace per target, so the targets share no caches and can run in parallel.
    std::vector<std::future<std::pair<bool, std::string>>> jobs;
    for (Target t : targets) {
        jobs.push_back(std::async(std::launch::async, [t, &o, policy, fmt] {
            Workspace ws;
            Report r = run_target(ws, t, o.max_degree, policy);
            return std::make_pair(r.pass(), render_report(r, fmt));
        }));
    }
    if (fmt == Format::Csv)
        out << "target,check,result,detail\n";
    bool ok = true;
    for (auto& job : jobs) {
        auto [pass, text] = job.get();
        out << text;
        ok = ok && pass;
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology of infinite loop spaces over F_2 and the stable spin mapping class group", "dlcalc"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--space", o.space, "rp-inf, bspin2, bspin3 or sigma-cp-inf");
        sub->add_flag("--reduced", o.reduced, "H_*(Q RP^inf) instead of H_*(Q_0 RP^inf_+)");
        sub->add_option("--degree", o.degree, "single degree");
        sub->add_option("--max-degree", o.max_degree, "degree ceiling (default 12)");
        sub->add_option("--tail", o.tail, "transfer tail policy: zero or primitive");
        sub->add_option("--format", o.format, "text, csv or json");
    };
    std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers{
        {"basis", cmd_basis},   {"primitives", cmd_primitives}, {"verify", cmd_verify},
        {"map-eval", cmd_map_eval}, {"poincare", cmd_poincare}, {"betti", cmd_betti},
    };
    const std::map<std::string, std::string> about{
        {"basis", "monomial basis of one degree"},
        {"primitives", "primitives of one degree"},
        {"verify", "run verification targets"},
        {"map-eval", "evaluate a map on an element"},
        {"poincare", "dimensions with tensor factors"},
        {"betti", "Betti numbers of the stable spin mapping class group"},
    };
    for (const auto& verb : kVerbs) {
        auto* sub = app.add_subcommand(verb, about.at(verb));
        common(sub);
        if (verb == "verify")
            sub->add_option("--target", o.target, "all, " + listing(target_names()));
        if (verb == "map-eval") {
            sub->add_option("--map", o.map, listing(kMaps));
            sub->add_option("--element", o.element, "source element, e.g. \"abar_1*abar_0\"");
        }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "dlcalc: " << e.what() << "\nvalid verbs: " << listing(kVerbs) << "\nvalid targets: " << listing(target_names())
            << "\n";
        return kExitUsage;
    }
    std::string verb = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(verb)(o, out);
    } catch (const UsageError& e) {
        err << "dlcalc " << verb << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "dlcalc " << verb << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::DegreeOutOfRange ? kExitUsage : kExitFailed;
    }
}

}  // namespace dlcalc
