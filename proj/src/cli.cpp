#include "affinegerm/cli.hpp"

#include "affinegerm/normalize.hpp"

#include <cstdlib>
#include <sstream>

namespace ag::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void job_error(const std::string& what, int line, int column = 1) {
    throw SourceError(ErrorKind::ParseError, what, line, column);
}

const std::map<std::string, JobFile::Kind>& key_kinds() {
    static const std::map<std::string, JobFile::Kind> m = {
        {"omega0", JobFile::Kind::Pencil}, {"omegaInf", JobFile::Kind::Pencil},
        {"alpha", JobFile::Kind::Riccati}, {"beta", JobFile::Kind::Riccati},
        {"gamma", JobFile::Kind::Riccati}, {"web", JobFile::Kind::Web},
        {"model", JobFile::Kind::Model},   {"nu", JobFile::Kind::OneForm},
        {"u", JobFile::Kind::OneForm}};
    return m;
}

const char* kind_name(JobFile::Kind k) {
    switch (k) {
        case JobFile::Kind::Pencil: return "pencil";
        case JobFile::Kind::Riccati: return "riccati";
        case JobFile::Kind::Web: return "web";
        case JobFile::Kind::Model: return "model";
        case JobFile::Kind::OneForm: return "one-form";
    }
    return "";
}

}  // namespace

const JobLine& JobFile::at(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end()) job_error("job file has no '" + key + ":' line", 1);
    return it->second;
}

JobFile parse_job(const std::string& text) {
    JobFile job;
    std::optional<JobFile::Kind> kind;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        if (trim(s).empty()) continue;
        size_t colon = s.find(':');
        if (colon == std::string::npos) job_error("expected 'key: value'", line);
        std::string key = trim(s.substr(0, colon));
        std::string rest = s.substr(colon + 1);
        std::string value = trim(rest);
        int column = static_cast<int>(colon + 2 + rest.find_first_not_of(" \t"));
        if (key == "order") {
            try {
                size_t used = 0;
                int n = std::stoi(value, &used);
                if (used != value.size() || n < 1) throw std::invalid_argument(value);
                job.order = n;
            } catch (const std::exception&) {
                job_error("order must be a positive integer", line, column);
            }
            continue;
        }
        if (key == "riccati") {
            if (!value.empty()) job_error("'riccati:' is a section header", line, column);
            if (kind && *kind != JobFile::Kind::Riccati) job_error("job mixes riccati with another kind", line);
            kind = JobFile::Kind::Riccati;
            continue;
        }
        auto k = key_kinds().find(key);
        if (k == key_kinds().end()) job_error("unknown key '" + key + "'", line);
        if (kind && *kind != k->second)
            job_error(std::string("job mixes ") + kind_name(*kind) + " with " + kind_name(k->second), line);
        kind = k->second;
        if (value.empty()) job_error("empty value for '" + key + "'", line, column);
        if (!job.fields.emplace(key, JobLine{value, line, column}).second)
            job_error("duplicate key '" + key + "'", line);
    }
    if (!kind) job_error("empty job file", std::max(line, 1));
    job.kind = *kind;
    return job;
}

ModelSpec parse_model(const std::string& text) {
    std::string s = trim(text);
    size_t open = s.find('('), close = s.rfind(')');
    if (open == std::string::npos || close != s.size() - 1 || close < open)
        fail(ErrorKind::ParseError, "model must look like Name(args): '" + s + "'");
    std::string name = s.substr(0, open);
    std::vector<std::string> args;
    std::stringstream a(s.substr(open + 1, close - open - 1));
    for (std::string part; std::getline(a, part, ',');) args.push_back(trim(part));
    auto ints = [&](size_t count) {
        if (args.size() != count)
            fail(ErrorKind::ParseError, name + " takes " + std::to_string(count) + " argument(s)");
        std::vector<int> v;
        for (auto& x : args) {
            QComplex q = QComplex::parse(x);
            if (!q.is_integer()) fail(ErrorKind::ParseError, name + " takes integer arguments");
            v.push_back(static_cast<int>(q.to_long()));
        }
        return v;
    };
    ModelSpec m;
    if (name == "I") {
        if (args.size() != 1) fail(ErrorKind::ParseError, "I takes 1 argument");
        m.affine = AffineModel::I(QComplex::parse(args[0]));
    } else if (name == "II") {
        m.affine = AffineModel::II(ints(1)[0]);
    } else if (name == "III") {
        m.affine = AffineModel::III(ints(1)[0]);
    } else if (name == "IV") {
        auto v = ints(2);
        m.affine = AffineModel::IV(v[0], v[1]);
    } else if (name == "WebI" || name == "WebII") {
        auto v = ints(2);
        m.web = true;
        m.webmodel = {name == "WebI" ? WebModel::Family::WebI : WebModel::Family::WebII, v[0], v[1], 0};
    } else if (name == "WebIII") {
        m.web = true;
        m.webmodel = {WebModel::Family::WebIII, 0, 0, ints(1)[0]};
    } else {
        fail(ErrorKind::ParseError, "unknown model '" + name + "'");
    }
    return m;
}

int resolve_order(std::optional<int> flag, const JobFile& job) {
    if (flag) return *flag;
    if (job.order) return *job.order;
    if (const char* env = std::getenv(kOrderEnv)) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
        fail(ErrorKind::ParseError, std::string(kOrderEnv) + " must be a positive integer");
    }
    return kCliDefaultOrder;
}

namespace {

// Re-anchors parser positions from the value to the job file.
template <class F>
auto parse_field(const JobLine& l, F&& f) {
    try {
        return f(l.value, l.line);
    } catch (const SourceError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" (line"));
        throw SourceError(e.kind(), msg, e.line(), e.column() + l.column - 1);
    }
}

Form1 form_field(const JobFile& job, const std::string& key, int order) {
    return parse_field(job.at(key), [&](const std::string& v, int line) { return parse_form(v, order, line); });
}

std::string monodromy_name(const MonodromyClass& m) {
    switch (m.kind) {
        case MonodromyClass::Kind::Identity: return "identity";
        case MonodromyClass::Kind::Multiplicative: return "multiplicative";
        case MonodromyClass::Kind::Parabolic: return "parabolic";
    }
    return "";
}

const char* affine_kind(AffineModel::Kind k) {
    switch (k) {
        case AffineModel::Kind::I: return "I";
        case AffineModel::Kind::II: return "II";
        case AffineModel::Kind::III: return "III";
        case AffineModel::Kind::IV: return "IV";
    }
    return "";
}

const char* web_family(WebModel::Family f) {
    switch (f) {
        case WebModel::Family::WebI: return "WebI";
        case WebModel::Family::WebII: return "WebII";
        case WebModel::Family::WebIII: return "WebIII";
    }
    return "";
}

void put_riccati(json& j, const Riccati& r) {
    j["alpha"] = print(r.alpha);
    j["beta"] = print(r.beta);
    j["gamma"] = print(r.gamma);
}

void put_affine(json& j, const AffineModel& m) {
    j["model"] = affine_kind(m.kind);
    if (m.kind == AffineModel::Kind::I) j["nu"] = m.nu.to_string();
    else j["n"] = m.n;
    if (m.kind == AffineModel::Kind::IV) j["c"] = m.c;
    j["label"] = m.to_string();
}

void put_monodromy(json& j, const MonodromyClass& m) {
    j["monodromy"] = monodromy_name(m);
    if (m.kind == MonodromyClass::Kind::Multiplicative) j["monodromy_exponent"] = m.lambda.to_string();
}

void put_web_model(json& j, const WebModel& m) {
    j["model"] = web_family(m.family);
    if (m.family == WebModel::Family::WebIII) {
        j["n"] = m.n;
    } else {
        j["p"] = m.p;
        j["q"] = m.q;
    }
    j["label"] = m.to_string();
}

Pencil pencil_of(const JobFile& job, int order) {
    if (job.kind == JobFile::Kind::Model) {
        ModelSpec m = parse_model(job.at("model").value);
        if (m.web) fail(ErrorKind::ParseError, "expected an affine model, got " + m.webmodel.to_string());
        return model_pencil(m.affine, order);
    }
    if (job.kind != JobFile::Kind::Pencil) fail(ErrorKind::ParseError, "expected a pencil or model job");
    return {form_field(job, "omega0", order), form_field(job, "omegaInf", order)};
}

Riccati riccati_of(const JobFile& job, int order) {
    if (job.kind != JobFile::Kind::Riccati) return induced_riccati(pencil_of(job, order));
    Riccati r = Riccati::zero(order);
    if (job.fields.count("alpha")) r.alpha = form_field(job, "alpha", order);
    if (job.fields.count("beta")) r.beta = form_field(job, "beta", order);
    if (job.fields.count("gamma")) r.gamma = form_field(job, "gamma", order);
    return r;
}

struct WebInput {
    std::optional<ImplicitWeb> implicit;
    std::optional<SplitWeb> split;
    ImplicitWeb as_implicit() const { return implicit ? *implicit : to_implicit(*split); }
};

// "web: P(z)" or "web: w1; w2; ..." with 1-forms w_i.
WebInput web_of(const JobFile& job, int order) {
    if (job.kind != JobFile::Kind::Web) fail(ErrorKind::ParseError, "expected a web job");
    const JobLine& l = job.at("web");
    std::vector<std::pair<std::string, int>> items;
    size_t start = 0;
    for (;;) {
        size_t semi = l.value.find(';', start);
        items.push_back({l.value.substr(start, semi - start), static_cast<int>(start)});
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    WebInput w;
    std::vector<Expression> parsed;
    for (auto& [text, off] : items) {
        JobLine sub{text, l.line, l.column + off};
        parsed.push_back(parse_field(sub, [&](const std::string& v, int line) {
            return parse_expression(v, order, line);
        }));
    }
    if (parsed.size() == 1 && parsed[0].kind == Expression::Kind::Function) {
        auto p = parse_field(l, [&](const std::string& v, int line) { return parse_polynomial(v, order, line); });
        w.implicit = ImplicitWeb{p};
        return w;
    }
    SplitWeb s;
    for (size_t k = 0; k < parsed.size(); ++k) {
        if (parsed[k].kind != Expression::Kind::Form)
            throw SourceError(ErrorKind::ParseError, "web list entries must be 1-forms", l.line,
                              l.column + items[k].second);
        s.foliations.push_back(parsed[k].form);
    }
    w.split = s;
    return w;
}

json cmd_riccati_check(const JobFile& job, int order) {
    Riccati r = riccati_of(job, order);
    json j;
    j["frobenius"] = frobenius_check(r);
    j["logarithmic"] = r.is_laurent() && is_logarithmic(r);
    TorsionData t = torsion(r);
    j["torsion_free"] = t.dkappa.is_zero();
    j["kappa"] = print(t.kappa);
    j["dkappa"] = print(t.dkappa);
    return j;
}

json cmd_riccati_classify(const JobFile& job, int order) {
    NormalFormModel m = classify_affine(riccati_of(job, order));
    json j;
    put_affine(j, m.model);
    put_monodromy(j, m.monodromy);
    const ClassificationCertificate& c = m.certificate;
    j["certificate"] = {{"residue_nu", c.nu.to_string()},
                        {"logarithmic", c.logarithmic},
                        {"residue", c.residue.to_string()},
                        {"input_fiber", c.input_fiber.model.to_string()},
                        {"reference_fiber", c.reference_fiber.model.to_string()}};
    return j;
}

json cmd_pencil_induce(const JobFile& job, int order) {
    Pencil p = pencil_of(job, order);
    PencilReport rep = validate_pencil(p);
    Riccati r = induced_riccati(p);
    json j;
    put_riccati(j, r);
    j["flat"] = rep.flat();
    j["delta"] = print(pencil_delta(p));
    return j;
}

json cmd_pencil_model(const JobFile& job, int order) {
    if (job.kind != JobFile::Kind::Model) fail(ErrorKind::ParseError, "expected a model job");
    ModelSpec m = parse_model(job.at("model").value);
    json j;
    if (m.web) {
        WebPencil p = model_pencil(m.webmodel, order);
        auto lift = [](const std::vector<LaurentJet>& v) {
            std::vector<TransJet> r;
            for (auto& c : v) r.push_back(TransJet(c));
            return r;
        };
        put_web_model(j, m.webmodel);
        j["p0"] = print_polynomial(lift(p.p0));
        j["pinf"] = print_polynomial(lift(p.pinf));
        return j;
    }
    Pencil p = model_pencil(m.affine, order);
    put_affine(j, m.affine);
    j["omega0"] = print(p.omega0);
    j["omegaInf"] = print(p.omegaInf);
    j["riccati"] = json::object();
    put_riccati(j["riccati"], induced_riccati(p));
    return j;
}

json cmd_normalize(const JobFile& job, int order) {
    if (job.kind != JobFile::Kind::OneForm) fail(ErrorKind::ParseError, "expected a one-form job (nu, u)");
    QComplex nu = QComplex::parse(job.at("nu").value);
    TransJet u = parse_field(job.at("u"), [&](const std::string& v, int line) { return parse_function(v, order, line); });
    if (!u.is_laurent()) fail(ErrorKind::DomainError, "u must be a power series in x");
    LaurentJet ul = u.to_laurent();
    for (auto& [k, c] : ul.terms())
        if (k.second != 0) fail(ErrorKind::DomainError, "u must depend on x only");
    OneFormNormalization n = normalize_one_form(nu, ul);
    json j;
    const char* kinds[] = {"PowerForm", "LogPole", "HigherPole"};
    j["model"] = kinds[static_cast<int>(n.model.kind)];
    switch (n.model.kind) {
        case OneFormModel::Kind::PowerForm:
            j["nu"] = n.model.nu.to_string();
            j["coeff"] = n.model.coeff.to_string();
            break;
        case OneFormModel::Kind::LogPole: j["lambda"] = n.model.lambda.to_string(); break;
        case OneFormModel::Kind::HigherPole:
            j["n"] = n.model.n;
            j["coeff"] = n.model.coeff.to_string();
            j["lambda"] = n.model.lambda.to_string();
            break;
    }
    j["label"] = n.model.to_string();
    j["phi"] = print(TransJet(n.phi));
    return j;
}

json cmd_web_discriminant(const JobFile& job, int order) {
    Discriminant d = discriminant(web_of(job, order).as_implicit());
    json j;
    j["discriminant"] = print(d.value);
    j["y_order"] = d.y_order.to_string();
    return j;
}

json cmd_web_fit(const JobFile& job, int order) {
    WebInput w = web_of(job, order);
    auto r = w.split ? fit_riccati(*w.split) : fit_riccati(*w.implicit);
    json j;
    j["fitted"] = r.has_value();
    if (r) put_riccati(j, *r);
    return j;
}

json cmd_web_hexagonal(const JobFile& job, int order) {
    WebInput w = web_of(job, order);
    auto r = w.split ? fit_riccati(*w.split) : fit_riccati(*w.implicit);
    if (!r) fail(ErrorKind::NonConstantCrossRatio, "web is not contained in a pencil");
    Form2 dk = torsion(*r).dkappa;
    json j;
    j["hexagonal"] = dk.is_zero();
    j["dkappa"] = print(dk);
    // only defined for transversal 3-webs
    if (w.split && w.split->degree() == 3) {
        try {
            j["blaschke"] = print(blaschke_curvature(*w.split));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotTransversal) throw;
        }
    }
    return j;
}

json cmd_web_classify(const JobFile& job, int order) {
    WebInput w = web_of(job, order);
    WebClassification c = w.split ? classify_web(*w.split) : classify_web(*w.implicit);
    json j;
    put_web_model(j, c.model);
    j["nu"] = c.nu.to_string();
    j["affine"] = c.affine.model.to_string();
    put_monodromy(j, c.affine.monodromy);
    json d;
    d["member_degree"] = c.decomposition.member_degree;
    d["members"] = c.decomposition.members;
    d["in_model_coordinates"] = c.decomposition.in_model_coordinates;
    json ts = json::array();
    for (auto& t : c.decomposition.t_values) ts.push_back(t.to_string());
    d["t_values"] = ts;
    j["decomposition"] = d;
    return j;
}

using Handler = json (*)(const JobFile&, int);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> m = {
        {"riccati check", cmd_riccati_check}, {"riccati classify", cmd_riccati_classify},
        {"pencil induce", cmd_pencil_induce}, {"pencil model", cmd_pencil_model},
        {"normalize one-form", cmd_normalize}, {"web discriminant", cmd_web_discriminant},
        {"web fit-riccati", cmd_web_fit},     {"web hexagonal", cmd_web_hexagonal},
        {"web classify", cmd_web_classify}};
    return m;
}

// Restores the process default order on scope exit.
struct OrderScope {
    int saved = default_order();
    explicit OrderScope(int n) { set_default_order(n); }
    ~OrderScope() { set_default_order(saved); }
};

}  // namespace

std::vector<std::string> commands() {
    std::vector<std::string> v;
    for (auto& [k, h] : handlers()) v.push_back(k);
    return v;
}

Outcome run(const std::string& command, const std::string& job_text, std::optional<int> order) {
    Outcome o;
    json& j = o.body;
    j["schema"] = "1";
    j["command"] = command;
    try {
        auto h = handlers().find(command);
        if (h == handlers().end()) fail(ErrorKind::ParseError, "unknown command '" + command + "'");
        if (order && *order < 1) fail(ErrorKind::ParseError, "order must be positive");
        JobFile job = parse_job(job_text);
        int n = resolve_order(order, job);
        OrderScope scope(n);
        j["order"] = n;
        json result = h->second(job, n);
        for (auto& [k, v] : result.items()) j[k] = v;
    } catch (const Error& e) {
        json err;
        err["kind"] = error_kind_name(e.kind());
        err["message"] = e.what();
        if (auto* s = dynamic_cast<const SourceError*>(&e)) {
            err["line"] = s->line();
            err["column"] = s->column();
        }
        j.erase("order");
        j["error"] = err;
        o.exit_code = error_exit_code(e.kind());
    } catch (const std::exception& e) {
        j.erase("order");
        j["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
        o.exit_code = 2;
    }
    return o;
}

std::string render(const Outcome& o, bool pretty) { return o.body.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace ag::cli
