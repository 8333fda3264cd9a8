#include "pingpong/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pp {

namespace {

std::string located(int line, int column, const std::string& msg) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
}

}  // namespace

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error(located(l, c, msg)), line(l), column(c), detail(msg) {}

ValidationError::ValidationError(int l, int c, const std::string& msg, std::string h)
    : std::runtime_error(located(l, c, msg) + (h.empty() ? "" : " (hint: " + h + ")")),
      line(l),
      column(c),
      detail(msg),
      hint(std::move(h)) {}

long Command::integer(const std::string& key, long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stol(it->second);
}

std::string Command::text(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

Assignment MoebiusScenario::assignment() const {
    Assignment a;
    for (const auto& [name, g] : generators) a[name] = g;
    return a;
}

ModelConfig ModelScenario::build() const {
    auto s = [&](const char* k) { return seeds.at(k); };
    switch (arrangement) {
    case Arrangement::Linked:
        return build_linked_model(lambda_p, lambda_q, {p, q, pbar, qbar, s("I_p"), s("I_pbar"), s("I_q"), s("I_qbar")});
    case Arrangement::UnlinkedGeometric:
        return build_unlinked_geometric_model(lambda_p, lambda_q, p, qbar, q, pbar, s("R_p"), s("R_q"));
    case Arrangement::Parallel:
        return build_parallel_model(lambda_p, lambda_q, {p, qbar, q, pbar, s("I_1"), s("I_2"), s("I_3"), s("I_4")},
                                    unverified);
    case Arrangement::Hexagon:
        return build_hexagon_model(lambda_p, lambda_q,
                                   {p, qbar, q, pbar, {s("I_1"), s("I_2"), s("I_3"), s("I_4"), s("I_5"), s("I_6")}},
                                   unverified);
    case Arrangement::Custom: break;
    }
    throw std::invalid_argument("custom arrangements cannot be built from a scenario");
}

std::optional<Partition> ModelScenario::partition() const {
    auto s = [&](const char* k) { return seeds.at(k); };
    switch (arrangement) {
    case Arrangement::Linked:
        return build_linked_partition(s("I_p"), s("I_pbar"), s("I_q"), s("I_qbar"), p, q, pbar, qbar);
    case Arrangement::UnlinkedGeometric: return build_unlinked_geometric(s("R_p"), s("R_q"));
    case Arrangement::Parallel:
        return build_unlinked_parallel(s("I_1"), s("I_2"), s("I_3"), s("I_4"), p, qbar, q, pbar);
    default: return std::nullopt;
    }
}

namespace {

// Recursive-descent reader over one value. Errors carry the column of the offending character.
class Reader {
public:
    Reader(const std::string& text, int line, int col) : s_(text), line_(line), col_(col) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_ + int(i_), msg); }
    [[noreturn]] void invalid(std::size_t at, const std::string& msg, const std::string& hint = "") const {
        throw ValidationError(line_, col_ + int(at), msg, hint);
    }

    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        ws();
        if (s_.compare(i_, w.size(), w) != 0) return false;
        std::size_t j = i_ + w.size();
        if (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) return false;
        i_ = j;
        return true;
    }
    void end() {
        ws();
        if (i_ != s_.size()) fail("unexpected trailing text");
    }
    std::size_t pos() const { return i_; }

    mpz_class integer() {
        ws();
        std::size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        std::size_t digits = j;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == digits) fail("expected an integer");
        std::string tok = s_.substr(i_, j - i_);
        if (tok[0] == '+') tok.erase(0, 1);
        i_ = j;
        return mpz_class(tok);
    }

    mpq_class rational() {
        std::size_t at = i_;
        mpz_class num = integer();
        mpz_class den = 1;
        if (accept('/')) {
            at = i_;
            den = integer();
            if (den <= 0) invalid(at, "denominator must be positive");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    mpz_class radicand() {
        expect('(');
        ws();
        std::size_t at = i_;
        mpz_class d = integer();
        expect(')');
        if (d < 2) invalid(at, "radicand must be an integer >= 2");
        if (!is_squarefree(d)) {
            auto [k, r] = squarefree_split(d);
            std::string hint = "write " + k.get_str() + (r == 1 ? "" : "*sqrt(" + r.get_str() + ")");
            invalid(at, "d = " + d.get_str() + " is not square-free", hint);
        }
        return d;
    }

    // rational | [rational '*'] sqrt(d)
    Surd term() {
        if (accept_word("sqrt")) return Surd(0, 1, radicand());
        mpq_class c = rational();
        if (accept('*')) {
            if (!accept_word("sqrt")) fail("expected sqrt");
            return Surd(0, c, radicand());
        }
        return Surd(c);
    }

    Surd surd() {
        ws();
        std::size_t at = i_;
        bool neg = false;
        if (peek('-') && i_ + 1 < s_.size() && s_.compare(i_ + 1, 4, "sqrt") == 0) {
            neg = true;
            ++i_;
        }
        Surd x = term();
        if (neg) x = -x;
        while (peek('+') || peek('-')) {
            bool minus = s_[i_] == '-';
            ++i_;
            ws();
            Surd t = term();
            try {
                x = minus ? x - t : x + t;
            } catch (const std::exception&) {
                invalid(at, "terms use different radicands");
            }
        }
        return x;
    }

    CirclePoint point() {
        if (accept_word("inf")) return CirclePoint::infinity();
        return CirclePoint(surd());
    }

    Arc arc() {
        std::size_t at = (ws(), i_);
        expect('(');
        CirclePoint lo = point();
        expect(',');
        CirclePoint hi = point();
        expect(')');
        try {
            return Arc(lo, hi);
        } catch (const std::exception& e) {
            invalid(at, e.what());
        }
    }

    // Arcs separated by ',' or 'u'; "none" is the empty list.
    std::vector<Arc> arcs() {
        std::vector<Arc> out;
        ws();
        if (i_ == s_.size() || accept_word("none")) return out;
        out.push_back(arc());
        while (accept(',') || accept_word("u")) out.push_back(arc());
        return out;
    }

    MoebiusMap matrix() {
        ws();
        std::size_t at = i_;
        expect('[');
        mpz_class e[4];
        for (int r = 0; r < 2; ++r) {
            if (r) expect(',');
            expect('[');
            e[2 * r] = integer();
            expect(',');
            e[2 * r + 1] = integer();
            expect(']');
        }
        expect(']');
        mpz_class det = e[0] * e[3] - e[1] * e[2];
        if (det == 0) invalid(at, "matrix has determinant 0");
        if (det < 0) invalid(at, "matrix has negative determinant (orientation reversing)");
        return MoebiusMap(e[0], e[1], e[2], e[3]);
    }

    std::string identifier() {
        ws();
        std::size_t j = i_;
        if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
            ++j;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        }
        if (j == i_) fail("expected a name");
        std::string out = s_.substr(i_, j - i_);
        i_ = j;
        return out;
    }

private:
    const std::string& s_;
    int line_, col_;
    std::size_t i_ = 0;
};

template <class F>
auto read_value(const std::string& text, int line, int col, F f) {
    Reader r(text, line, col);
    auto v = f(r);
    r.end();
    return v;
}

struct Entry {
    std::string key, value;
    int line, key_col, value_col;
};

struct Section {
    std::string name;
    int line;
    std::vector<Entry> entries;

    const Entry* find(const std::string& key) const {
        for (const Entry& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
    const Entry& need(const std::string& key) const {
        if (const Entry* e = find(key)) return *e;
        throw ValidationError(line, 1, "[" + name + "] is missing '" + key + "'");
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<Section> split_sections(const std::string& text) {
    std::vector<Section> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        if (trim(s).empty()) continue;
        std::size_t lead = s.find_first_not_of(" \t");
        if (s[lead] == '[') {
            std::size_t close = s.find(']', lead);
            if (close == std::string::npos) throw ParseError(line, int(lead) + 1, "unterminated section header");
            if (!trim(s.substr(close + 1)).empty()) throw ParseError(line, int(close) + 2, "text after section header");
            out.push_back({trim(s.substr(lead + 1, close - lead - 1)), line, {}});
            continue;
        }
        if (out.empty()) throw ParseError(line, int(lead) + 1, "key outside of any section");
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, int(s.size()) + 1, "expected '='");
        std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ParseError(line, int(lead) + 1, "empty key");
        std::size_t vstart = s.find_first_not_of(" \t", eq + 1);
        if (vstart == std::string::npos) throw ParseError(line, int(s.size()) + 1, "empty value");
        Section& sec = out.back();
        if (sec.find(key)) throw ParseError(line, int(lead) + 1, "duplicate key '" + key + "'");
        sec.entries.push_back({key, trim(s.substr(vstart)), line, int(lead) + 1, int(vstart) + 1});
    }
    return out;
}

const std::map<std::string, std::set<std::string>> kCommandKeys = {
    {"classify", {}},
    {"classify-pair", {"f", "g"}},
    {"classify-commutator", {"h", "f"}},
    {"census", {"samples", "seed"}},
    {"certify", {"radius"}},
    {"verify", {"mode", "radius", "depth"}},
    {"classify-unlinked", {}},
    {"hexagon", {}},
    {"containments", {"samples", "seed"}},
};

const std::map<Arrangement, std::vector<std::string>> kSeedNames = {
    {Arrangement::Linked, {"I_p", "I_pbar", "I_q", "I_qbar"}},
    {Arrangement::UnlinkedGeometric, {"R_p", "R_q"}},
    {Arrangement::Parallel, {"I_1", "I_2", "I_3", "I_4"}},
    {Arrangement::Hexagon, {"I_1", "I_2", "I_3", "I_4", "I_5", "I_6"}},
};

void reject_unknown(const Section& sec, const std::set<std::string>& allowed) {
    for (const Entry& e : sec.entries)
        if (!allowed.count(e.key)) throw ParseError(e.line, e.key_col, "unknown key '" + e.key + "' in [" + sec.name + "]");
}

CirclePoint point_of(const Entry& e) { return read_value(e.value, e.line, e.value_col, [](Reader& r) { return r.point(); }); }

Arc arc_of(const Entry& e) { return read_value(e.value, e.line, e.value_col, [](Reader& r) { return r.arc(); }); }

std::vector<Arc> arcs_of(const Entry& e) {
    return read_value(e.value, e.line, e.value_col, [](Reader& r) { return r.arcs(); });
}

long positive_integer(const Entry& e, const std::string& what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
    if (ec != std::errc() || ptr != e.value.data() + e.value.size())
        throw ParseError(e.line, e.value_col, "expected an integer for '" + e.key + "'");
    if (v < 1) throw ValidationError(e.line, e.value_col, what + " must be >= 1");
    return v;
}

TranslationGroup lambda_of(const Entry& e) {
    return read_value(e.value, e.line, e.value_col, [&](Reader& r) {
        std::size_t at = r.pos();
        Surd t1 = r.surd();
        r.expect(',');
        Surd t2 = r.surd();
        try {
            return TranslationGroup(t1, t2);
        } catch (const std::exception& ex) {
            r.invalid(at, ex.what());
        }
    });
}

void read_model(const Section& sec, ModelScenario& m) {
    const Entry& arr = sec.need("arrangement");
    const std::map<std::string, Arrangement> names = {{"linked", Arrangement::Linked},
                                                      {"unlinked-geometric", Arrangement::UnlinkedGeometric},
                                                      {"parallel", Arrangement::Parallel},
                                                      {"hexagon", Arrangement::Hexagon}};
    auto it = names.find(arr.value);
    if (it == names.end()) throw ValidationError(arr.line, arr.value_col, "unknown arrangement '" + arr.value + "'");
    m.arrangement = it->second;
    std::set<std::string> allowed = {"arrangement", "lambda_p", "lambda_q", "p", "q", "pbar", "qbar", "unverified"};
    for (const std::string& s : kSeedNames.at(m.arrangement)) allowed.insert(s);
    reject_unknown(sec, allowed);
    if (const Entry* e = sec.find("lambda_p")) m.lambda_p = lambda_of(*e);
    if (const Entry* e = sec.find("lambda_q")) m.lambda_q = lambda_of(*e);
    m.p = point_of(sec.need("p"));
    m.q = point_of(sec.need("q"));
    m.pbar = point_of(sec.need("pbar"));
    m.qbar = point_of(sec.need("qbar"));
    for (const std::string& s : kSeedNames.at(m.arrangement)) m.seeds[s] = arc_of(sec.need(s));
    if (const Entry* e = sec.find("unverified")) {
        if (e->value != "true" && e->value != "false")
            throw ParseError(e->line, e->value_col, "expected true or false");
        m.unverified = e->value == "true";
    }
}

UnlinkedGapData read_gaps(const Section& sec, std::optional<MoebiusMap>& orbit) {
    reject_unknown(sec, {"p", "qbar", "q", "pbar", "right_p", "left_p", "right_q", "left_q", "same_orbit"});
    UnlinkedGapData d;
    d.p = point_of(sec.need("p"));
    d.qbar = point_of(sec.need("qbar"));
    d.q = point_of(sec.need("q"));
    d.pbar = point_of(sec.need("pbar"));
    d.right_p = arcs_of(sec.need("right_p"));
    d.left_p = arcs_of(sec.need("left_p"));
    d.right_q = arcs_of(sec.need("right_q"));
    d.left_q = arcs_of(sec.need("left_q"));
    if (const Entry* e = sec.find("same_orbit"))
        orbit = read_value(e->value, e->line, e->value_col, [](Reader& r) { return r.matrix(); });
    return d;
}

void check_word(const Entry& e, const Presentation& pres) {
    try {
        parse_word(e.value, pres);
    } catch (const std::exception& ex) {
        throw ValidationError(e.line, e.value_col, ex.what());
    }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    std::vector<Section> sections = split_sections(text);
    Scenario sc;
    std::set<std::string> seen;
    const Section* factors = nullptr;
    const Section* partition = nullptr;
    bool have_model = false;
    int model_line = 0;
    for (const Section& sec : sections) {
        if (sec.name != "command" && !seen.insert(sec.name).second)
            throw ParseError(sec.line, 1, "duplicate section [" + sec.name + "]");
        if (sec.name == "scenario") {
            reject_unknown(sec, {"name", "kind"});
            sc.name = sec.need("name").value;
            if (const Entry* k = sec.find("kind")) {
                if (k->value == "model") sc.kind = ScenarioKind::Model;
                else if (k->value != "moebius")
                    throw ValidationError(k->line, k->value_col, "kind must be moebius or model");
            }
        } else if (sec.name == "generators") {
            for (const Entry& e : sec.entries) {
                read_value(e.key, e.line, e.key_col, [](Reader& r) { return r.identifier(); });
                sc.moebius.generators.emplace_back(
                    e.key, read_value(e.value, e.line, e.value_col, [](Reader& r) { return r.matrix(); }));
            }
        } else if (sec.name == "factors") {
            factors = &sec;
        } else if (sec.name == "partition") {
            partition = &sec;
        } else if (sec.name == "model") {
            read_model(sec, sc.model);
            have_model = true;
            model_line = sec.line;
        } else if (sec.name == "gaps") {
            sc.gaps = read_gaps(sec, sc.orbit_map);
        } else if (sec.name == "command") {
            const Entry& op = sec.need("op");
            auto keys = kCommandKeys.find(op.value);
            if (keys == kCommandKeys.end()) throw ValidationError(op.line, op.value_col, "unknown op '" + op.value + "'");
            std::set<std::string> allowed = keys->second;
            allowed.insert("op");
            reject_unknown(sec, allowed);
            Command c{op.value, sec.line, {}};
            for (const Entry& e : sec.entries) {
                if (e.key == "op") continue;
                if (e.key == "radius" || e.key == "depth" || e.key == "samples") positive_integer(e, e.key);
                if (e.key == "seed") {
                    std::uint64_t v = 0;
                    auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
                    if (ec != std::errc() || ptr != e.value.data() + e.value.size())
                        throw ParseError(e.line, e.value_col, "expected a non-negative integer seed");
                }
                if (e.key == "mode" && e.value != "finite" && e.value != "axis" && e.value != "both")
                    throw ValidationError(e.line, e.value_col, "mode must be finite, axis or both");
                c.params[e.key] = e.value;
            }
            sc.commands.push_back(std::move(c));
        } else {
            throw ParseError(sec.line, 1, "unknown section [" + sec.name + "]");
        }
    }
    if (!seen.count("scenario")) throw ValidationError(1, 1, "missing [scenario] section");
    if (sc.name.empty()) throw ValidationError(1, 1, "scenario name is empty");
    if (sc.kind == ScenarioKind::Model && !have_model) throw ValidationError(1, 1, "model scenario without [model]");
    if (sc.kind == ScenarioKind::Moebius && have_model)
        throw ValidationError(model_line, 1, "[model] requires kind = model");

    // Factor structure: explicit, or one cyclic factor per generator.
    Presentation& pres = sc.moebius.pres;
    std::set<std::string> used;
    if (factors) {
        for (const Entry& e : factors->entries) {
            FactorSpec f{e.key, {}};
            std::istringstream in(e.value);
            std::string g;
            while (std::getline(in, g, ',')) {
                g = trim(g);
                bool known = false;
                for (const auto& [name, m] : sc.moebius.generators) known = known || name == g;
                if (!known) throw ValidationError(e.line, e.value_col, "undefined generator '" + g + "'");
                if (!used.insert(g).second)
                    throw ValidationError(e.line, e.value_col, "generator '" + g + "' appears in two factors");
                f.generators.push_back(g);
            }
            pres.push_back(f);
        }
    } else {
        for (const auto& [name, m] : sc.moebius.generators) pres.push_back({name, {name}});
    }
    if (partition) {
        reject_unknown(*partition, {"U_H", "U_K"});
        const Entry& h = partition->need("U_H");
        const Entry& k = partition->need("U_K");
        try {
            sc.moebius.partition = make_partition(normalize(arcs_of(h)), normalize(arcs_of(k)));
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            throw ValidationError(partition->line, 1, e.what());
        }
        if (pres.size() != 2) throw ValidationError(partition->line, 1, "a partition needs exactly two factors");
    }

    std::size_t ci = 0;
    for (const Section& sec : sections) {
        if (sec.name != "command") continue;
        const Command& c = sc.commands[ci++];
        bool moebius = sc.kind == ScenarioKind::Moebius;
        auto need = [&](bool ok, const std::string& msg) {
            if (!ok) throw ValidationError(sec.line, 1, c.op + ": " + msg);
        };
        if (c.op == "classify") {
            need(moebius && !sc.moebius.generators.empty(), "needs generators");
        } else if (c.op == "classify-pair" || c.op == "classify-commutator") {
            need(moebius, "needs a moebius scenario");
            for (const char* k : {"f", "g", "h"})
                if (sec.find(k)) check_word(*sec.find(k), pres);
            for (const char* k : c.op == "classify-pair" ? std::vector<const char*>{"f", "g"}
                                                          : std::vector<const char*>{"h", "f"})
                sec.need(k);
        } else if (c.op == "verify" || c.op == "certify") {
            need(!moebius || (c.op == "certify" ? !sc.moebius.generators.empty() : sc.moebius.partition.has_value()),
                 moebius ? "needs generators and a [partition]" : "");
        } else if (c.op == "classify-unlinked") {
            need(sc.gaps.has_value(), "needs a [gaps] section");
        } else if (c.op == "hexagon") {
            need(!moebius && sc.model.arrangement == Arrangement::Hexagon, "needs a hexagon model");
        } else if (c.op == "containments") {
            need(!moebius && sc.model.arrangement == Arrangement::Linked, "needs a linked model");
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

Surd parse_surd(const std::string& text) { return read_value(text, 1, 1, [](Reader& r) { return r.surd(); }); }

CirclePoint parse_point(const std::string& text) {
    return read_value(text, 1, 1, [](Reader& r) { return r.point(); });
}

MoebiusMap parse_matrix(const std::string& text) {
    return read_value(text, 1, 1, [](Reader& r) { return r.matrix(); });
}

} // namespace pp
