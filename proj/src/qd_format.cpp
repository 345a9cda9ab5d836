#include "iqc/qd_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace iqc {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool has_k(GateKind kind) {
    return kind == GateKind::Shift || kind == GateKind::ControlledShift || kind == GateKind::MultiControlledShift;
}

bool has_ij(GateKind kind) { return kind == GateKind::Flip || kind == GateKind::ControlledFlip; }

std::string id_or_dash(QuditId q) { return q == kNoQudit ? "-" : std::to_string(q); }

std::string mapping_line(const char* label, const Mapping& m) {
    std::string s = std::string("# ") + label + ": sites=" + std::to_string(m.num_sites());
    for (std::size_t q = 0; q < m.num_qudits(); ++q) {
        s += " " + std::to_string(q) + ":" + std::to_string(m.site_of(static_cast<QuditId>(q)));
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

class LineParser {
public:
    explicit LineParser(int line) : line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    int integer(std::string_view s, const char* what) const {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
            fail(std::string("bad ") + what + " '" + std::string(s) + "'");
        }
        return v;
    }

    std::pair<std::string_view, std::string_view> key_value(std::string_view tok) const {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) fail("expected key=value, got '" + std::string(tok) + "'");
        return {tok.substr(0, eq), tok.substr(eq + 1)};
    }

    Mapping mapping(const std::vector<std::string_view>& toks, std::size_t num_qudits) const {
        if (toks.size() < 3) fail("empty mapping");
        auto [k, v] = key_value(toks[2]);
        if (k != "sites") fail("mapping must start with sites=<count>");
        Mapping m(num_qudits, static_cast<std::size_t>(integer(v, "site count")));
        for (std::size_t i = 3; i < toks.size(); ++i) {
            const auto colon = toks[i].find(':');
            if (colon == std::string_view::npos) fail("expected qudit:site");
            try {
                m.assign(integer(toks[i].substr(0, colon), "qudit id"), integer(toks[i].substr(colon + 1), "site"));
            } catch (const std::logic_error& e) {
                fail(e.what());
            }
        }
        if (!m.is_total()) fail("mapping does not place every qudit");
        return m;
    }

private:
    int line_;
};

}  // namespace

std::string to_qd(const GateApp& op) {
    std::string s = "gate " + std::string(to_string(op.kind));
    for (const auto& c : op.controls) s += " ctrl=" + std::to_string(c.qudit) + "@" + std::to_string(c.value);
    s += " tgt=";
    for (std::size_t i = 0; i < op.targets.size(); ++i) s += (i ? "," : "") + id_or_dash(op.targets[i]);
    if (has_k(op.kind)) s += " k=" + std::to_string(op.k);
    if (has_ij(op.kind)) s += " i=" + std::to_string(op.i) + " j=" + std::to_string(op.j);
    if (!op.sites.empty()) {
        s += " @";
        for (std::size_t i = 0; i < op.sites.size(); ++i) s += (i ? "," : "") + std::to_string(op.sites[i]);
    }
    return s;
}

std::string to_qd(const Circuit& c) {
    std::ostringstream out;
    const auto& m = c.meta();
    out << "# meta";
    if (!m.name.empty()) out << " name=" << m.name;
    out << " io_radix=" << m.io_radix << " radix=" << m.radix << " controls=" << m.controls
        << " ancilla=" << m.ancilla << " qubit_toffolis=" << m.qubit_toffolis
        << " qudit_toffolis=" << m.qudit_toffolis;
    if (m.grid_rows > 0) out << " grid=" << m.grid_rows << "x" << m.grid_cols;
    out << "\n";
    for (const auto& q : c.qudits()) {
        out << "qudit " << q.id << " dim=" << q.dim << " role=" << to_string(q.role) << "\n";
    }
    for (const auto& op : c.ops()) out << to_qd(op) << "\n";
    if (c.is_routed()) {
        out << mapping_line("initial-mapping", *c.initial_mapping()) << "\n";
        out << mapping_line("final-mapping", *c.final_mapping()) << "\n";
    }
    return out.str();
}

Circuit parse_qd(std::istream& in) {
    Circuit c;
    std::optional<Mapping> initial, final;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const LineParser lp(lineno);
        const auto toks = words(raw);
        if (toks.empty()) continue;

        if (toks[0].front() == '#') {
            if (toks[0] != "#" || toks.size() < 2) continue;
            if (toks[1] == "meta") {
                auto& m = c.meta();
                for (std::size_t i = 2; i < toks.size(); ++i) {
                    auto [k, v] = lp.key_value(toks[i]);
                    if (k == "name") m.name = std::string(v);
                    else if (k == "io_radix") m.io_radix = lp.integer(v, "io_radix");
                    else if (k == "radix") m.radix = lp.integer(v, "radix");
                    else if (k == "controls") m.controls = lp.integer(v, "controls");
                    else if (k == "ancilla") m.ancilla = lp.integer(v, "ancilla");
                    else if (k == "qubit_toffolis") m.qubit_toffolis = lp.integer(v, "qubit_toffolis");
                    else if (k == "qudit_toffolis") m.qudit_toffolis = lp.integer(v, "qudit_toffolis");
                    else if (k == "grid") {
                        const auto x = v.find('x');
                        if (x == std::string_view::npos) lp.fail("bad grid '" + std::string(v) + "'");
                        m.grid_rows = lp.integer(v.substr(0, x), "grid rows");
                        m.grid_cols = lp.integer(v.substr(x + 1), "grid cols");
                    }
                }
            } else if (toks[1] == "initial-mapping:") {
                initial = lp.mapping(toks, c.num_qudits());
            } else if (toks[1] == "final-mapping:") {
                final = lp.mapping(toks, c.num_qudits());
            }
            continue;
        }

        if (toks[0] == "qudit") {
            if (toks.size() < 2) lp.fail("qudit needs an id");
            const int id = lp.integer(toks[1], "qudit id");
            if (id != static_cast<int>(c.num_qudits())) {
                lp.fail("qudit ids must be dense and in order (expected " + std::to_string(c.num_qudits()) + ")");
            }
            int dim = -1;
            Role role = Role::Plain;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto [k, v] = lp.key_value(toks[i]);
                if (k == "dim") {
                    dim = lp.integer(v, "dim");
                } else if (k == "role") {
                    try {
                        role = role_from_string(v);
                    } catch (const std::invalid_argument& e) {
                        lp.fail(e.what());
                    }
                } else {
                    lp.fail("unknown qudit field '" + std::string(k) + "'");
                }
            }
            if (dim < 0) lp.fail("qudit needs dim=");
            try {
                c.add_qudit(dim, role);
            } catch (const ValidationError& e) {
                lp.fail(e.what());
            }
            continue;
        }

        if (toks[0] != "gate") lp.fail("unknown directive '" + std::string(toks[0]) + "'");
        if (toks.size() < 2) lp.fail("gate needs a kind");
        const auto kind = kind_from_string(toks[1]);
        if (!kind) lp.fail("unknown gate kind '" + std::string(toks[1]) + "'");
        GateApp op;
        op.kind = *kind;
        bool seen_k = false, seen_i = false, seen_j = false;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            const auto tok = toks[i];
            if (tok.front() == '@') {
                for (auto s : split(tok.substr(1), ',')) op.sites.push_back(lp.integer(s, "site"));
                continue;
            }
            auto [k, v] = lp.key_value(tok);
            if (k == "ctrl") {
                const auto at = v.find('@');
                if (at == std::string_view::npos) lp.fail("ctrl needs <id>@<value>");
                op.controls.push_back({lp.integer(v.substr(0, at), "control id"),
                                       lp.integer(v.substr(at + 1), "control value")});
            } else if (k == "tgt") {
                for (auto t : split(v, ',')) op.targets.push_back(t == "-" ? kNoQudit : lp.integer(t, "target id"));
            } else if (k == "k") {
                op.k = lp.integer(v, "k");
                seen_k = true;
            } else if (k == "i") {
                op.i = lp.integer(v, "i");
                seen_i = true;
            } else if (k == "j") {
                op.j = lp.integer(v, "j");
                seen_j = true;
            } else {
                lp.fail("unknown gate field '" + std::string(k) + "'");
            }
        }
        if (has_k(op.kind) && !seen_k) lp.fail(std::string(to_string(op.kind)) + " needs k=");
        if (has_ij(op.kind) && !(seen_i && seen_j)) lp.fail(std::string(to_string(op.kind)) + " needs i= and j=");
        if (op.kind == GateKind::CnX) {
            op.i = 0;
            op.j = 1;
        }
        try {
            c.append(std::move(op));
        } catch (const ValidationError& e) {
            lp.fail(e.what());
        }
    }
    if (initial.has_value() != final.has_value()) {
        throw ParseError(lineno, "routed circuit needs both initial and final mappings");
    }
    if (initial) {
        try {
            c.set_mappings(std::move(*initial), std::move(*final));
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return c;
}

Circuit parse_qd_string(const std::string& text) {
    std::istringstream in(text);
    return parse_qd(in);
}

Circuit load_qd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_qd(in);
}

void save_qd_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_qd(c);
}

}  // namespace iqc
