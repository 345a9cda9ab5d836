#include "iqc/timing.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace iqc {

namespace {

using PairMap = std::map<std::pair<int, int>, double>;

constexpr int kTop = TimingTable::kMaxLevel;

std::pair<int, int> norm(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

std::optional<double> get(const PairMap& m, int a, int b) {
    if (a < 1 || b < 1 || a > kTop || b > kTop) return std::nullopt;
    auto it = m.find(norm(a, b));
    if (it == m.end()) return std::nullopt;
    return it->second;
}

double lerp(double lo, double hi, double frac) { return lo + (hi - lo) * frac; }

// Nearest known points below and above `a` along a line parameterized by
// `at(step)`; steps run over 1..kTop-1.
template <typename At>
std::optional<double> bracket(At at) {
    std::optional<std::pair<int, double>> below, above;
    for (int s = 1; s < kTop && !below; ++s) {
        if (auto v = at(-s)) below = std::pair{s, *v};
    }
    for (int s = 1; s < kTop && !above; ++s) {
        if (auto v = at(s)) above = std::pair{s, *v};
    }
    if (!below || !above) return std::nullopt;
    return lerp(below->second, above->second,
                static_cast<double>(below->first) / (below->first + above->first));
}

// Extends the line through the two nearest known points on one side.
template <typename At>
std::optional<double> extend(At at) {
    for (int dir : {-1, 1}) {
        std::vector<std::pair<int, double>> pts;
        for (int s = 1; s < kTop && pts.size() < 2; ++s) {
            if (auto v = at(dir * s)) pts.emplace_back(s, *v);
        }
        if (pts.size() == 2) {
            const auto [s1, v1] = pts[0];
            const auto [s2, v2] = pts[1];
            return v1 + (v1 - v2) * s1 / static_cast<double>(s2 - s1);
        }
    }
    return std::nullopt;
}

double floor_from_smaller(const PairMap& m, int a, int b, double v) {
    for (const auto& [k, ns] : m) {
        const auto [x, y] = k;
        if (x < 1) continue;
        if ((x <= a && y <= b) || (x <= b && y <= a)) v = std::max(v, ns);
    }
    return v;
}

std::vector<std::pair<int, int>> missing_pairs(const PairMap& m) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= kTop; ++a) {
        for (int b = a; b <= kTop; ++b) {
            if (!m.contains({a, b})) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end(), [](auto l, auto r) {
        return std::pair{l.first + l.second, l.first} < std::pair{r.first + r.second, r.first};
    });
    return out;
}

void fill_pairs(PairMap& m) {
    for (;;) {
        const auto todo = missing_pairs(m);
        if (todo.empty()) return;
        bool filled = false;
        const auto place = [&](int a, int b, double v) {
            m[{a, b}] = floor_from_smaller(m, a, b, v);
            filled = true;
        };
        for (auto [a, b] : todo) {
            if (auto v = bracket([&](int s) { return get(m, a + s, b + s); })) {
                place(a, b, *v);
                break;
            }
        }
        if (filled) continue;
        for (auto [a, b] : todo) {
            auto v = bracket([&](int s) { return get(m, a, b + s); });
            if (!v) v = bracket([&](int s) { return get(m, a + s, b); });
            if (v) {
                place(a, b, *v);
                break;
            }
        }
        if (filled) continue;
        for (auto [a, b] : todo) {
            auto v = extend([&](int s) { return get(m, a, b + s); });
            if (!v) v = extend([&](int s) { return get(m, a + s, b); });
            if (!v) v = extend([&](int s) { return get(m, a + s, b + s); });
            if (v) {
                place(a, b, *v);
                break;
            }
        }
        if (!filled) throw TimingError("interpolation cannot reach every level pair");
    }
}

void fill_singles(std::map<int, double>& m) {
    const auto at = [&](int l) -> std::optional<double> {
        auto it = m.find(l);
        if (l < 1 || l > kTop || it == m.end()) return std::nullopt;
        return it->second;
    };
    for (bool progress = true; progress;) {
        progress = false;
        for (int l = 1; l <= kTop; ++l) {
            if (m.contains(l)) continue;
            auto v = bracket([&](int s) { return at(l + s); });
            if (!v) v = extend([&](int s) { return at(l + s); });
            if (!v) continue;
            double floor = 0.0;
            for (const auto& [k, ns] : m) {
                if (k >= 1 && k < l) floor = std::max(floor, ns);
            }
            m[l] = std::max(*v, floor);
            progress = true;
        }
    }
}

int level_of(int dim) {
    const int level = std::max(dim, kMinDim) - 1;
    if (level > kTop) {
        throw TimingError("no timing data for occupied dimension " + std::to_string(dim));
    }
    return level;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view to_string(TimingKind kind) {
    switch (kind) {
        case TimingKind::Single: return "single";
        case TimingKind::Interaction: return "interaction";
        case TimingKind::Swap: return "swap";
    }
    return "?";
}

TimingTable TimingTable::load_default() {
    TimingTable t;
    t.single_ = {{1, 30}, {2, 50}, {3, 50}, {4, 50}};
    struct Row {
        int a, b;
        double inter, swap;
    };
    constexpr Row rows[] = {
        {0, 1, 150, 600},   {0, 2, 500, 1200},   {0, 3, 500, 1500},   {0, 4, 600, 1800},
        {1, 1, 500, 900},   {1, 2, 500, 1200},   {1, 3, 500, 1500},   {1, 4, 600, 1800},
        {2, 2, 675, 2950},  {2, 3, 850, 5000},   {2, 4, 1025, 7050},  {3, 3, 850, 5000},
        {3, 4, 1025, 7050}, {4, 4, 1200, 7500},
    };
    for (const auto& r : rows) {
        t.interaction_[{r.a, r.b}] = r.inter;
        t.swap_[{r.a, r.b}] = r.swap;
    }
    return t;
}

const PairMap& TimingTable::pair_map(TimingKind kind) const {
    return kind == TimingKind::Swap ? swap_ : interaction_;
}

PairMap& TimingTable::pair_map(TimingKind kind) {
    return kind == TimingKind::Swap ? swap_ : interaction_;
}

double TimingTable::single(int level) const {
    auto it = single_.find(level);
    if (level < 1 || it == single_.end()) {
        throw TimingError("no single-qudit time for level " + std::to_string(level));
    }
    return it->second;
}

double TimingTable::interaction(int a, int b) const {
    if (auto v = get(interaction_, a, b)) return *v;
    throw TimingError("no interaction time for levels " + std::to_string(a) + "," + std::to_string(b));
}

double TimingTable::swap(int a, int b) const {
    if (auto v = get(swap_, a, b)) return *v;
    throw TimingError("no swap time for levels " + std::to_string(a) + "," + std::to_string(b));
}

bool TimingTable::has(TimingKind kind, int a, int b) const {
    if (kind == TimingKind::Single) return single_.contains(a);
    return pair_map(kind).contains(key(a, b));
}

void TimingTable::set(TimingKind kind, int a, int b, double ns) {
    if (!(ns > 0)) throw TimingError("durations must be positive");
    if (a < 0 || b < 0 || a > kTop || b > kTop) {
        throw TimingError("level label outside 0.." + std::to_string(kTop));
    }
    if (kind == TimingKind::Single) {
        single_[a] = ns;
    } else {
        pair_map(kind)[key(a, b)] = ns;
    }
}

void TimingTable::erase(TimingKind kind, int a, int b) {
    if (kind == TimingKind::Single) {
        single_.erase(a);
    } else {
        pair_map(kind).erase(key(a, b));
    }
}

std::map<std::pair<int, int>, std::pair<double, double>> TimingTable::inert_rows() const {
    std::map<std::pair<int, int>, std::pair<double, double>> out;
    for (const auto& [k, ns] : interaction_) {
        if (k.first == 0) out[k].first = ns;
    }
    for (const auto& [k, ns] : swap_) {
        if (k.first == 0) out[k].second = ns;
    }
    return out;
}

void TimingTable::apply_overrides(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(body);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(trim(cell));
        if (lineno == 1 && !cells.empty() && cells[0] == "kind") continue;
        const auto fail = [&](const std::string& msg) {
            throw TimingError("timing line " + std::to_string(lineno) + ": " + msg);
        };
        if (cells.size() != 4) fail("expected kind,level_a,level_b,ns");
        TimingKind kind{};
        if (cells[0] == "single") {
            kind = TimingKind::Single;
        } else if (cells[0] == "interaction") {
            kind = TimingKind::Interaction;
        } else if (cells[0] == "swap") {
            kind = TimingKind::Swap;
        } else {
            fail("unknown kind '" + cells[0] + "'");
        }
        const auto parse_int = [&](const std::string& s) {
            int v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size()) fail("bad level '" + s + "'");
            return v;
        };
        const int a = parse_int(cells[1]);
        const int b = kind == TimingKind::Single && cells[2].empty() ? 0 : parse_int(cells[2]);
        double ns = 0;
        auto [p, ec] = std::from_chars(cells[3].data(), cells[3].data() + cells[3].size(), ns);
        if (ec != std::errc{} || p != cells[3].data() + cells[3].size()) fail("bad duration '" + cells[3] + "'");
        try {
            set(kind, a, b, ns);
        } catch (const TimingError& e) {
            fail(e.what());
        }
    }
    check();
}

void TimingTable::check() const {
    for (int a = 1; a <= kTop; ++a) {
        if (!single_.contains(a)) throw TimingError("missing single time for level " + std::to_string(a));
        if (a > 1 && single_.at(a) < single_.at(a - 1)) throw TimingError("single times must not decrease with level");
        for (int b = 1; b <= kTop; ++b) {
            const double in = interaction(a, b);
            const double sw = swap(a, b);
            if (sw < in) {
                throw TimingError("swap faster than interaction at levels " + std::to_string(a) + "," +
                                  std::to_string(b));
            }
            if (b > 1 && (in < interaction(a, b - 1) || sw < swap(a, b - 1))) {
                throw TimingError("pair times must not decrease with level at " + std::to_string(a) + "," +
                                  std::to_string(b));
            }
        }
    }
}

TimingTable interpolate(const TimingTable& partial) {
    std::vector<std::string> missing;
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{3, 3}}) {
        for (TimingKind kind : {TimingKind::Interaction, TimingKind::Swap}) {
            if (!partial.has(kind, a, b)) {
                missing.push_back(std::string(to_string(kind)) + "(" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
            }
        }
    }
    for (int l : {1, 3}) {
        if (!partial.has(TimingKind::Single, l)) missing.push_back("single(" + std::to_string(l) + ")");
    }
    if (!missing.empty()) {
        std::string msg = "missing timing anchors:";
        for (const auto& m : missing) msg += " " + m;
        throw TimingError(msg);
    }
    TimingTable out = partial;
    fill_singles(out.single_);
    fill_pairs(out.interaction_);
    fill_pairs(out.swap_);
    out.check();
    return out;
}

double gate_duration(const GateApp& op, std::span<const int> dims, const TimingTable& t) {
    if (dims.size() != op.arity()) throw TimingError("operand level count mismatch");
    if (op.arity() == 1) return t.single(level_of(dims[0]));
    if (op.arity() != 2) {
        throw TimingError(std::string(to_string(op.kind)) + " has no duration until decomposed");
    }
    const int a = level_of(dims[0]);
    const int b = level_of(dims[1]);
    return op.kind == GateKind::Swap ? t.swap(a, b) : t.interaction(a, b);
}

}  // namespace iqc
