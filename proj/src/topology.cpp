#include "iqc/topology.hpp"

#include "iqc/timing.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace iqc {

Topology::Topology(int rows, int cols, int site_max_dim)
    : rows_(rows), cols_(cols), site_max_dim_(site_max_dim) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid extents must be positive");
    if (site_max_dim < kMinDim || site_max_dim > kMaxDim) throw std::invalid_argument("site dimension outside [2, 7]");
    adj_.resize(static_cast<std::size_t>(num_sites()));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const SiteId s = site(r, c);
            auto& nb = adj_[static_cast<std::size_t>(s)];
            if (r > 0) nb.push_back(site(r - 1, c));
            if (c > 0) nb.push_back(site(r, c - 1));
            if (c + 1 < cols) nb.push_back(site(r, c + 1));
            if (r + 1 < rows) nb.push_back(site(r + 1, c));
            if (c + 1 < cols) edges_.emplace_back(s, site(r, c + 1));
            if (r + 1 < rows) edges_.emplace_back(s, site(r + 1, c));
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

Topology Topology::parse_grid(std::string_view spec) {
    const auto x = spec.find_first_of("xX");
    const auto num = [&](std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size() || v < 1) {
            throw std::invalid_argument("bad grid '" + std::string(spec) + "', expected RxC");
        }
        return v;
    };
    if (x == std::string_view::npos) throw std::invalid_argument("bad grid '" + std::string(spec) + "', expected RxC");
    return Topology(num(spec.substr(0, x)), num(spec.substr(x + 1)));
}

int Topology::hops(SiteId a, SiteId b) const {
    if (!valid(a) || !valid(b)) throw std::out_of_range("site outside grid");
    return std::abs(row_of(a) - row_of(b)) + std::abs(col_of(a) - col_of(b));
}

SiteId center_site(const Topology& topo) { return topo.site((topo.rows() - 1) / 2, (topo.cols() - 1) / 2); }

double distance_time(const Topology& topo, SiteId a, SiteId b, int la, int lb, const TimingTable& t) {
    const int h = topo.hops(a, b);
    if (h == 0) return 0.0;
    const double inter = t.interaction(la, lb);
    if (h == 1) return inter;
    return (h - 1) * t.swap(std::min(la, lb), 1) + inter;
}

}  // namespace iqc
