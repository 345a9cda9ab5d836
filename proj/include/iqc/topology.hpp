#pragma once

#include "iqc/circuit.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace iqc {

class TimingTable;

/// Rectangular grid with 4-neighbour coupling. Site id = row * cols + col.
class Topology {
public:
    Topology(int rows, int cols, int site_max_dim = kMaxDim);

    /// Parses "RxC", e.g. "12x12".
    static Topology parse_grid(std::string_view spec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_sites() const { return rows_ * cols_; }
    int row_of(SiteId s) const { return s / cols_; }
    int col_of(SiteId s) const { return s % cols_; }
    SiteId site(int row, int col) const { return row * cols_ + col; }
    bool valid(SiteId s) const { return s >= 0 && s < num_sites(); }
    int site_max_dim(SiteId) const { return site_max_dim_; }

    const std::vector<SiteId>& neighbors(SiteId s) const { return adj_.at(static_cast<std::size_t>(s)); }
    /// Every coupling edge once, as (lower id, higher id).
    const std::vector<std::pair<SiteId, SiteId>>& edges() const { return edges_; }

    int hops(SiteId a, SiteId b) const;
    bool adjacent(SiteId a, SiteId b) const { return hops(a, b) == 1; }

private:
    int rows_;
    int cols_;
    int site_max_dim_;
    std::vector<std::vector<SiteId>> adj_;
    std::vector<std::pair<SiteId, SiteId>> edges_;
};

/// Floor-centre site (floor((rows-1)/2), floor((cols-1)/2)).
SiteId center_site(const Topology& topo);

/// Estimated time for qudits at sites a and b (level labels la, lb) to
/// interact: (hops-1) SWAPs of the lower-level qudit past level-1 bystanders,
/// then one interaction. 0 when a == b.
double distance_time(const Topology& topo, SiteId a, SiteId b, int la, int lb, const TimingTable& t);

}  // namespace iqc
