#pragma once

// Level-keyed gate durations. A level label is an occupied dimension minus
// one: 1 = qubit, 2 = qutrit, 3 = ququart, 4 = ququint.

#include "iqc/circuit.hpp"

#include <istream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iqc {

enum class TimingKind { Single, Interaction, Swap };

std::string_view to_string(TimingKind kind);

class TimingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TimingTable {
public:
    static constexpr int kMaxLevel = 4;

    /// Every entry of the built-in table, asterisked rows included.
    static TimingTable load_default();

    /// Applies `kind,level_a,level_b,ns` rows on top of this table. A header
    /// line and `#` comments are skipped; level_b is ignored for singles.
    void apply_overrides(std::istream& in);

    double single(int level) const;
    double interaction(int a, int b) const;
    double swap(int a, int b) const;

    bool has(TimingKind kind, int a, int b = 0) const;
    void set(TimingKind kind, int a, int b, double ns);
    void erase(TimingKind kind, int a, int b = 0);

    /// Rows with a 0 label are kept but never consulted by lookups.
    std::map<std::pair<int, int>, std::pair<double, double>> inert_rows() const;

    /// Throws TimingError unless durations are positive, complete over
    /// labels 1..kMaxLevel, monotone, and swap >= interaction.
    void check() const;

    friend bool operator==(const TimingTable&, const TimingTable&) = default;

private:
    static std::pair<int, int> key(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }
    const std::map<std::pair<int, int>, double>& pair_map(TimingKind kind) const;
    std::map<std::pair<int, int>, double>& pair_map(TimingKind kind);

    std::map<int, double> single_;
    std::map<std::pair<int, int>, double> interaction_;
    std::map<std::pair<int, int>, double> swap_;

    friend TimingTable interpolate(const TimingTable& partial);
};

/// Fills every missing entry over labels 1..kMaxLevel.
///
/// Pair entries are filled first by bracketing along the diagonal, then
/// along either label axis, and finally by extending the nearest two points
/// of the row. Filled values never fall below an entry with smaller labels.
/// Requires anchors (1,1), (1,3), (3,3) and singles 1 and 3.
TimingTable interpolate(const TimingTable& partial);

/// Duration of one native gate (or SWAP) given the occupied dimension of
/// each operand, in operand order.
double gate_duration(const GateApp& op, std::span<const int> dims, const TimingTable& t);

}  // namespace iqc
