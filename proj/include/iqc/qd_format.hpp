#pragma once

// Line-based text form of a circuit.
//
//   # meta name=cnx-r3-n7 io_radix=2 radix=3 controls=7 ...
//   qudit 0 dim=3 role=control
//   gate cx+k ctrl=0@1 tgt=2 k=1
//   gate swap tgt=4,- @17,18            (routed: sites after '@', '-' = empty)
//   # initial-mapping: 0:65 1:66 ...
//   # final-mapping: 0:65 1:54 ...

#include "iqc/circuit.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace iqc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

std::string to_qd(const Circuit& c);
std::string to_qd(const GateApp& op);

Circuit parse_qd(std::istream& in);
Circuit parse_qd_string(const std::string& text);
Circuit load_qd_file(const std::string& path);
void save_qd_file(const Circuit& c, const std::string& path);

}  // namespace iqc
