#ifndef LLG_REPORT_HPP
#define LLG_REPORT_HPP

#include <string>

#include "cycles.hpp"
#include "graph.hpp"

namespace llg {

// Byte-deterministic CLI reports. ok=false marks the exit-1 outcomes that are
// reported on stdout rather than thrown (failed verification verdicts).
struct TextReport {
    std::string text;
    bool ok = true;
};

TextReport report_verify(const Graph& g);
std::string report_star(const Graph& g);
std::string report_charpoly(const Graph& g);
std::string report_theorem(const Graph& g);
std::string report_census(const Graph& g);
std::string report_reconstruct(const Graph& h);
TextReport report_roundtrip(const Graph& g);
std::string report_hex_counterexample(const HexCounterexample& hx, const std::string& path);

std::string format_decimal3(double x);

}  // namespace llg

#endif
