#pragma once

#include <string>

#include "hwp/factor.hpp"
#include "hwp/graph.hpp"

namespace hwp {

// Text format, one item per line:
//
//   HWP-CERT 1
//   host wreath m=9 q=16
//   factors c16=14 cm=9 matchings=1
//   factor 0 cycle len=16 label=zigzag d=5 #1
//   cycle 0:0 1:5 0:10 ...
//   ...
//   factor 23 matching label=lemma4K8 1-factor
//   edge 0:0 1:9
//   end
//
// Cycle factors come first, then matchings; indices count up from 0.

/// Host line payload, e.g. `cayley m=9 n=16 conn=r:+-1;c:0,+-2`.
std::string format_host(const HostDescriptor& host);
/// Inverse of format_host. Throws ParseError.
HostDescriptor parse_host(const std::string& text);

std::string serialize_certificate(const Decomposition& d);
/// Throws ParseError on malformed text, including a census line that does not
/// match the factors that follow it.
Decomposition parse_certificate(const std::string& text);

}  // namespace hwp
