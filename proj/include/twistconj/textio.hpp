#pragma once

#include <string>
#include <string_view>

#include "twistconj/group.hpp"

namespace twistconj {

/// "((m,k),n)"; parse accepts optional whitespace anywhere between tokens
/// and round-trips exactly with format_elem.
Elem parse_elem(std::string_view text);
std::string format_elem(const Elem& e);

/// Twist syntax: "phi", "phi^k" (k >= 0), or "M=[[a,b],[c,d]];eps=+1|-1".
Twist parse_twist(const Group& g, std::string_view text);
std::string format_twist(const Group& g, const Twist& t);

/// Matrix syntax for the congruence command: "A", "A^k", "-A", "-A^k",
/// or an explicit square bracket literal "[[a,b,...],[...],...]".
IntMat parse_matrix(const Group& g, std::string_view text);

} // namespace twistconj
