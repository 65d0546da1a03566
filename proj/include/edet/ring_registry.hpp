#pragma once

#include "edet/ring.hpp"

namespace edet {

/// Resolves a ring name as accepted in matrix-file headers and CLI flags:
///   rational | mod:<p> | quaternion | octonion | table:<path>
///   | matrixring:<m>:<inner> | poly:<n> | free:<n>
/// matrixring recurses on <inner>. Throws ParseError on anything else.
RingPtr make_ring(const std::string& name);

} // namespace edet
