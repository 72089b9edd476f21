#pragma once

#include <string>

#include "strato/field.hpp"

namespace strato {

// Field snapshot file: a text header terminated by a blank line, then raw
// little-endian IEEE-754 doubles as (re,im) pairs, components outermost,
// then row-major modes with the xi_1 index slowest.
//
//   strato-field 1
//   grid <n1> <n2> <n3>
//   period <L1> <L2> <L3>
//   components <nc>
//   endianness little
//
void write_snapshot(const std::string& path, const Field4& f);
Field4 read_snapshot(const std::string& path);

}  // namespace strato
