#include "satlab/wide.hpp"

#include <algorithm>

namespace satlab {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(abs128(v));
  return to_string(static_cast<u128>(v));
}

int256 to_int256(i128 v) {
  const bool neg = v < 0;
  const u128 a = abs128(v);
  int256 r = static_cast<u64>(a >> 64);
  r <<= 64;
  r += static_cast<u64>(a);
  return neg ? -r : r;
}

}  // namespace satlab
