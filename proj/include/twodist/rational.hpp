#pragma once

#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace twodist {

// Exact arithmetic for charges. Denominators stay tiny (lcm of degrees and
// face lengths), so long long never comes close to overflow here.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace twodist
