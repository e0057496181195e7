#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polysieve {

using BigInt = boost::multiprecision::cpp_int;


// 128-bit intermediates for 64-bit modular products.
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

}  // namespace polysieve
