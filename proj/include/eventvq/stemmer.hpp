#pragma once

#include <string>
#include <string_view>

namespace eventvq {

// Classic Porter (1980) suffix stripper. Input is expected lowercase;
// words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace eventvq
