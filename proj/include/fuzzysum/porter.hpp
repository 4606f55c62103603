#ifndef FUZZYSUM_PORTER_HPP
#define FUZZYSUM_PORTER_HPP

#include <string>
#include <string_view>

namespace fuzzysum {

// Porter's suffix-stripping algorithm for English. Expects a lowercase
// word; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

} // namespace fuzzysum

#endif
