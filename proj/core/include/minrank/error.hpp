#ifndef MINRANK_ERROR_HPP
#define MINRANK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minrank {

/// Malformed input text. `position()` is a byte offset for single-token
/// parsers and a 1-based line number for file loaders.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace minrank

#endif  // MINRANK_ERROR_HPP
