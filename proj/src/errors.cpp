#include "majority/errors.hpp"

namespace majority {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

}  // namespace majority
