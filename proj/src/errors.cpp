#include "hadafrac/errors.hpp"

#include <utility>

namespace hadafrac {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

EvaluationError::EvaluationError(const std::string& what, std::string subexpression, double tau)
    : std::runtime_error(what), subexpression_(std::move(subexpression)), tau_(tau) {}

PreconditionError::PreconditionError(const std::string& what, double tau)
    : std::invalid_argument(what), tau_(tau) {}

}  // namespace hadafrac
