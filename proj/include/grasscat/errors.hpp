#pragma once

#include <stdexcept>
#include <string>

namespace grasscat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationUnstable : Error {
    int level;
    TruncationUnstable(const std::string& what, int lvl) : Error(what), level(lvl) {}
};

struct NotAlmostConsecutive : Error { using Error::Error; };
struct MismatchedAmbient : Error { using Error::Error; };
struct ProjectiveInput : Error { using Error::Error; };
struct NotRankOne : Error { using Error::Error; };
struct EmbeddingFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace grasscat
