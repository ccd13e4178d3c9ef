#ifndef LSREAL_ERROR_HPP
#define LSREAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lsreal {

enum class ErrorCode {
    invalid_argument,  // precondition violated
    parse,             // malformed input text
    budget,            // resource cap exceeded
    mismatch,          // verification mismatch
    unknown_name,      // unknown catalog entry etc.
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace lsreal

#endif
