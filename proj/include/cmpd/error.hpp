#ifndef CMPD_ERROR_HPP
#define CMPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cmpd {

enum class Errc {
    NotConnected,
    SizeLimitExceeded,
    NotComposable,
    NotMaximalWeakTree,
    UnknownGenerator,
    InvalidTable,
    NotSubcomputad,
    InfiniteFreeCategory,
    ObjectNotFound,
    NotStrictlyIncreasing,
    NotMonotone,
    InvalidTwoCellWord,
    MultipleZeroCells,
    NotFcsTriple,
    ParseError,
    UnresolvedReference,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace cmpd

#endif
