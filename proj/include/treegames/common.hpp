#ifndef TREEGAMES_COMMON_HPP
#define TREEGAMES_COMMON_HPP

#include <stdexcept>
#include <string>

namespace tg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by parsers; carries a location so the CLI can print line/column
// diagnostics and exit with the parse-error code.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column = 0)
        : Error(format(msg, line, column)), line(line), column(column) {}

    // For rethrowing with extra context without duplicating the location.
    static ParseError wrapped(const std::string& full_message, int line, int column) {
        return ParseError(Raw{}, full_message, line, column);
    }

    int line;
    int column;

private:
    struct Raw {};
    ParseError(Raw, const std::string& full, int l, int c) : Error(full), line(l), column(c) {}
    static std::string format(const std::string& msg, int line, int column) {
        return msg + " (line " + std::to_string(line) +
               (column > 0 ? ", column " + std::to_string(column) : "") + ")";
    }
};

// A structurally malformed strategy tree. Kept distinct from "not winning".
struct InvalidStrategy : Error {
    explicit InvalidStrategy(const std::string& msg) : Error(msg) {}
};

} // namespace tg

#endif
