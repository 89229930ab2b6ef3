#ifndef ISOBARIC_CLI_HPP
#define ISOBARIC_CLI_HPP

#include <ostream>

namespace isobaric::cli {

inline constexpr int kSchemaVersion = 1;

// Exit status: 0 ok, 1 domain error or failed identity, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isobaric::cli

#endif
