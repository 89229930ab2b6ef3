#ifndef ISOBARIC_BFILE_HPP
#define ISOBARIC_BFILE_HPP

#include <isobaric/numeric.hpp>

#include <filesystem>
#include <istream>
#include <vector>

namespace isobaric {

// Sequence read from `n a(n)` lines; `#` starts a comment.
struct BFile {
    long offset = 0;
    std::vector<Int> values;
};

BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::filesystem::path& path);

}  // namespace isobaric

#endif
