#include <isobaric/bfile.hpp>

#include <fstream>
#include <sstream>

namespace isobaric {

BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    long expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text)) continue;
        if (!(fields >> value_text) || (fields >> extra)) {
            throw DomainError("b-file line " + std::to_string(line_no) + ": expected `n value`");
        }
        long index = 0;
        try {
            std::size_t used = 0;
            index = std::stol(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument(index_text);
        } catch (const std::exception&) {
            throw DomainError("b-file line " + std::to_string(line_no) + ": bad index '" + index_text + "'");
        }
        if (first) {
            out.offset = index;
            expected = index;
            first = false;
        }
        if (index != expected) {
            throw DomainError("b-file line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                              " where " + std::to_string(expected) + " was expected");
        }
        out.values.push_back(parse_int(value_text));
        ++expected;
    }
    if (first) throw DomainError("b-file contains no data lines");
    return out;
}

BFile read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open b-file " + path.string());
    return parse_bfile(in);
}

}  // namespace isobaric
