#ifndef ISOBARIC_TESTS_SUPPORT_HPP
#define ISOBARIC_TESTS_SUPPORT_HPP

#include <isobaric/isopoly.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace isobaric::testing {

// Parses "3 t1^2 t2 - t3 + 4" into a polynomial.
inline IsobaricPoly parse_poly(const std::string& text) {
    IsobaricPoly out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto number = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected a number in '" + text + "'");
        return std::stoul(text.substr(start, i - start));
    };
    int sign = 1;
    skip();
    if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
    }
    while (true) {
        skip();
        Int coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = Int(number());
        std::vector<unsigned> mult;
        skip();
        while (i < text.size() && text[i] == 't') {
            ++i;
            auto j = number();
            unsigned e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = static_cast<unsigned>(number());
            }
            if (mult.size() < j) mult.resize(j, 0);
            mult[j - 1] += e;
            skip();
        }
        out += IsobaricPoly::monomial(Alpha(mult), sign * coeff);
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+') sign = 1;
        else if (text[i] == '-') sign = -1;
        else throw std::invalid_argument("unexpected '" + std::string(1, text[i]) + "' in '" + text + "'");
        ++i;
    }
    return out;
}

// Reference tables as printed, in printed term order.
inline const std::vector<std::string>& printed_f() {
    static const std::vector<std::string> lines{
        "1",
        "t1",
        "t1^2 + t2",
        "t1^3 + 3 t1 t2 + t3",
        "t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4",
        "t1^5 + 4 t1^3 t2 + 2 t1 t2^2 + 2 t2 t3 + 2 t1 t4 + t5",
        "t1^6 + 5 t1^4 t2 + 6 t1^2 t2^2 + t2^3 + 4 t1^3 t3 + t3^2 + 6 t1 t2 t3 + 3 t1^2 t4 + 2 t2 t4 + 2 t1^2 t5 + t6",
    };
    return lines;
}

// G_0 is printed as k and is checked separately.
inline const std::vector<std::string>& printed_g() {
    static const std::vector<std::string> lines{
        "",
        "t1",
        "t1^2 + 2 t2",
        "t1^3 + 3 t1 t2 + 3 t3",
        "t1^4 + 4 t1^2 t2 + 2 t2^2 + 4 t1 t3 + 4 t4",
        "t1^5 + 5 t1^5 t2 + 5 t1 t2^2 + 5 t2 t3 + 5 t1 t4 + 5 t5",
        "t1^6 + 6 t1^4 t2 + 6 t1^2 t2^2 + 2 t2^3 + 6 t1^3 t3 + 3 t3^2 + 12 t1 t2 t3 + 6 t1^2 t4 + 6 t2 t4 + 6 t1^2 t5 + 6 t6",
    };
    return lines;
}

struct Erratum {
    char family;  // 'F' or 'G'
    unsigned n;
    std::string printed_minus_true;
};

// Known misprints: printed line minus the computed polynomial.
inline const std::vector<Erratum>& table_errata() {
    static const std::vector<Erratum> errata{
        {'F', 3, "t1 t2"},
        {'F', 5, "-t1 t2^2 - 3 t1^2 t3"},
        {'F', 6, "2 t1^2 t5 - 2 t1 t5"},
        {'G', 5, "5 t1^5 t2 - 5 t1^3 t2 - 5 t1^2 t3"},
        {'G', 6, "-3 t1^2 t2^2 + 6 t1^2 t5 - 6 t1 t5"},
    };
    return errata;
}

// Stirling numbers of the second kind S(n, k), n <= 10, as tabulated.
inline const std::vector<std::vector<long>>& stirling2_table() {
    static const std::vector<std::vector<long>> rows{
        {1},
        {0, 1},
        {0, 1, 1},
        {0, 1, 3, 1},
        {0, 1, 7, 6, 1},
        {0, 1, 15, 25, 10, 1},
        {0, 1, 31, 90, 65, 15, 1},
        {0, 1, 63, 301, 350, 140, 21, 1},
        {0, 1, 127, 966, 1701, 1050, 266, 28, 1},
        {0, 1, 255, 3025, 7770, 6951, 2646, 462, 36, 1},
        {0, 1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1},
    };
    return rows;
}

}  // namespace isobaric::testing

#endif
