#include "lat2red/textio.hpp"

#include <cctype>

namespace lat2red {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool parse_integer(std::string_view tok, BigInt& out) {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (std::size_t j = i; j < tok.size(); ++j)
        if (tok[j] < '0' || tok[j] > '9') return false;
    std::string digits(tok.substr(i));
    if (mpz_set_str(out.get_mpz_t(), digits.c_str(), 10) != 0) return false;
    if (tok[0] == '-') out = -out;
    return true;
}

}  // namespace

std::optional<Basis> parse_basis_line(std::string_view line) {
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size() || line[pos] == '#') return std::nullopt;
    BigInt v[4];
    int count = 0;
    while (pos < line.size()) {
        std::size_t end = pos;
        while (end < line.size() && !is_space(line[end])) ++end;
        if (count == 4 || !parse_integer(line.substr(pos, end - pos), v[count]))
            throw precondition_error("malformed basis line: expected four integers");
        ++count;
        pos = end;
        while (pos < line.size() && is_space(line[pos])) ++pos;
    }
    if (count != 4) throw precondition_error("malformed basis line: expected four integers");
    return Basis{{v[0], v[1]}, {v[2], v[3]}};
}

std::string format_basis(const Basis& B) {
    return B.a.v1.get_str() + ' ' + B.a.v2.get_str() + ' ' + B.b.v1.get_str() + ' ' + B.b.v2.get_str();
}

std::optional<Basis> read_basis(std::istream& in, std::size_t* line_no) {
    std::string line;
    while (std::getline(in, line)) {
        if (line_no) ++*line_no;
        if (auto b = parse_basis_line(line)) return b;
    }
    return std::nullopt;
}

mpq_class parse_rational(std::string_view s) {
    const std::string str(s);
    const auto bad = [&] { return precondition_error("not a rational number: " + str); };
    BigInt num, den = 1;
    const auto slash = str.find('/');
    const auto dot = str.find('.');
    if (str.empty()) throw bad();
    if (slash != std::string::npos) {
        if (!parse_integer(s.substr(0, slash), num) || slash + 1 == str.size() ||
            !parse_integer(s.substr(slash + 1), den) || sgn(den) == 0)
            throw bad();
    } else if (dot != std::string::npos) {
        const std::string frac = str.substr(dot + 1);
        std::string whole = str.substr(0, dot);
        if (whole.empty() || whole == "-" || whole == "+") whole += '0';
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
        if (!parse_integer(whole + frac, num)) throw bad();
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else if (!parse_integer(s, num)) {
        throw bad();
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace lat2red
